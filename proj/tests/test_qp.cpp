#include <catch2/catch_amalgamated.hpp>

#include <presekit/qp.hpp>

#include "helpers.hpp"

using namespace presekit;

namespace {

Quiver cycle_quiver() {
    Quiver q;
    q.vertices = {"v", "w", "u"};
    q.arrows = {{"a", 0, 2}, {"b", 2, 1}, {"c", 1, 0}, {"d", 2, 1}};
    return q;
}

bool same_relation(const Relation& x, const Relation& y) {
    if (x.terms.size() != y.terms.size()) return false;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
        if (x.terms[i].coeff != y.terms[i].coeff ||
            x.terms[i].arrows != y.terms[i].arrows)
            return false;
    return true;
}

// Independent route to the cyclic derivative: enumerate all rotations of each
// cycle and keep the prefix of those ending in the given arrow.
Relation rotation_oracle(const Quiver& q, const Potential& s, int arrow) {
    Relation r;
    for (const CycleTerm& t : s.terms) {
        std::vector<int> rot = t.cycle;
        for (std::size_t k = 0; k < t.cycle.size(); ++k) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot.back() != arrow) continue;
            PathTerm p;
            p.coeff = t.coeff;
            p.tail = q.arrows.at(arrow).head;
            p.arrows.assign(rot.begin(), rot.end() - 1);
            r.terms.push_back(std::move(p));
        }
    }
    return r;
}

}  // namespace

TEST_CASE("cyclic derivatives of the triangle potential") {
    Quiver q = cycle_quiver();
    Potential s = make_potential(q, {{1, {0, 1, 2}}});  // apply a, b, then c
    CHECK(same_relation(cyclic_derivative(q, s, 0),
                        Relation{{PathTerm{1, 2, {1, 2}}}}));  // cb
    CHECK(same_relation(cyclic_derivative(q, s, 1),
                        Relation{{PathTerm{1, 1, {2, 0}}}}));  // ac
    CHECK(same_relation(cyclic_derivative(q, s, 2),
                        Relation{{PathTerm{1, 0, {0, 1}}}}));  // ba
    // absent arrow differentiates to zero
    CHECK(cyclic_derivative(q, s, 3).terms.empty());
    // scalars ride along
    Potential s2 = make_potential(q, {{2, {0, 1, 2}}});
    Relation d = cyclic_derivative(q, s2, 0);
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coeff == 2);
    CHECK(d.terms[0].arrows == std::vector<int>{1, 2});
}

TEST_CASE("rotation invariance and linearity") {
    Quiver q = cycle_quiver();
    // all rotations of the triangle normalize to the same stored cycle
    Potential s0 = make_potential(q, {{1, {0, 1, 2}}});
    Potential s1 = make_potential(q, {{1, {1, 2, 0}}});
    Potential s2 = make_potential(q, {{1, {2, 0, 1}}});
    REQUIRE(s0.terms.size() == 1);
    CHECK(s0.terms[0].cycle == s1.terms[0].cycle);
    CHECK(s0.terms[0].cycle == s2.terms[0].cycle);
    for (int a = 0; a < 4; ++a) {
        CHECK(same_relation(cyclic_derivative(q, s0, a),
                            cyclic_derivative(q, s1, a)));
        CHECK(same_relation(cyclic_derivative(q, s0, a),
                            rotation_oracle(q, s0, a)));
    }
    // sums of potentials differentiate termwise
    Potential both = make_potential(q, {{1, {0, 1, 2}}, {3, {0, 3, 2}}});
    for (int a = 0; a < 4; ++a) {
        Relation lhs = cyclic_derivative(q, both, a);
        Relation rhs = cyclic_derivative(q, make_potential(q, {{1, {0, 1, 2}}}), a);
        Relation rhs2 =
            cyclic_derivative(q, make_potential(q, {{3, {0, 3, 2}}}), a);
        rhs.terms.insert(rhs.terms.end(), rhs2.terms.begin(), rhs2.terms.end());
        CHECK(same_relation(lhs, rhs));
    }
    // equal cycles merge; opposite coefficients cancel
    Potential merged = make_potential(q, {{1, {0, 1, 2}}, {2, {1, 2, 0}}});
    REQUIRE(merged.terms.size() == 1);
    CHECK(merged.terms[0].coeff == 3);
    CHECK(make_potential(q, {{1, {0, 1, 2}}, {-1, {1, 2, 0}}}).terms.empty());
}

TEST_CASE("potential validation") {
    Quiver q = cycle_quiver();
    CHECK_THROWS_AS(make_potential(q, {{1, {0, 1}}}), Inadmissible);  // not a cycle
    CHECK_THROWS_AS(make_potential(q, {{1, {}}}), Inadmissible);
    // a quiver with a 2-cycle is refused outright
    Quiver k;
    k.vertices = {"u", "v"};
    k.arrows = {{"p", 0, 1}, {"q", 1, 0}};
    CHECK_THROWS_AS(make_potential(k, {}), Inadmissible);
}

TEST_CASE("the jacobian algebra of the triangle potential") {
    Quiver q = cycle_quiver();
    Potential s = make_potential(q, {{1, {0, 1, 2}}});
    AlgebraModel j = jacobian_algebra(q, s, 6);
    AlgebraModel fixture = testfix::cycpot3();
    CHECK(j.dim() == fixture.dim());
    CHECK(j.cartan() == fixture.cartan());
    CHECK(j.content_hash() == fixture.content_hash());
}

TEST_CASE("zero potential on an acyclic quiver gives the path algebra") {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    AlgebraModel j = jacobian_algebra(q, Potential{}, 3);
    AlgebraModel plain = AlgebraModel::build(q, {}, 3);
    CHECK(j.dim() == plain.dim());
    CHECK(j.content_hash() == plain.content_hash());
}
