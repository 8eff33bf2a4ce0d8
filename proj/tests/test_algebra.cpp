#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace presekit;

TEST_CASE("string3 basis and Cartan matrix") {
    AlgebraModel a = testfix::string3();
    CHECK(a.dim() == 9);
    CHECK(a.dim_bigrade(0, 2) == 2);  // paths x -> z: b1a2, b2a1
    auto c = a.cartan();
    std::vector<std::vector<long long>> want = {{1, 2, 2}, {0, 1, 2}, {0, 0, 1}};
    CHECK(c == want);
}

TEST_CASE("a2 and kron3 are plain path algebras") {
    AlgebraModel a = testfix::a2();
    CHECK(a.dim() == 3);
    CHECK(a.cartan() == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
    CHECK(a.minimal_relations().empty());

    AlgebraModel k = testfix::kron3();
    CHECK(k.dim() == 5);
    CHECK(k.cartan() == std::vector<std::vector<long long>>{{1, 3}, {0, 1}});
}

TEST_CASE("yinyang3 dimension and Cartan") {
    AlgebraModel a = testfix::yinyang3();
    CHECK(a.dim() == 8);
    CHECK(a.cartan() == std::vector<std::vector<long long>>{{1, 3}, {3, 1}});
}

TEST_CASE("multiplication follows the relations") {
    AlgebraModel a = testfix::string3();
    int x = 0, y = 1;
    AlgElem a1 = a.arrow_elem(0), a2 = a.arrow_elem(1);
    AlgElem b1 = a.arrow_elem(2), b2 = a.arrow_elem(3);
    CHECK(a.multiply(b1, a1).is_zero());
    CHECK(a.multiply(b2, a2).is_zero());
    CHECK(!a.multiply(b1, a2).is_zero());
    CHECK(!a.multiply(b2, a1).is_zero());
    // units
    AlgElem ex = a.unit(x);
    CHECK(a.multiply(ex, ex).coords == ex.coords);
    AlgElem ey = a.unit(y);
    CHECK(a.multiply(ey, a1).coords == a1.coords);
    CHECK(a.multiply(a1, ex).coords == a1.coords);
}

TEST_CASE("associativity on all basis triples of each fixture") {
    for (const AlgebraModel& a :
         {testfix::string3(), testfix::a2(), testfix::yinyang3(),
          testfix::cycpot3()}) {
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                for (std::size_t k = 0; k < a.dim(); ++k) {
                    AlgElem bi = a.basis_elem(i), bj = a.basis_elem(j),
                            bk = a.basis_elem(k);
                    if (a.basis_path(j).head != a.basis_path(i).tail) continue;
                    if (a.basis_path(k).head != a.basis_path(j).tail) continue;
                    AlgElem l = a.multiply(a.multiply(bi, bj), bk);
                    AlgElem r = a.multiply(bi, a.multiply(bj, bk));
                    CHECK(l.coords == r.coords);
                }
    }
}

TEST_CASE("minimal relation sets") {
    AlgebraModel s = testfix::string3();
    auto q2 = s.minimal_relations();
    REQUIRE(q2.size() == 2);
    for (const RelElem& r : q2) {
        CHECK(r.tail == 0);
        CHECK(r.head == 2);
        CHECK(r.terms.size() == 1);
        CHECK(r.terms[0].second.size() == 2);
    }

    AlgebraModel y = testfix::yinyang3();
    auto q2y = y.minimal_relations();
    CHECK(q2y.size() == 18);
    for (const RelElem& r : q2y) CHECK(r.terms.size() == 1);
}

TEST_CASE("opposite algebra swaps bigrades") {
    AlgebraModel s = testfix::string3();
    AlgebraModel so = s.opposite();
    CHECK(so.dim() == s.dim());
    for (int v = 0; v < s.n(); ++v)
        for (int w = 0; w < s.n(); ++w)
            CHECK(so.dim_bigrade(w, v) == s.dim_bigrade(v, w));
    // Cartan of the opposite is the transpose
    auto c = s.cartan(), co = so.cartan();
    for (int v = 0; v < s.n(); ++v)
        for (int w = 0; w < s.n(); ++w) CHECK(co[v][w] == c[w][v]);
    // double opposite matches
    AlgebraModel soo = so.opposite();
    for (int v = 0; v < s.n(); ++v)
        for (int w = 0; w < s.n(); ++w)
            CHECK(soo.dim_bigrade(v, w) == s.dim_bigrade(v, w));
    // transporting an element there and back is the identity
    AlgElem b1a2 = s.multiply(s.arrow_elem(2), s.arrow_elem(1));
    AlgElem there = s.to_opposite(so, b1a2);
    CHECK(!there.is_zero());
    AlgElem back = so.to_opposite(soo, there);
    CHECK(back.coords == b1a2.coords);
}

TEST_CASE("raising the length bound does not change the basis") {
    Quiver q;
    q.vertices = {"x", "y", "z"};
    q.arrows = {{"a1", 0, 1}, {"a2", 0, 1}, {"b1", 1, 2}, {"b2", 1, 2}};
    std::vector<Relation> rels;
    rels.push_back({{PathTerm{1, 0, {0, 2}}}});
    rels.push_back({{PathTerm{1, 0, {1, 3}}}});
    AlgebraModel a3 = AlgebraModel::build(q, rels, 3);
    AlgebraModel a5 = AlgebraModel::build(q, rels, 5);
    REQUIRE(a3.dim() == a5.dim());
    for (std::size_t i = 0; i < a3.dim(); ++i) {
        CHECK(a3.basis_path(i).arrows == a5.basis_path(i).arrows);
        CHECK(a3.basis_path(i).tail == a5.basis_path(i).tail);
    }
}

TEST_CASE("non-nilpotent input is rejected") {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"loop", 0, 0}};
    CHECK_THROWS_AS(AlgebraModel::build(q, {}, 4), NotNilpotent);
}

TEST_CASE("inadmissible relations are rejected") {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    std::vector<Relation> rels;
    rels.push_back({{PathTerm{1, 0, {0}}}});  // single arrow: length 1
    CHECK_THROWS_AS(AlgebraModel::build(q, rels, 2), Inadmissible);
}

TEST_CASE("cartan rows sum to projective dimensions, total equals dim A") {
    for (const AlgebraModel& a :
         {testfix::string3(), testfix::a2(), testfix::kron3(),
          testfix::yinyang3(), testfix::cycpot3()}) {
        auto c = a.cartan();
        long long total = 0;
        for (int v = 0; v < a.n(); ++v)
            for (int w = 0; w < a.n(); ++w) total += c[v][w];
        CHECK(total == static_cast<long long>(a.dim()));
    }
}

TEST_CASE("euler pairing") {
    CHECK(euler_pairing({2, -2, -1}, {1, 1, 1}) == -1);
    CHECK(euler_pairing({0, 0, 0}, {5, 6, 7}) == 0);
    // delta of P_v pairs to 1 against dim S_v
    CHECK(euler_pairing({1, 0, 0}, {1, 0, 0}) == 1);
    CHECK(euler_pairing({1, 0, 0}, {0, 1, 0}) == 0);
}

TEST_CASE("cycpot3 algebra is finite dimensional with the Jacobian relations") {
    AlgebraModel a = testfix::cycpot3();
    // basis: 3 units, 4 arrows, the paths d.a and c.d, and the cycle c.d.a
    CHECK(a.dim() == 10);
    // the potential cycle itself dies: c.b.a contains b.a
    AlgElem cba = a.multiply(a.arrow_elem(2), a.multiply(a.arrow_elem(1), a.arrow_elem(0)));
    CHECK(cba.is_zero());
    // but the cycle through d survives
    AlgElem cda = a.multiply(a.arrow_elem(2), a.multiply(a.arrow_elem(3), a.arrow_elem(0)));
    CHECK(!cda.is_zero());
    CHECK(a.dim_bigrade(0, 0) == 2);
    CHECK(a.dim_bigrade(1, 1) == 1);
    CHECK(a.dim_bigrade(2, 2) == 1);
}
