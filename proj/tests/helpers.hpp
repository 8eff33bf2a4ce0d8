#pragma once

#include <presekit/algebra.hpp>

namespace testfix {

using namespace presekit;

// x =a1,a2=> y =b1,b2=> z with b1a1 = b2a2 = 0.
inline AlgebraModel string3() {
    Quiver q;
    q.vertices = {"x", "y", "z"};
    q.arrows = {{"a1", 0, 1}, {"a2", 0, 1}, {"b1", 1, 2}, {"b2", 1, 2}};
    std::vector<Relation> rels;
    rels.push_back({{PathTerm{1, 0, {0, 2}}}});  // b1*a1
    rels.push_back({{PathTerm{1, 0, {1, 3}}}});  // b2*a2
    return AlgebraModel::build(q, rels, 3);
}

// 1 =a=> 2, no relations.
inline AlgebraModel a2() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return AlgebraModel::build(q, {}, 2);
}

// u =t1,t2,t3=> v, no relations.
inline AlgebraModel kron3() {
    Quiver q;
    q.vertices = {"u", "v"};
    q.arrows = {{"t1", 0, 1}, {"t2", 0, 1}, {"t3", 0, 1}};
    return AlgebraModel::build(q, {}, 2);
}

// u <=> v with three arrows each way; all length-2 paths vanish.
inline AlgebraModel yinyang3() {
    Quiver q;
    q.vertices = {"u", "v"};
    q.arrows = {{"p1", 0, 1}, {"p2", 0, 1}, {"p3", 0, 1},
                {"q1", 1, 0}, {"q2", 1, 0}, {"q3", 1, 0}};
    std::vector<Relation> rels;
    for (int p = 0; p < 3; ++p)
        for (int qq = 3; qq < 6; ++qq) {
            rels.push_back({{PathTerm{1, 0, {p, qq}}}});
            rels.push_back({{PathTerm{1, 0, {qq, p}}}});
        }
    return AlgebraModel::build(q, rels, 2);
}

// 3-cycle a: v->u, b: u->w, c: w->v with relations cb, ac, ba (from the cyclic
// potential S = cba), plus an extra arrow d: u->w parallel to b.
inline AlgebraModel cycpot3() {
    Quiver q;
    q.vertices = {"v", "w", "u"};
    q.arrows = {{"a", 0, 2}, {"b", 2, 1}, {"c", 1, 0}, {"d", 2, 1}};
    std::vector<Relation> rels;
    rels.push_back({{PathTerm{1, 0, {1, 2}}}});  // c.b (apply b then c)
    rels.push_back({{PathTerm{1, 0, {2, 0}}}});  // a.c
    rels.push_back({{PathTerm{1, 0, {0, 1}}}});  // b.a
    return AlgebraModel::build(q, rels, 6);
}

}  // namespace testfix
