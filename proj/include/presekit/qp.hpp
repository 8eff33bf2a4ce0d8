#pragma once

#include <algorithm>

#include "algebra.hpp"

namespace presekit {

// One summand of a potential: a scalar times an oriented cycle, stored as a
// sequence of arrow indices in application order (arrows[0] acts first).
struct CycleTerm {
    long long coeff = 1;
    std::vector<int> cycle;
};

// A finite linear combination of oriented cycles, considered up to rotation of
// each cycle. Construct through make_potential, which validates the terms and
// normalizes each cycle to its lexicographically least rotation.
struct Potential {
    std::vector<CycleTerm> terms;
};

namespace detail {

inline std::vector<int> least_rotation(const std::vector<int>& c) {
    std::vector<int> best = c;
    std::vector<int> cur = c;
    for (std::size_t k = 1; k < c.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace detail

inline Potential make_potential(const Quiver& q,
                                const std::vector<CycleTerm>& terms) {
    for (const Arrow& a : q.arrows)
        for (const Arrow& b : q.arrows)
            if (a.head == b.tail && b.head == a.tail && a.tail != a.head)
                throw Inadmissible("potential quiver has an oriented 2-cycle: " +
                                   a.name + ", " + b.name);
    Potential s;
    for (const CycleTerm& t : terms) {
        if (t.cycle.empty())
            throw Inadmissible("potential term must be a nontrivial cycle");
        for (std::size_t k = 0; k < t.cycle.size(); ++k) {
            const Arrow& cur = q.arrows.at(t.cycle[k]);
            const Arrow& nxt = q.arrows.at(t.cycle[(k + 1) % t.cycle.size()]);
            if (cur.head != nxt.tail)
                throw Inadmissible("potential term is not an oriented cycle");
        }
        CycleTerm c{t.coeff, detail::least_rotation(t.cycle)};
        bool merged = false;
        for (CycleTerm& u : s.terms)
            if (u.cycle == c.cycle) {
                u.coeff += c.coeff;
                merged = true;
            }
        if (!merged) s.terms.push_back(std::move(c));
    }
    std::erase_if(s.terms, [](const CycleTerm& t) { return t.coeff == 0; });
    return s;
}

// The cyclic derivative with respect to one arrow: for every occurrence of the
// arrow in a cycle, delete it and read the rest of the cycle starting just
// after the occurrence. The result is a combination of paths from the arrow's
// head back to its tail.
inline Relation cyclic_derivative(const Quiver& q, const Potential& s,
                                  int arrow) {
    Relation r;
    for (const CycleTerm& t : s.terms) {
        const std::size_t len = t.cycle.size();
        for (std::size_t k = 0; k < len; ++k) {
            if (t.cycle[k] != arrow) continue;
            PathTerm p;
            p.coeff = t.coeff;
            p.tail = q.arrows.at(arrow).head;
            for (std::size_t j = 1; j < len; ++j)
                p.arrows.push_back(t.cycle[(k + j) % len]);
            r.terms.push_back(std::move(p));
        }
    }
    return r;
}

// The quotient of the path algebra by the ideal generated by all cyclic
// derivatives of the potential, truncated at path length L. Finiteness of the
// result is checked by the nilpotency test of the underlying build.
inline AlgebraModel jacobian_algebra(const Quiver& q, const Potential& s,
                                     int L) {
    std::vector<Relation> rels;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        Relation r = cyclic_derivative(q, s, static_cast<int>(a));
        if (!r.terms.empty()) rels.push_back(std::move(r));
    }
    return AlgebraModel::build(q, rels, L);
}

}  // namespace presekit
