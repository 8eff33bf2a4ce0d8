#pragma once

#include "decompose.hpp"

namespace presekit {

struct NotRigid : DomainError {
    explicit NotRigid(const std::string& what) : DomainError(what) {}
};
struct NotAlmostComplete : DomainError {
    explicit NotAlmostComplete(const std::string& what) : DomainError(what) {}
};

struct RigidCollection {
    std::vector<Presentation> items;  // pairwise non-isomorphic indecomposables

    std::vector<DeltaVector> key() const {
        std::vector<DeltaVector> k;
        for (const Presentation& p : items) k.push_back(p.delta());
        std::sort(k.begin(), k.end());
        return k;
    }

    Presentation direct_sum_all(const AlgebraModel& A) const {
        Presentation s = Presentation::zero(A, {}, {});
        for (const Presentation& p : items) s = direct_sum(s, p);
        return s;
    }

    bool pairwise_rigid() const {
        for (const Presentation& p : items)
            for (const Presentation& q : items)
                if (E_dim(p, q) != 0) return false;
        return true;
    }
};

namespace detail {

inline std::vector<int> all_vertices(const AlgebraModel& A) {
    std::vector<int> v(A.n());
    for (int i = 0; i < A.n(); ++i) v[i] = i;
    return v;
}

inline void sort_items(std::vector<Presentation>& items) {
    std::sort(items.begin(), items.end(),
              [](const Presentation& a, const Presentation& b) {
                  return a.delta() < b.delta();
              });
}

// Collect the pairwise non-isomorphic indecomposable summands of the given
// presentations into `items`.
inline void union_indecomposables(const std::vector<Presentation>& parts,
                                  std::vector<Presentation>& items, int trials,
                                  Rng& rng) {
    for (const Presentation& p : parts) {
        bool dup = false;
        for (const Presentation& q : items)
            if (p.delta() == q.delta() && iso_test(p, q, 5, rng)) {
                dup = true;
                break;
            }
        if (!dup) items.push_back(p);
    }
    (void)trials;
}

}  // namespace detail

// Positive completion: a basis g_1..g_e of E(f, A) lifts to maps P1 -> A; the
// cone of the induced map f^e[-1] -> A is the complex [P1^e -> P0^e + A] with
// x -> (-f(x) per copy, g_t(x)). Its indecomposable summands together with
// those of f form a maximal rigid collection.
inline RigidCollection completion_pos(const Presentation& f, int trials,
                                      Rng& rng, Rng* lift_perturb = nullptr) {
    if (!is_rigid(f)) throw NotRigid("completion requires a rigid presentation");
    const AlgebraModel& A = *f.A;
    std::vector<int> verts = detail::all_vertices(A);
    Presentation astalk = Presentation::zero(A, {}, verts);
    DoubleComplexMap dc(f, astalk);  // U -> F.U from Hom(P0,A) to Hom(P1,A)
    std::vector<std::size_t> co = cokernel_coords(dc.phi);
    HomSpace h1A(A, f.rows, verts);
    std::size_t e = co.size(), nr = f.rows.size(), nc = f.cols.size();
    std::vector<int> rows, cols;
    for (std::size_t t = 0; t < e; ++t)
        rows.insert(rows.end(), f.rows.begin(), f.rows.end());
    for (std::size_t t = 0; t < e; ++t)
        cols.insert(cols.end(), f.cols.begin(), f.cols.end());
    cols.insert(cols.end(), verts.begin(), verts.end());
    Presentation cone = Presentation::zero(A, rows, cols);
    for (std::size_t t = 0; t < e; ++t) {
        std::vector<Fp> unit(h1A.dim(), Fp::zero());
        unit[co[t]] = Fp::one();
        auto g = h1A.from_vec(unit);
        if (lift_perturb) {
            // shift the lift by an element of Im(- . f): same homotopy class
            HomSpace h0A(A, f.cols, verts);
            auto pert = compose(A, f.F, h0A.sample(*lift_perturb));
            for (std::size_t j = 0; j < nr; ++j)
                for (int v : verts) g[j][v] = A.add(g[j][v], pert[j][v]);
        }
        for (std::size_t j = 0; j < nr; ++j) {
            for (std::size_t i = 0; i < nc; ++i)
                cone.F[t * nr + j][t * nc + i] = A.scale(-Fp::one(), f.F[j][i]);
            for (int v : verts)
                cone.F[t * nr + j][e * nc + v] = g[j][v];
        }
    }
    std::vector<Presentation> parts;
    decompose_into(minimize(f), trials, rng, parts);
    decompose_into(minimize(cone), trials, rng, parts);
    RigidCollection out;
    detail::union_indecomposables(parts, out.items, trials, rng);
    detail::sort_items(out.items);
    return out;
}

// Negative completion: dual, with a basis of Hom(A, f) modulo homotopy and the
// cone [A + P1^e -> P0^e].
inline RigidCollection completion_neg(const Presentation& f, int trials,
                                      Rng& rng, Rng* lift_perturb = nullptr) {
    if (!is_rigid(f)) throw NotRigid("completion requires a rigid presentation");
    const AlgebraModel& A = *f.A;
    std::vector<int> verts = detail::all_vertices(A);
    HomSpace hA1(A, verts, f.rows), hA0(A, verts, f.cols);
    Mat<Fp> m(hA0.dim(), hA1.dim());
    for (std::size_t c = 0; c < hA1.dim(); ++c) {
        std::vector<Fp> unit(hA1.dim(), Fp::zero());
        unit[c] = Fp::one();
        m.set_col(c, hA0.to_vec(compose(A, hA1.from_vec(unit), f.F)));
    }
    std::vector<std::size_t> co = cokernel_coords(m);
    std::size_t e = co.size(), nr = f.rows.size(), nc = f.cols.size();
    std::vector<int> rows, cols;
    for (std::size_t t = 0; t < e; ++t)
        rows.insert(rows.end(), f.rows.begin(), f.rows.end());
    rows.insert(rows.end(), verts.begin(), verts.end());
    for (std::size_t t = 0; t < e; ++t)
        cols.insert(cols.end(), f.cols.begin(), f.cols.end());
    Presentation cone = Presentation::zero(A, rows, cols);
    for (std::size_t t = 0; t < e; ++t) {
        std::vector<Fp> unit(hA0.dim(), Fp::zero());
        unit[co[t]] = Fp::one();
        auto u = hA0.from_vec(unit);
        if (lift_perturb) {
            auto pert = compose(A, hA1.sample(*lift_perturb), f.F);
            for (int v : verts)
                for (std::size_t i = 0; i < nc; ++i)
                    u[v][i] = A.add(u[v][i], pert[v][i]);
        }
        for (std::size_t i = 0; i < nc; ++i) {
            for (std::size_t j = 0; j < nr; ++j)
                cone.F[t * nr + j][t * nc + i] = f.F[j][i];
            for (int v : verts)
                cone.F[e * nr + v][t * nc + i] = u[v][i];
        }
    }
    std::vector<Presentation> parts;
    decompose_into(minimize(f), trials, rng, parts);
    decompose_into(minimize(cone), trials, rng, parts);
    RigidCollection out;
    detail::union_indecomposables(parts, out.items, trials, rng);
    detail::sort_items(out.items);
    return out;
}

inline bool is_maximal(const RigidCollection& c, const AlgebraModel& A) {
    return c.items.size() == static_cast<std::size_t>(A.n());
}

struct ComplementPair {
    Presentation pos, neg;
    long long d = 0;  // dim E(neg, pos); E(pos, neg) is checked to vanish
};

namespace detail {

// Integer normal vector of the hyperplane spanned by the given delta-classes;
// requires them linearly independent (n-1 vectors in rank n).
inline std::vector<long long> hyperplane_normal(
    const std::vector<DeltaVector>& deltas, int n) {
    Mat<Rat> m(deltas.size(), n);
    for (std::size_t i = 0; i < deltas.size(); ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rat{deltas[i][j]};
    if (rank(m) != deltas.size())
        throw NotAlmostComplete("item delta-classes are linearly dependent");
    Mat<Rat> k = kernel_basis(m);
    // scale the single kernel vector to integers
    mpz_class lcm = 1;
    for (std::size_t i = 0; i < k.rows(); ++i)
        lcm = ::lcm(lcm, k(i, 0).v.get_den());
    std::vector<long long> out(n);
    for (std::size_t i = 0; i < k.rows(); ++i) {
        mpq_class q = k(i, 0).v * lcm;
        q.canonicalize();
        out[i] = q.get_num().get_si();
    }
    return out;
}

}  // namespace detail

// The two complements of an almost-complete rigid collection, one from each
// completion, with the separating-hyperplane and triangle checks of the
// defining statement.
inline ComplementPair complements(const RigidCollection& c,
                                  const AlgebraModel& A, int trials, Rng& rng) {
    if (c.items.size() + 1 != static_cast<std::size_t>(A.n()))
        throw NotAlmostComplete("collection must have |Q0| - 1 items");
    std::vector<DeltaVector> deltas;
    for (const Presentation& p : c.items) deltas.push_back(p.delta());
    std::vector<long long> eta = detail::hyperplane_normal(deltas, A.n());
    Presentation sum = c.direct_sum_all(A);
    auto pick_new = [&](const RigidCollection& full) -> Presentation {
        for (const Presentation& p : full.items) {
            bool known = false;
            for (const Presentation& q : c.items)
                if (p.delta() == q.delta() && iso_test(p, q, 5, rng)) {
                    known = true;
                    break;
                }
            if (!known) return p;
        }
        throw DomainError("completion produced no new item");
    };
    ComplementPair out;
    out.pos = pick_new(completion_pos(sum, trials, rng));
    out.neg = pick_new(completion_neg(sum, trials, rng));
    long long sp = euler_pairing(eta, out.pos.delta());
    long long sn = euler_pairing(eta, out.neg.delta());
    if (sp == 0 || sn == 0 || (sp > 0) == (sn > 0))
        throw DomainError("complements are not separated by the hyperplane");
    out.d = E_dim(out.neg, out.pos);
    if (out.d < 1 || E_dim(out.pos, out.neg) != 0)
        throw DomainError("complement pair fails the triangle checks");
    return out;
}

// Replace item k by the other complement of the remaining items.
inline RigidCollection mutate(const RigidCollection& c, const AlgebraModel& A,
                              std::size_t k, int trials, Rng& rng) {
    if (!is_maximal(c, A)) throw NotAlmostComplete("mutation needs a maximal collection");
    RigidCollection rest;
    for (std::size_t i = 0; i < c.items.size(); ++i)
        if (i != k) rest.items.push_back(c.items[i]);
    ComplementPair pair = complements(rest, A, trials, rng);
    const Presentation& old = c.items[k];
    bool pos_is_old = pair.pos.delta() == old.delta() &&
                      iso_test(pair.pos, old, 5, rng);
    rest.items.push_back(pos_is_old ? pair.neg : pair.pos);
    detail::sort_items(rest.items);
    return rest;
}

struct ExchangeGraph {
    std::vector<std::vector<DeltaVector>> nodes;  // keys, in discovery order
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    int depth = 0;
    bool closed = false;  // no unexpanded frontier remained
};

// Stable serialization: nodes in lexicographic key order, edges renumbered
// accordingly and sorted.
inline std::string to_json(const ExchangeGraph& g) {
    std::vector<std::size_t> order(g.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.nodes[a] < g.nodes[b];
    });
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [a, b] : g.edges)
        edges.push_back({std::min(pos[a], pos[b]), std::max(pos[a], pos[b])});
    std::sort(edges.begin(), edges.end());
    std::string s = "{\n  \"depth\": " + std::to_string(g.depth) +
                    ",\n  \"closed\": " + (g.closed ? "true" : "false") +
                    ",\n  \"nodes\": [\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& node = g.nodes[order[i]];
        s += "    [";
        for (std::size_t j = 0; j < node.size(); ++j) {
            s += "[";
            for (std::size_t k = 0; k < node[j].size(); ++k) {
                s += std::to_string(node[j][k]);
                if (k + 1 < node[j].size()) s += ",";
            }
            s += "]";
            if (j + 1 < node.size()) s += ",";
        }
        s += i + 1 < order.size() ? "],\n" : "]\n";
    }
    s += "  ],\n  \"edges\": [\n";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        s += "    [" + std::to_string(edges[i].first) + "," +
             std::to_string(edges[i].second) +
             (i + 1 < edges.size() ? "],\n" : "]\n");
    }
    s += "  ]\n}\n";
    return s;
}

inline ExchangeGraph exchange_graph(const AlgebraModel& A, int depth,
                                    int trials, Rng& rng) {
    ExchangeGraph g;
    g.depth = depth;
    RigidCollection init;
    for (int v = 0; v < A.n(); ++v)
        init.items.push_back(Presentation::stalk(A, v));
    detail::sort_items(init.items);
    std::map<std::vector<DeltaVector>, std::size_t> index;
    std::vector<RigidCollection> store{init};
    index[init.key()] = 0;
    g.nodes.push_back(init.key());
    std::vector<std::size_t> frontier{0};
    std::set<std::pair<std::size_t, std::size_t>> edges;
    g.closed = true;
    for (int d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<std::size_t> next;
        for (std::size_t id : frontier)
            for (std::size_t k = 0; k < store[id].items.size(); ++k) {
                RigidCollection m = mutate(store[id], A, k, trials, rng);
                auto key = m.key();
                auto it = index.find(key);
                std::size_t mid;
                if (it == index.end()) {
                    mid = store.size();
                    index[key] = mid;
                    store.push_back(std::move(m));
                    g.nodes.push_back(key);
                    next.push_back(mid);
                } else {
                    mid = it->second;
                }
                edges.insert({std::min(id, mid), std::max(id, mid)});
            }
        frontier = std::move(next);
    }
    if (!frontier.empty()) g.closed = false;
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

struct Regularization {
    AlgebraModel algebra;
    Presentation induced;
    int passes = 0;
};

namespace detail {

inline Relation elem_to_relation(const AlgebraModel& A, const AlgElem& e) {
    Relation r;
    const auto& slot = A.basis_at(e.src, e.tgt);
    for (std::size_t k = 0; k < slot.size(); ++k) {
        if (e.coords[k].is_zero()) continue;
        const BasisPath& p = A.basis_path(slot[k]);
        r.terms.push_back(PathTerm{e.coords[k].lift(), p.tail, p.arrows});
    }
    return r;
}

}  // namespace detail

// Quotient by the two-sided ideal generated by the entries of Ker f, repeated
// until the induced map is injective.
inline Regularization regularize(const Presentation& f) {
    const AlgebraModel* A = f.A;
    std::vector<Relation> rels = A->relations();
    Presentation cur = f;
    AlgebraModel quot = *A;
    int passes = 0;
    for (;;) {
        std::vector<Relation> gens;
        for (int u = 0; u < quot.n(); ++u) {
            Mat<Fp> kb = kernel_basis(cur.vertex_matrix(u));
            for (std::size_t c = 0; c < kb.cols(); ++c) {
                std::vector<Fp> v = kb.col(c);
                std::size_t off = 0;
                for (int rv : cur.rows) {
                    AlgElem e = quot.zero_elem(rv, u);
                    for (std::size_t k = 0; k < e.coords.size(); ++k)
                        e.coords[k] = v[off + k];
                    off += e.coords.size();
                    if (!e.is_zero())
                        gens.push_back(detail::elem_to_relation(quot, e));
                }
            }
        }
        if (gens.empty()) break;
        rels.insert(rels.end(), gens.begin(), gens.end());
        AlgebraModel next =
            AlgebraModel::build(A->quiver(), rels, A->max_len(), /*raw=*/true);
        // transport the presentation, dropping summands at dead vertices
        std::vector<int> rows, cols;
        std::vector<std::size_t> rkeep, ckeep;
        for (std::size_t j = 0; j < cur.rows.size(); ++j)
            if (!next.unit(cur.rows[j]).is_zero()) {
                rows.push_back(cur.rows[j]);
                rkeep.push_back(j);
            }
        for (std::size_t i = 0; i < cur.cols.size(); ++i)
            if (!next.unit(cur.cols[i]).is_zero()) {
                cols.push_back(cur.cols[i]);
                ckeep.push_back(i);
            }
        Presentation moved;  // filled after `quot` is replaced
        std::vector<std::vector<Relation>> entries(rkeep.size());
        for (std::size_t j = 0; j < rkeep.size(); ++j)
            for (std::size_t i = 0; i < ckeep.size(); ++i)
                entries[j].push_back(detail::elem_to_relation(
                    quot, cur.F[rkeep[j]][ckeep[i]]));
        quot = std::move(next);
        moved = Presentation::zero(quot, rows, cols);
        for (std::size_t j = 0; j < rkeep.size(); ++j)
            for (std::size_t i = 0; i < ckeep.size(); ++i) {
                AlgElem e = quot.zero_elem(cols[i], rows[j]);
                for (const PathTerm& t : entries[j][i].terms) {
                    AlgElem p = quot.reduce_path(t.tail, t.arrows);
                    e = quot.add(e, quot.scale(Fp{t.coeff}, p));
                }
                moved.F[j][i] = std::move(e);
            }
        cur = std::move(moved);
        ++passes;
    }
    Regularization out;
    out.algebra = std::move(quot);
    out.passes = passes;
    cur.A = &out.algebra;
    out.induced = std::move(cur);
    return out;
}

}  // namespace presekit
