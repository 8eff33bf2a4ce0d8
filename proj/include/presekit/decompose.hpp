#pragma once

#include "poly.hpp"
#include "representation.hpp"

namespace presekit {

// An indecomposable summand over F_p whose reduced endomorphism algebra is a
// proper field extension; such a summand cannot exist over an algebraically
// closed field, so it is surfaced instead of silently accepted.
struct FieldObstruction : DomainError {
    explicit FieldObstruction(const std::string& what) : DomainError(what) {}
};

struct DecompositionReport {
    std::vector<std::pair<Presentation, int>> summands;  // with multiplicity
    bool certified = false;
    int trials_used = 0;

    std::vector<DeltaVector> delta_multiset() const {
        std::vector<DeltaVector> out;
        for (const auto& [f, m] : summands)
            for (int k = 0; k < m; ++k) out.push_back(f.delta());
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

// Degree-u action of a right-multiplication endomorphism matrix U on the
// projective ⊕_i A e_{verts[i]}.
inline Mat<Fp> hom_vertex_matrix(const AlgebraModel& A,
                                 const std::vector<int>& dom,
                                 const std::vector<int>& cod,
                                 const std::vector<std::vector<AlgElem>>& U,
                                 int u) {
    std::vector<std::size_t> doff(dom.size() + 1, 0), coff(cod.size() + 1, 0);
    for (std::size_t j = 0; j < dom.size(); ++j)
        doff[j + 1] = doff[j] + A.dim_bigrade(dom[j], u);
    for (std::size_t i = 0; i < cod.size(); ++i)
        coff[i + 1] = coff[i] + A.dim_bigrade(cod[i], u);
    Mat<Fp> m(coff.back(), doff.back());
    for (std::size_t j = 0; j < dom.size(); ++j)
        for (std::size_t i = 0; i < cod.size(); ++i) {
            Mat<Fp> blk = A.right_mult(U[j][i], u);
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    m(coff[i] + r, doff[j] + c) = blk(r, c);
        }
    return m;
}

// Generators of a submodule S ⊆ ⊕ A e_{verts[i]} given by a basis of each
// degree-u subspace: a basis of S/JS, lifted. Returns (vertex, coordinate
// vector in the ambient degree-u space) pairs, in a deterministic order.
inline std::vector<std::pair<int, std::vector<Fp>>> submodule_top(
    const AlgebraModel& A, const std::vector<int>& verts,
    const std::vector<Mat<Fp>>& sub_basis /* per vertex */) {
    const Quiver& q = A.quiver();
    std::vector<std::pair<int, std::vector<Fp>>> gens;
    for (int u = 0; u < A.n(); ++u) {
        if (sub_basis[u].cols() == 0) continue;
        SpanTracker<Fp> tr(sub_basis[u].rows());
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].head != u) continue;
            int t = q.arrows[a].tail;
            if (sub_basis[t].cols() == 0) continue;
            Mat<Fp> img = p0_arrow_matrix(A, verts, static_cast<int>(a)) *
                          sub_basis[t];
            for (std::size_t c = 0; c < img.cols(); ++c) tr.insert(img.col(c));
        }
        for (std::size_t c = 0; c < sub_basis[u].cols(); ++c) {
            std::vector<Fp> v = sub_basis[u].col(c);
            if (tr.insert(v)) gens.emplace_back(u, std::move(v));
        }
    }
    return gens;
}

// Pack degree-u coordinate vectors of generators into a right-multiplication
// matrix Hom(⊕ A e_{gv}, ⊕ A e_{verts[i]}).
inline std::vector<std::vector<AlgElem>> generators_to_hom(
    const AlgebraModel& A, const std::vector<int>& verts,
    const std::vector<std::pair<int, std::vector<Fp>>>& gens) {
    std::vector<std::vector<AlgElem>> C(gens.size());
    for (std::size_t t = 0; t < gens.size(); ++t) {
        auto [u, vec] = gens[t];
        std::size_t off = 0;
        for (int v : verts) {
            AlgElem e = A.zero_elem(v, u);
            for (std::size_t k = 0; k < e.coords.size(); ++k)
                e.coords[k] = vec[off + k];
            off += e.coords.size();
            C[t].push_back(std::move(e));
        }
    }
    return C;
}

}  // namespace detail

// Basis of the chain endomorphisms of f (no homotopy quotient).
inline ChainMapSpace chain_endos(const Presentation& f) {
    return ChainMapSpace(f, f);
}

namespace detail {

// One Fitting attempt: returns the summands of a split induced by a random
// chain endomorphism, an empty list if the endomorphism was local with scalar
// residue, and sets `extension` if its residue field is a proper extension.
inline std::vector<Presentation> fitting_split(const Presentation& f,
                                               const ChainMapSpace& endos,
                                               Rng& rng, bool& extension) {
    const AlgebraModel& A = *f.A;
    extension = false;
    std::size_t nb = endos.basis.size();
    auto U1 = HomSpace(A, f.rows, f.rows).zero_matrix();
    auto U0 = HomSpace(A, f.cols, f.cols).zero_matrix();
    for (std::size_t b = 0; b < nb; ++b) {
        Fp c = rng.uniform();
        const auto& [u0, u1] = endos.basis[b];
        for (std::size_t i = 0; i < U0.size(); ++i)
            for (std::size_t k = 0; k < U0[i].size(); ++k)
                U0[i][k] = A.add(U0[i][k], A.scale(c, u0[i][k]));
        for (std::size_t i = 0; i < U1.size(); ++i)
            for (std::size_t k = 0; k < U1[i].size(); ++k)
                U1[i][k] = A.add(U1[i][k], A.scale(c, u1[i][k]));
    }
    // per-vertex actions and the joint minimal polynomial
    std::vector<Mat<Fp>> V1(A.n()), V0(A.n());
    std::size_t total = 0;
    for (int u = 0; u < A.n(); ++u) {
        V1[u] = hom_vertex_matrix(A, f.rows, f.rows, U1, u);
        V0[u] = hom_vertex_matrix(A, f.cols, f.cols, U0, u);
        total += V1[u].rows() + V0[u].rows();
    }
    Mat<Fp> T(total, total);
    std::size_t off = 0;
    for (int u = 0; u < A.n(); ++u)
        for (const Mat<Fp>* m : {&V1[u], &V0[u]}) {
            for (std::size_t i = 0; i < m->rows(); ++i)
                for (std::size_t j = 0; j < m->cols(); ++j)
                    T(off + i, off + j) = (*m)(i, j);
            off += m->rows();
        }
    Rng frng = rng.fork(0x9e3779b97f4a7c15ULL);
    auto factors = factor(min_poly(T), frng);
    if (factors.size() <= 1) {
        if (!factors.empty() && factors[0].first.deg() > 1) extension = true;
        return {};
    }
    std::vector<Presentation> out;
    for (const auto& [q, mult] : factors) {
        Poly qm = Poly::constant(Fp::one());
        for (int k = 0; k < mult; ++k) qm = qm * q;
        std::vector<Mat<Fp>> B1(A.n()), B0(A.n());
        for (int u = 0; u < A.n(); ++u) {
            B1[u] = kernel_basis(poly_at(qm, V1[u]));
            B0[u] = kernel_basis(poly_at(qm, V0[u]));
        }
        auto gens1 = submodule_top(A, f.rows, B1);
        auto gens0 = submodule_top(A, f.cols, B0);
        auto C1 = generators_to_hom(A, f.rows, gens1);
        auto C0 = generators_to_hom(A, f.cols, gens0);
        std::vector<int> g1, g0;
        for (const auto& [v, vec] : gens1) g1.push_back(v);
        for (const auto& [v, vec] : gens0) g0.push_back(v);
        // the lifted tops must present the primary blocks bijectively
        for (int u = 0; u < A.n(); ++u) {
            Mat<Fp> phi1 = hom_vertex_matrix(A, g1, f.rows, C1, u);
            Mat<Fp> phi0 = hom_vertex_matrix(A, g0, f.cols, C0, u);
            if (rank(phi1) != B1[u].cols() || phi1.cols() != B1[u].cols() ||
                rank(phi0) != B0[u].cols() || phi0.cols() != B0[u].cols())
                throw DomainError("fitting: standard form lift failed");
        }
        Presentation s = Presentation::zero(A, g1, g0);
        if (!g1.empty() && !g0.empty()) {
            // solve compose(G, C0) = compose(C1, F) for G
            HomSpace hg(A, g1, g0), ht(A, g1, f.cols);
            Mat<Fp> m(ht.dim(), hg.dim());
            for (std::size_t c = 0; c < hg.dim(); ++c) {
                std::vector<Fp> unit(hg.dim(), Fp::zero());
                unit[c] = Fp::one();
                m.set_col(c, ht.to_vec(compose(A, hg.from_vec(unit), C0)));
            }
            auto x = solve(m, ht.to_vec(compose(A, C1, f.F)));
            if (!x) throw DomainError("fitting: summand map not liftable");
            s.F = hg.from_vec(*x);
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

inline void decompose_into(const Presentation& f, int trials, Rng& rng,
                           std::vector<Presentation>& out) {
    if (f.rows.empty() && f.cols.empty()) return;
    ChainMapSpace endos = chain_endos(f);
    if (endos.basis.size() <= 1) {
        out.push_back(f);
        return;
    }
    bool saw_extension = false;
    // A random endomorphism of g ⊕ g for isomorphic g often has an irreducible
    // quadratic minimal polynomial, which looks like a residue field
    // extension; a genuine extension almost never yields a splitting factor,
    // so extra attempts separate the two cases.
    int attempts = trials;
    for (int t = 0; t < attempts; ++t) {
        bool ext = false;
        auto parts = detail::fitting_split(f, endos, rng, ext);
        if (!parts.empty()) {
            for (const Presentation& p : parts) decompose_into(p, trials, rng, out);
            return;
        }
        if (ext && !saw_extension) {
            saw_extension = true;
            attempts = trials + 16;
        }
    }
    if (saw_extension)
        throw FieldObstruction(
            "summand with a nontrivial residue field extension over F_p");
    out.push_back(f);
}

inline bool iso_test(const Presentation& f, const Presentation& g, int trials,
                     Rng& rng) {
    auto srt = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (srt(f.rows) != srt(g.rows) || srt(f.cols) != srt(g.cols)) return false;
    ChainMapSpace maps(f, g);
    if (maps.basis.empty()) return f.rows.empty() && f.cols.empty();
    auto scalar_square = [&](const std::vector<std::vector<AlgElem>>& u,
                             const std::vector<int>& dom,
                             const std::vector<int>& cod) {
        Mat<Fp> m(cod.size(), dom.size());
        for (std::size_t j = 0; j < dom.size(); ++j)
            for (std::size_t i = 0; i < cod.size(); ++i)
                m(i, j) = scalar_part(*f.A, u[j][i]);
        return m;
    };
    for (int t = 0; t < trials; ++t) {
        auto u0 = HomSpace(*f.A, f.cols, g.cols).zero_matrix();
        auto u1 = HomSpace(*f.A, f.rows, g.rows).zero_matrix();
        for (const auto& [b0, b1] : maps.basis) {
            Fp c = rng.uniform();
            for (std::size_t i = 0; i < u0.size(); ++i)
                for (std::size_t k = 0; k < u0[i].size(); ++k)
                    u0[i][k] = f.A->add(u0[i][k], f.A->scale(c, b0[i][k]));
            for (std::size_t i = 0; i < u1.size(); ++i)
                for (std::size_t k = 0; k < u1[i].size(); ++k)
                    u1[i][k] = f.A->add(u1[i][k], f.A->scale(c, b1[i][k]));
        }
        if (invertible(scalar_square(u0, f.cols, g.cols)) &&
            invertible(scalar_square(u1, f.rows, g.rows)))
            return true;
    }
    return false;
}

inline DecompositionReport decompose(const Presentation& f, int trials,
                                     Rng& rng) {
    DecompositionReport rep;
    rep.trials_used = trials;
    std::vector<Presentation> parts;
    decompose_into(f, trials, rng, parts);
    // stable grouping by isomorphism
    for (Presentation& p : parts) {
        bool merged = false;
        for (auto& [q, m] : rep.summands)
            if (p.delta() == q.delta() && iso_test(p, q, 5, rng)) {
                ++m;
                merged = true;
                break;
            }
        if (!merged) rep.summands.emplace_back(std::move(p), 1);
    }
    // certificate: the direct sum of the found summands is isomorphic to f
    Presentation sum = Presentation::zero(*f.A, {}, {});
    for (const auto& [q, m] : rep.summands)
        for (int k = 0; k < m; ++k) sum = direct_sum(sum, q);
    rep.certified = iso_test(sum, f, 5, rng);
    return rep;
}

inline bool is_indecomposable(const Presentation& f, int trials, Rng& rng) {
    if (f.rows.empty() && f.cols.empty()) return false;
    ChainMapSpace endos = chain_endos(f);
    if (endos.basis.size() <= 1) return true;
    for (int t = 0; t < trials; ++t) {
        bool ext = false;
        if (!detail::fitting_split(f, endos, rng, ext).empty()) return false;
    }
    return true;
}

// δ-multisets ordered "finer first": more parts first, then lexicographic.
inline bool finer_than(const std::vector<DeltaVector>& a,
                       const std::vector<DeltaVector>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

inline std::vector<DeltaVector> canonical_decomposition(const AlgebraModel& A,
                                                        const DeltaVector& delta,
                                                        int trials, Rng& rng) {
    std::vector<DeltaVector> best;
    bool have = false;
    for (int t = 0; t < trials; ++t) {
        DecompositionReport rep;
        int resamples = 0;
        for (;;) {
            Presentation f = sample_presentation(A, delta, rng);
            try {
                rep = decompose(f, trials, rng);
                break;
            } catch (const FieldObstruction&) {
                if (++resamples > 3) throw;
            }
        }
        auto parts = rep.delta_multiset();
        if (!have || finer_than(parts, best)) {
            best = std::move(parts);
            have = true;
        }
    }
    return best;
}

inline bool verify_cdt(const AlgebraModel& A,
                       const std::vector<DeltaVector>& parts, int trials,
                       Rng& rng) {
    for (const DeltaVector& d : parts) {
        Presentation f = sample_presentation(A, d, rng);
        if (!is_indecomposable(f, trials, rng)) return false;
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (i == j) continue;
            if (e_generic(A, parts[i], parts[j], trials, rng) != 0) return false;
        }
    return true;
}

enum class DeltaClass { Decomposable, Real, Tame, Wild };

inline const char* to_string(DeltaClass c) {
    switch (c) {
        case DeltaClass::Decomposable: return "Decomposable";
        case DeltaClass::Real: return "Real";
        case DeltaClass::Tame: return "Tame";
        case DeltaClass::Wild: return "Wild";
    }
    return "?";
}

inline DeltaClass classify(const AlgebraModel& A, const DeltaVector& delta,
                           int trials, Rng& rng) {
    if (canonical_decomposition(A, delta, trials, rng).size() > 1)
        return DeltaClass::Decomposable;
    for (int t = 0; t < trials; ++t)
        if (is_rigid(sample_presentation(A, delta, rng))) return DeltaClass::Real;
    if (e_generic(A, delta, delta, trials, rng) == 0) return DeltaClass::Tame;
    return DeltaClass::Wild;
}

}  // namespace presekit
