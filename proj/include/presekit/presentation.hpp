#pragma once

#include "algebra.hpp"

namespace presekit {

using DeltaVector = std::vector<long long>;

// A two-term complex P(beta1) -> P(beta0) of projectives, in degrees (-1, 0).
// rows[j] is the vertex of the j-th P1 summand, cols[i] of the i-th P0
// summand. F[j][i] lies in e_{rows[j]} A e_{cols[i]}; the map sends
// (x_1..x_n) to the tuple with component i equal to sum_j x_j . F[j][i].
struct Presentation {
    const AlgebraModel* A = nullptr;
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<std::vector<AlgElem>> F;

    static Presentation zero(const AlgebraModel& a,
                             const std::vector<int>& rows,
                             const std::vector<int>& cols) {
        Presentation p;
        p.A = &a;
        p.rows = rows;
        p.cols = cols;
        p.F.assign(rows.size(), {});
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (std::size_t i = 0; i < cols.size(); ++i)
                p.F[j].push_back(a.zero_elem(cols[i], rows[j]));
        return p;
    }
    // 0 -> P_v
    static Presentation stalk(const AlgebraModel& a, int v) {
        return zero(a, {}, {v});
    }
    // P_v -> 0, the shifted stalk P_v[1]
    static Presentation shifted_stalk(const AlgebraModel& a, int v) {
        return zero(a, {v}, {});
    }

    DeltaVector beta0() const {
        DeltaVector b(A->n(), 0);
        for (int v : cols) ++b[v];
        return b;
    }
    DeltaVector beta1() const {
        DeltaVector b(A->n(), 0);
        for (int v : rows) ++b[v];
        return b;
    }
    DeltaVector delta() const {
        DeltaVector d = beta0(), b1 = beta1();
        for (std::size_t v = 0; v < d.size(); ++v) d[v] -= b1[v];
        return d;
    }

    // The induced linear map P1(u) -> P0(u) on degree-u components.
    Mat<Fp> vertex_matrix(int u) const {
        std::vector<std::size_t> roff(rows.size() + 1, 0), coff(cols.size() + 1, 0);
        for (std::size_t j = 0; j < rows.size(); ++j)
            roff[j + 1] = roff[j] + A->dim_bigrade(rows[j], u);
        for (std::size_t i = 0; i < cols.size(); ++i)
            coff[i + 1] = coff[i] + A->dim_bigrade(cols[i], u);
        Mat<Fp> m(coff.back(), roff.back());
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (std::size_t i = 0; i < cols.size(); ++i) {
                Mat<Fp> blk = A->right_mult(F[j][i], u);
                for (std::size_t r = 0; r < blk.rows(); ++r)
                    for (std::size_t c = 0; c < blk.cols(); ++c)
                        m(coff[i] + r, roff[j] + c) = blk(r, c);
            }
        return m;
    }

    std::size_t p0_dim(int u) const {
        std::size_t d = 0;
        for (int v : cols) d += A->dim_bigrade(v, u);
        return d;
    }
    std::size_t p1_dim(int u) const {
        std::size_t d = 0;
        for (int v : rows) d += A->dim_bigrade(v, u);
        return d;
    }
};

// delta = b0 - b1 with disjoint supports.
inline std::pair<DeltaVector, DeltaVector> reduced_split(const DeltaVector& d) {
    DeltaVector b1(d.size(), 0), b0(d.size(), 0);
    for (std::size_t v = 0; v < d.size(); ++v) {
        if (d[v] > 0)
            b0[v] = d[v];
        else
            b1[v] = -d[v];
    }
    return {b1, b0};
}

inline std::vector<int> summand_list(const DeltaVector& beta) {
    std::vector<int> out;
    for (std::size_t v = 0; v < beta.size(); ++v)
        for (long long k = 0; k < beta[v]; ++k) out.push_back(static_cast<int>(v));
    return out;
}

// Morphism space Hom(⊕ P_{dom[i]}, ⊕ P_{cod[k]}), flattened to k-coordinates.
// A morphism is a matrix U with U[i][k] in e_{dom[i]} A e_{cod[k]}, acting by
// right multiplication.
struct HomSpace {
    const AlgebraModel* A = nullptr;
    std::vector<int> dom, cod;

    HomSpace(const AlgebraModel& a, std::vector<int> d, std::vector<int> c)
        : A(&a), dom(std::move(d)), cod(std::move(c)) {}

    std::size_t dim() const {
        std::size_t s = 0;
        for (int v : dom)
            for (int w : cod) s += A->dim_bigrade(w, v);
        return s;
    }

    std::vector<std::vector<AlgElem>> zero_matrix() const {
        std::vector<std::vector<AlgElem>> u(dom.size());
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t k = 0; k < cod.size(); ++k)
                u[i].push_back(A->zero_elem(cod[k], dom[i]));
        return u;
    }

    std::vector<Fp> to_vec(const std::vector<std::vector<AlgElem>>& u) const {
        std::vector<Fp> v;
        v.reserve(dim());
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t k = 0; k < cod.size(); ++k)
                for (Fp c : u[i][k].coords) v.push_back(c);
        return v;
    }

    std::vector<std::vector<AlgElem>> from_vec(const std::vector<Fp>& v) const {
        auto u = zero_matrix();
        std::size_t pos = 0;
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t k = 0; k < cod.size(); ++k)
                for (Fp& c : u[i][k].coords) c = v[pos++];
        return u;
    }

    std::vector<std::vector<AlgElem>> sample(Rng& rng) const {
        auto u = zero_matrix();
        for (auto& row : u)
            for (AlgElem& e : row)
                for (Fp& c : e.coords) c = rng.uniform();
        return u;
    }
};

// Matrix product over A: compose(U, V)[i][m] = sum_k U[i][k] . V[k][m];
// as maps acting by right multiplication this is "apply U, then V".
inline std::vector<std::vector<AlgElem>> compose(
    const AlgebraModel& A, const std::vector<std::vector<AlgElem>>& u,
    const std::vector<std::vector<AlgElem>>& v) {
    std::size_t n = u.size();
    std::size_t mid = v.size();
    std::size_t m = mid == 0 ? 0 : v[0].size();
    std::vector<std::vector<AlgElem>> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < m; ++c) {
            AlgElem acc = A.zero_elem(v[0][c].src, u[i].empty() ? v[0][c].tgt
                                                                : u[i][0].tgt);
            for (std::size_t k = 0; k < mid; ++k)
                acc = A.add(acc, A.multiply(u[i][k], v[k][c]));
            r[i].push_back(std::move(acc));
        }
    }
    return r;
}

inline std::vector<std::vector<AlgElem>> hom_sub(
    const std::vector<std::vector<AlgElem>>& a,
    const std::vector<std::vector<AlgElem>>& b, const AlgebraModel& A) {
    auto r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t k = 0; k < r[i].size(); ++k)
            r[i][k] = A.add(r[i][k], A.scale(-Fp::one(), b[i][k]));
    return r;
}

// The defining map of E and H: Phi(U, H) = F' . U - H . F'' from
// Hom(P0', P0'') + Hom(P1', P1'') to Hom(P1', P0''). Its kernel is the space
// of chain maps f' -> f''; its cokernel is E(f', f'').
struct DoubleComplexMap {
    HomSpace h00, h11, h10;
    Mat<Fp> phi;

    DoubleComplexMap(const Presentation& f, const Presentation& g)
        : h00(*f.A, f.cols, g.cols),
          h11(*f.A, f.rows, g.rows),
          h10(*f.A, f.rows, g.cols),
          phi(h10.dim(), h00.dim() + h11.dim()) {
        const AlgebraModel& A = *f.A;
        std::size_t d00 = h00.dim(), d11 = h11.dim();
        for (std::size_t c = 0; c < d00 + d11; ++c) {
            std::vector<Fp> unit00(d00, Fp::zero()), unit11(d11, Fp::zero());
            if (c < d00)
                unit00[c] = Fp::one();
            else
                unit11[c - d00] = Fp::one();
            auto u = h00.from_vec(unit00);
            auto h = h11.from_vec(unit11);
            std::vector<std::vector<AlgElem>> img;
            if (c < d00)
                img = compose(A, f.F, u);
            else {
                auto hg = compose(A, h, g.F);
                img = hom_sub(h10.zero_matrix(), hg, A);
            }
            phi.set_col(c, h10.to_vec(img));
        }
    }
};

inline std::pair<long long, long long> E_space(const Presentation& f,
                                               const Presentation& g) {
    DoubleComplexMap dc(f, g);
    long long r = static_cast<long long>(rank(dc.phi));
    long long e = static_cast<long long>(dc.h10.dim()) - r;
    long long h = static_cast<long long>(dc.h00.dim() + dc.h11.dim()) - r;
    return {e, h};
}

inline long long E_dim(const Presentation& f, const Presentation& g) {
    return E_space(f, g).first;
}

inline bool is_rigid(const Presentation& f) { return E_dim(f, f) == 0; }

// Chain maps f -> g as pairs (U0, U1); basis of the kernel of Phi.
struct ChainMapSpace {
    HomSpace h00, h11;
    std::vector<std::pair<std::vector<std::vector<AlgElem>>,
                          std::vector<std::vector<AlgElem>>>>
        basis;  // (U0, U1)

    ChainMapSpace(const Presentation& f, const Presentation& g)
        : h00(*f.A, f.cols, g.cols), h11(*f.A, f.rows, g.rows) {
        DoubleComplexMap dc(f, g);
        Mat<Fp> k = kernel_basis(dc.phi);
        for (std::size_t j = 0; j < k.cols(); ++j) {
            std::vector<Fp> v = k.col(j);
            std::vector<Fp> v00(v.begin(), v.begin() + h00.dim());
            std::vector<Fp> v11(v.begin() + h00.dim(), v.end());
            basis.emplace_back(h00.from_vec(v00), h11.from_vec(v11));
        }
    }
};

// dim of chain maps modulo homotopies.
inline long long hom_k2(const Presentation& f, const Presentation& g) {
    const AlgebraModel& A = *f.A;
    DoubleComplexMap dc(f, g);
    long long chain = static_cast<long long>(dc.h00.dim() + dc.h11.dim()) -
                      static_cast<long long>(rank(dc.phi));
    HomSpace h01(A, f.cols, g.rows);
    std::size_t hd = h01.dim();
    Mat<Fp> hmap(dc.h00.dim() + dc.h11.dim(), hd);
    for (std::size_t c = 0; c < hd; ++c) {
        std::vector<Fp> unit(hd, Fp::zero());
        unit[c] = Fp::one();
        auto h = h01.from_vec(unit);
        auto u0 = compose(A, h, g.F);   // P0' -> P1'' -> P0''
        auto u1 = compose(A, f.F, h);   // P1' -> P0' -> P1''
        std::vector<Fp> col = dc.h00.to_vec(u0);
        std::vector<Fp> col1 = dc.h11.to_vec(u1);
        col.insert(col.end(), col1.begin(), col1.end());
        hmap.set_col(c, col);
    }
    return chain - static_cast<long long>(rank(hmap));
}

inline Presentation direct_sum(const Presentation& f, const Presentation& g) {
    const AlgebraModel& A = *f.A;
    std::vector<int> rows = f.rows, cols = f.cols;
    rows.insert(rows.end(), g.rows.begin(), g.rows.end());
    cols.insert(cols.end(), g.cols.begin(), g.cols.end());
    Presentation s = Presentation::zero(A, rows, cols);
    for (std::size_t j = 0; j < f.rows.size(); ++j)
        for (std::size_t i = 0; i < f.cols.size(); ++i) s.F[j][i] = f.F[j][i];
    for (std::size_t j = 0; j < g.rows.size(); ++j)
        for (std::size_t i = 0; i < g.cols.size(); ++i)
            s.F[f.rows.size() + j][f.cols.size() + i] = g.F[j][i];
    return s;
}

inline Presentation sample_presentation(const AlgebraModel& A,
                                        const DeltaVector& b1,
                                        const DeltaVector& b0, Rng& rng) {
    Presentation p = Presentation::zero(A, summand_list(b1), summand_list(b0));
    for (auto& row : p.F)
        for (AlgElem& e : row)
            for (Fp& c : e.coords) c = rng.uniform();
    return p;
}

inline Presentation sample_presentation(const AlgebraModel& A,
                                        const DeltaVector& delta, Rng& rng) {
    auto [b1, b0] = reduced_split(delta);
    return sample_presentation(A, b1, b0, rng);
}

// Scalar (degree-0) part of an algebra element: the coefficient of the
// trivial path, when source and target agree.
inline Fp scalar_part(const AlgebraModel& A, const AlgElem& e) {
    if (e.src != e.tgt) return Fp::zero();
    const auto& slot = A.basis_at(e.src, e.tgt);
    for (std::size_t k = 0; k < slot.size(); ++k)
        if (A.basis_path(slot[k]).arrows.empty()) return e.coords[k];
    return Fp::zero();
}

// Inverse of a unit in the local algebra e_v A e_v: scalar plus nilpotent.
inline AlgElem local_inverse(const AlgebraModel& A, const AlgElem& e) {
    Fp c = scalar_part(A, e);
    if (c.is_zero()) throw DomainError("local_inverse: not a unit");
    int v = e.src;
    // e = c (e_v - n) with n nilpotent; inverse = (sum n^k) c^{-1}
    AlgElem n = A.scale(c.inv(), e);
    AlgElem ev = A.unit(v);
    n = A.add(ev, A.scale(-Fp::one(), n));  // n = e_v - e/c, nilpotent
    AlgElem inv = ev, pw = ev;
    for (int k = 0; k < A.max_len(); ++k) {
        pw = A.multiply(pw, n);
        if (pw.is_zero()) break;
        inv = A.add(inv, pw);
    }
    return A.scale(c.inv(), inv);
}

// Strip contractible summands (P_v = P_v): find an entry with invertible
// degree-0 part joining equal vertices, cancel the pair, repeat.
inline Presentation minimize(Presentation f) {
    const AlgebraModel& A = *f.A;
    for (;;) {
        std::size_t pj = f.rows.size(), pi = f.cols.size();
        for (std::size_t j = 0; j < f.rows.size() && pj == f.rows.size(); ++j)
            for (std::size_t i = 0; i < f.cols.size(); ++i)
                if (f.rows[j] == f.cols[i] &&
                    !scalar_part(A, f.F[j][i]).is_zero()) {
                    pj = j;
                    pi = i;
                    break;
                }
        if (pj == f.rows.size()) return f;
        AlgElem inv = local_inverse(A, f.F[pj][pi]);
        std::vector<int> nrows, ncols;
        for (std::size_t j = 0; j < f.rows.size(); ++j)
            if (j != pj) nrows.push_back(f.rows[j]);
        for (std::size_t i = 0; i < f.cols.size(); ++i)
            if (i != pi) ncols.push_back(f.cols[i]);
        Presentation g = Presentation::zero(A, nrows, ncols);
        std::size_t jj = 0;
        for (std::size_t j = 0; j < f.rows.size(); ++j) {
            if (j == pj) continue;
            std::size_t ii = 0;
            for (std::size_t i = 0; i < f.cols.size(); ++i) {
                if (i == pi) continue;
                AlgElem corr = A.multiply(f.F[j][pi],
                                          A.multiply(inv, f.F[pj][i]));
                g.F[jj][ii] = A.add(f.F[j][i], A.scale(-Fp::one(), corr));
                ++ii;
            }
            ++jj;
        }
        f = std::move(g);
    }
}

// min over independently sampled pairs; a disagreement among the trial values
// triggers one automatic doubling of the trial count.
inline long long e_generic(const AlgebraModel& A, const DeltaVector& d1,
                           const DeltaVector& d2, int trials, Rng& rng) {
    long long best = -1;
    bool uniform = true;
    long long first = -1;
    auto run = [&](int count) {
        for (int t = 0; t < count; ++t) {
            Presentation f = sample_presentation(A, d1, rng);
            Presentation g = sample_presentation(A, d2, rng);
            long long e = E_dim(f, g);
            if (first < 0)
                first = e;
            else if (e != first)
                uniform = false;
            if (best < 0 || e < best) best = e;
        }
    };
    run(trials);
    if (!uniform) run(trials);
    return best;
}

inline bool subpres_exists(const AlgebraModel& A, const DeltaVector& sub,
                           const DeltaVector& whole, int trials, Rng& rng) {
    DeltaVector rest(whole.size());
    for (std::size_t v = 0; v < whole.size(); ++v) rest[v] = whole[v] - sub[v];
    return e_generic(A, sub, rest, trials, rng) == 0;
}

}  // namespace presekit
