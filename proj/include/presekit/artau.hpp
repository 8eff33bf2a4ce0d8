#pragma once

#include <iostream>

#include "representation.hpp"

namespace presekit {

// A module together with a formal negative part: multiplicities of shifted
// projective stalks per vertex.
struct DecoratedRep {
    Representation M;
    std::vector<long long> V;
};

// Transport a representation to the opposite algebra by transposing every
// arrow matrix.
inline Representation trivial_dual(const Representation& m,
                                   const AlgebraModel& op) {
    Representation d = Representation::zero(op, m.dims);
    for (std::size_t a = 0; a < m.arr.size(); ++a)
        d.arr[a] = m.arr[a].transpose();
    return d;
}

inline Presentation to_presentation(const DecoratedRep& m) {
    const AlgebraModel& A = *m.M.A;
    Presentation p = minimal_presentation(m.M);
    for (std::size_t v = 0; v < m.V.size(); ++v)
        for (long long k = 0; k < m.V[v]; ++k)
            p = direct_sum(p, Presentation::shifted_stalk(A, static_cast<int>(v)));
    return p;
}

// Inverse of to_presentation. A homotopy-minimal complex is the minimal
// presentation of its cokernel plus shifted stalks; the stalk multiplicities
// are recovered from the row-count excess over the cokernel's first betti
// vector. Non-minimal input is minimized first (with a warning).
inline DecoratedRep from_presentation(const Presentation& f) {
    Presentation g = minimize(f);
    if (g.rows.size() != f.rows.size() || g.cols.size() != f.cols.size())
        std::cerr << "warning: presentation was not homotopy-minimal; "
                     "contractible summands were stripped\n";
    DecoratedRep d{cokernel(g), std::vector<long long>(f.A->n(), 0)};
    auto [b0, b1] = betti(d.M);
    DeltaVector rows_count = g.beta1();
    for (std::size_t v = 0; v < d.V.size(); ++v) d.V[v] = rows_count[v] - b1[v];
    return d;
}

// The radical of the projective at v: all nontrivial paths out of v.
inline Representation radical_projective(const AlgebraModel& A, int v) {
    Representation p = projective_rep(A, v);
    const auto& slot = A.basis_at(v, v);
    std::size_t k0 = slot.size();
    for (std::size_t k = 0; k < slot.size(); ++k)
        if (A.basis_path(slot[k]).arrows.empty()) k0 = k;
    std::vector<int> dims = p.dims;
    dims[v] -= 1;
    Representation r = Representation::zero(A, dims);
    auto strip = [&](const Mat<Fp>& m, bool drop_row, bool drop_col) {
        Mat<Fp> out(m.rows() - (drop_row ? 1 : 0), m.cols() - (drop_col ? 1 : 0));
        for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
            if (drop_row && i == k0) continue;
            for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
                if (drop_col && j == k0) continue;
                out(oi, oj) = m(i, j);
                ++oj;
            }
            ++oi;
        }
        return out;
    };
    const Quiver& q = A.quiver();
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        r.arr[a] = strip(p.arr[a], q.arrows[a].head == v, q.arrows[a].tail == v);
    return r;
}

// Multiplicity of P_v as a direct summand of M: maps to P_v that escape the
// radical are split surjections.
inline long long proj_multiplicity(const Representation& m, int v) {
    const AlgebraModel& A = *m.A;
    return hom_dim(m, projective_rep(A, v)) -
           hom_dim(m, radical_projective(A, v));
}

// Dual complex over the opposite algebra: Hom(-, A) applied entrywise, with
// the roles of rows and columns exchanged.
inline Presentation dual_complex(const Presentation& g, const AlgebraModel& op) {
    Presentation t = Presentation::zero(op, g.cols, g.rows);
    for (std::size_t j = 0; j < g.rows.size(); ++j)
        for (std::size_t i = 0; i < g.cols.size(); ++i)
            t.F[i][j] = g.A->to_opposite(op, g.F[j][i]);
    return t;
}

enum class TauDir { Forward, Inverse };

// Translation on homotopy-minimal two-term complexes: additive, with
// P_v -> P_v[1], P_v[1] -> minimal presentation of the injective at v, and
// transpose-then-dual on the remaining module part.
inline Presentation tau(const Presentation& fin, TauDir dir = TauDir::Forward) {
    const AlgebraModel& A = *fin.A;
    AlgebraModel op = A.opposite();
    DecoratedRep d = from_presentation(minimize(fin));
    Presentation out = Presentation::zero(A, {}, {});
    if (dir == TauDir::Forward) {
        for (int v = 0; v < A.n(); ++v)
            for (long long k = 0; k < d.V[v]; ++k)
                out = direct_sum(out,
                                 minimal_presentation(injective_rep(A, v)));
        for (int v = 0; v < A.n(); ++v) {
            long long pm = proj_multiplicity(d.M, v);
            for (long long k = 0; k < pm; ++k)
                out = direct_sum(out, Presentation::shifted_stalk(A, v));
        }
        Presentation g = minimal_presentation(d.M);
        Representation tr = cokernel(dual_complex(g, op));  // transpose
        Representation dtr = trivial_dual(tr, A);           // then dual
        out = direct_sum(out, minimal_presentation(dtr));
    } else {
        for (int v = 0; v < A.n(); ++v)
            for (long long k = 0; k < d.V[v]; ++k)
                out = direct_sum(out, Presentation::stalk(A, v));
        Representation mstar = trivial_dual(d.M, op);
        for (int v = 0; v < A.n(); ++v) {
            long long im = proj_multiplicity(mstar, v);  // injective summands
            for (long long k = 0; k < im; ++k)
                out = direct_sum(out, Presentation::shifted_stalk(A, v));
        }
        Presentation g = minimal_presentation(mstar);       // over the opposite
        Representation trd = cokernel(dual_complex(g, A));  // back over A
        out = direct_sum(out, minimal_presentation(trd));
    }
    return out;
}

struct EInvariants {
    long long e_proj = 0, e_inj = 0, hom_plus = 0;
};

inline EInvariants e_invariants(const DecoratedRep& m, const DecoratedRep& n) {
    const AlgebraModel& A = *m.M.A;
    AlgebraModel op = A.opposite();
    EInvariants r;
    r.e_proj = E_dim(to_presentation(m), to_presentation(n));
    DecoratedRep ms{trivial_dual(m.M, op), m.V};
    DecoratedRep ns{trivial_dual(n.M, op), n.V};
    r.e_inj = E_dim(to_presentation(ns), to_presentation(ms));
    r.hom_plus = hom_dim(m.M, n.M);
    return r;
}

// The two exposed vector invariants of the dual: -beta0 and -delta of the
// presentation of the dual decorated representation.
inline DeltaVector g_vector(const DecoratedRep& m) {
    AlgebraModel op = m.M.A->opposite();
    DecoratedRep ms{trivial_dual(m.M, op), m.V};
    DeltaVector b = to_presentation(ms).beta0();
    for (long long& x : b) x = -x;
    return b;
}

inline DeltaVector h_vector(const DecoratedRep& m) {
    AlgebraModel op = m.M.A->opposite();
    DecoratedRep ms{trivial_dual(m.M, op), m.V};
    DeltaVector dlt = to_presentation(ms).delta();
    for (long long& x : dlt) x = -x;
    return dlt;
}

// Row-vector action describing tau on delta-vectors: -C^T C^{-1} for the
// Cartan matrix C[v][w] = dim e_w A e_v.
inline std::vector<std::vector<long long>> tau_delta_matrix(
    const AlgebraModel& A) {
    int n = A.n();
    auto c = A.cartan();
    Mat<Rat> cm(n, n), ct(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cm(i, j) = Rat{c[i][j]};
            ct(i, j) = Rat{c[j][i]};
        }
    Mat<Rat> t = ct * inverse(cm);
    std::vector<std::vector<long long>> out(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class q = -t(i, j).v;
            q.canonicalize();
            if (q.get_den() != 1)
                throw DomainError("tau_delta_matrix: non-integral entry");
            out[i][j] = q.get_num().get_si();
        }
    return out;
}

inline DeltaVector tau_delta(const AlgebraModel& A, const DeltaVector& d) {
    auto t = tau_delta_matrix(A);
    DeltaVector out(d.size(), 0);
    for (std::size_t j = 0; j < out.size(); ++j)
        for (std::size_t i = 0; i < d.size(); ++i) out[j] += d[i] * t[i][j];
    return out;
}

}  // namespace presekit
