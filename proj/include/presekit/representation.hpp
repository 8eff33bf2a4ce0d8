#pragma once

#include "presentation.hpp"

namespace presekit {

struct HasRelations : DomainError {
    explicit HasRelations(const std::string& what) : DomainError(what) {}
};

// A finite-dimensional left module, given by a vector space per vertex and a
// matrix per arrow: arr[a] maps the space at the arrow's tail to the one at
// its head.
struct Representation {
    const AlgebraModel* A = nullptr;
    std::vector<int> dims;
    std::vector<Mat<Fp>> arr;

    static Representation zero(const AlgebraModel& a, std::vector<int> dims) {
        Representation m;
        m.A = &a;
        m.dims = std::move(dims);
        for (const Arrow& ar : a.quiver().arrows)
            m.arr.emplace_back(m.dims[ar.head], m.dims[ar.tail]);
        return m;
    }

    std::vector<long long> dim_vector() const {
        return std::vector<long long>(dims.begin(), dims.end());
    }
    long long total_dim() const {
        long long s = 0;
        for (int d : dims) s += d;
        return s;
    }
};

// Matrix of a path acting on M, arrows[0] applied first.
inline Mat<Fp> path_matrix(const Representation& M, int tail,
                           const std::vector<int>& arrows) {
    Mat<Fp> m = Mat<Fp>::identity(M.dims[tail]);
    for (int a : arrows) m = M.arr[a] * m;
    return m;
}

// Matrix of an algebra element: M.dims[tgt] x M.dims[src].
inline Mat<Fp> elem_matrix(const Representation& M, const AlgElem& e) {
    Mat<Fp> m(M.dims[e.tgt], M.dims[e.src]);
    const auto& slot = M.A->basis_at(e.src, e.tgt);
    for (std::size_t k = 0; k < slot.size(); ++k) {
        if (e.coords[k].is_zero()) continue;
        m = m + e.coords[k] * path_matrix(M, e.src, M.A->basis_path(slot[k]).arrows);
    }
    return m;
}

inline bool relations_hold(const Representation& M) {
    for (const Relation& r : M.A->relations()) {
        int tl = r.terms[0].arrows.empty()
                     ? r.terms[0].tail
                     : M.A->quiver().arrows[r.terms[0].arrows[0]].tail;
        int hd = tl;
        for (int a : r.terms[0].arrows) hd = M.A->quiver().arrows[a].head;
        Mat<Fp> s(M.dims[hd], M.dims[tl]);
        for (const PathTerm& t : r.terms)
            s = s + Fp{t.coeff} * path_matrix(M, tl, t.arrows);
        if (!s.is_zero()) return false;
    }
    return true;
}

inline Representation simple(const AlgebraModel& A, int v) {
    std::vector<int> d(A.n(), 0);
    d[v] = 1;
    return Representation::zero(A, d);
}

// The projective A e_v: space at w has the paths v -> w as basis, arrows act
// by composing on the left.
inline Representation projective_rep(const AlgebraModel& A, int v) {
    std::vector<int> d(A.n());
    for (int w = 0; w < A.n(); ++w) d[w] = static_cast<int>(A.dim_bigrade(v, w));
    Representation m = Representation::zero(A, d);
    for (std::size_t a = 0; a < A.quiver().arrows.size(); ++a)
        m.arr[a] = A.left_mult(A.arrow_elem(static_cast<int>(a)), v);
    return m;
}

// The injective dual to e_v A: space at w is the dual of the paths w -> v,
// arrows act by the transpose of composing on the right.
inline Representation injective_rep(const AlgebraModel& A, int v) {
    std::vector<int> d(A.n());
    for (int w = 0; w < A.n(); ++w) d[w] = static_cast<int>(A.dim_bigrade(w, v));
    Representation m = Representation::zero(A, d);
    for (std::size_t a = 0; a < A.quiver().arrows.size(); ++a)
        m.arr[a] = A.right_mult(A.arrow_elem(static_cast<int>(a)), v).transpose();
    return m;
}

// Uniform random matrices; only meaningful when the algebra has no relations.
inline Representation sample_representation(const AlgebraModel& A,
                                            const std::vector<long long>& dims,
                                            Rng& rng) {
    std::vector<int> d(dims.begin(), dims.end());
    Representation m = Representation::zero(A, d);
    for (Mat<Fp>& mat : m.arr)
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j) mat(i, j) = rng.uniform();
    return m;
}

// ---- hom and ext ----

namespace detail {

// Offsets for the vectorized space  ⊕_v Hom(M(v), N(v)); entry (i, j) of the
// block at v sits at off[v] + i * M.dims[v] + j.
inline std::vector<std::size_t> hom_offsets(const Representation& M,
                                            const Representation& N) {
    std::vector<std::size_t> off(M.dims.size() + 1, 0);
    for (std::size_t v = 0; v < M.dims.size(); ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(M.dims[v]) * N.dims[v];
    return off;
}

// The map sending a tuple (f_v) to (N(a) f_{ta} - f_{ha} M(a))_a. Its kernel
// is Hom_A(M, N); it is also the first differential of the Hom complex of the
// standard resolution of M.
inline Mat<Fp> intertwiner_matrix(const Representation& M,
                                  const Representation& N) {
    const Quiver& q = M.A->quiver();
    auto off = hom_offsets(M, N);
    std::vector<std::size_t> roff(q.arrows.size() + 1, 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        roff[a + 1] = roff[a] + static_cast<std::size_t>(M.dims[q.arrows[a].tail]) *
                                    N.dims[q.arrows[a].head];
    Mat<Fp> m(roff.back(), off.back());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int ta = q.arrows[a].tail, ha = q.arrows[a].head;
        for (int i = 0; i < N.dims[ha]; ++i)
            for (int j = 0; j < M.dims[ta]; ++j) {
                std::size_t row = roff[a] + static_cast<std::size_t>(i) * M.dims[ta] + j;
                // N(a) f_{ta}: entry (i,j) = sum_k N(a)(i,k) f_{ta}(k,j)
                for (int k = 0; k < N.dims[ta]; ++k)
                    m(row, off[ta] + static_cast<std::size_t>(k) * M.dims[ta] + j) +=
                        N.arr[a](i, k);
                // - f_{ha} M(a): entry (i,j) = - sum_k f_{ha}(i,k) M(a)(k,j)
                for (int k = 0; k < M.dims[ha]; ++k)
                    m(row, off[ha] + static_cast<std::size_t>(i) * M.dims[ha] + k) -=
                        M.arr[a](k, j);
            }
    }
    return m;
}

}  // namespace detail

inline long long hom_dim(const Representation& M, const Representation& N) {
    Mat<Fp> m = detail::intertwiner_matrix(M, N);
    return static_cast<long long>(m.cols()) - static_cast<long long>(rank(m));
}

// Basis of Hom_A(M, N) as tuples of per-vertex matrices.
inline std::vector<std::vector<Mat<Fp>>> hom_basis(const Representation& M,
                                                   const Representation& N) {
    Mat<Fp> k = kernel_basis(detail::intertwiner_matrix(M, N));
    auto off = detail::hom_offsets(M, N);
    std::vector<std::vector<Mat<Fp>>> out;
    for (std::size_t c = 0; c < k.cols(); ++c) {
        std::vector<Mat<Fp>> f;
        for (std::size_t v = 0; v < M.dims.size(); ++v) {
            Mat<Fp> fv(N.dims[v], M.dims[v]);
            for (int i = 0; i < N.dims[v]; ++i)
                for (int j = 0; j < M.dims[v]; ++j)
                    fv(i, j) = k(off[v] + static_cast<std::size_t>(i) * M.dims[v] + j, c);
            f.push_back(std::move(fv));
        }
        out.push_back(std::move(f));
    }
    return out;
}

// dim Ext^1(M, N), from the Hom complex of the standard resolution
// ⊕_r A e_{hr} ⊗ M(tr) -> ⊕_a A e_{ha} ⊗ M(ta) -> ⊕_v A e_v ⊗ M(v) -> M,
// whose relation slots are a minimal generating set of the defining ideal.
inline long long ext1_dim(const Representation& M, const Representation& N) {
    const AlgebraModel& A = *M.A;
    const Quiver& q = A.quiver();
    Mat<Fp> d0 = detail::intertwiner_matrix(M, N);

    std::vector<RelElem> q2 = A.minimal_relations();
    std::vector<std::size_t> aoff(q.arrows.size() + 1, 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        aoff[a + 1] = aoff[a] + static_cast<std::size_t>(M.dims[q.arrows[a].tail]) *
                                    N.dims[q.arrows[a].head];
    std::vector<std::size_t> roff(q2.size() + 1, 0);
    for (std::size_t r = 0; r < q2.size(); ++r)
        roff[r + 1] = roff[r] + static_cast<std::size_t>(M.dims[q2[r].tail]) *
                                    N.dims[q2[r].head];
    Mat<Fp> d1(roff.back(), aoff.back());
    for (std::size_t r = 0; r < q2.size(); ++r) {
        int rt = q2[r].tail;
        for (const auto& [coeff, path] : q2[r].terms) {
            for (std::size_t pos = 0; pos < path.size(); ++pos) {
                int a = path[pos];
                int ta = q.arrows[a].tail, ha = q.arrows[a].head;
                std::vector<int> prefix(path.begin(), path.begin() + pos);
                std::vector<int> suffix(path.begin() + pos + 1, path.end());
                Mat<Fp> pre = path_matrix(M, rt, prefix);   // M(tr) -> M(ta)
                Mat<Fp> suf = path_matrix(N, ha, suffix);   // N(ha) -> N(hr)
                // theta_a = E_{ik} contributes coeff * suf(.,i) pre(k,.)
                for (int i = 0; i < N.dims[ha]; ++i)
                    for (int k = 0; k < M.dims[ta]; ++k) {
                        std::size_t col = aoff[a] +
                                          static_cast<std::size_t>(i) * M.dims[ta] + k;
                        for (int ii = 0; ii < N.dims[q2[r].head]; ++ii) {
                            if (suf(ii, i).is_zero()) continue;
                            for (int jj = 0; jj < M.dims[rt]; ++jj)
                                d1(roff[r] + static_cast<std::size_t>(ii) *
                                                 M.dims[rt] + jj,
                                   col) += coeff * suf(ii, i) * pre(k, jj);
                        }
                    }
            }
        }
    }
    long long mid = static_cast<long long>(aoff.back());
    return mid - static_cast<long long>(rank(d1)) -
           static_cast<long long>(rank(d0));
}

// ---- presentations of and from representations ----

// Block-diagonal action of an arrow on the degree-u part of ⊕_i A e_{cols[i]}.
namespace detail {
inline Mat<Fp> p0_arrow_matrix(const AlgebraModel& A, const std::vector<int>& cols,
                               int arrow) {
    AlgElem ae = A.arrow_elem(arrow);
    std::size_t dn = 0, cn = 0;
    for (int v : cols) {
        dn += A.dim_bigrade(v, ae.src);
        cn += A.dim_bigrade(v, ae.tgt);
    }
    Mat<Fp> m(cn, dn);
    std::size_t ro = 0, co = 0;
    for (int v : cols) {
        Mat<Fp> blk = A.left_mult(ae, v);
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                m(ro + i, co + j) = blk(i, j);
        ro += blk.rows();
        co += blk.cols();
    }
    return m;
}
}  // namespace detail

// The cokernel module of a two-term complex: coordinates at each vertex are a
// canonical unit-vector complement of the image inside P0.
inline Representation cokernel(const Presentation& f) {
    const AlgebraModel& A = *f.A;
    int n = A.n();
    std::vector<std::vector<std::size_t>> keep(n);
    std::vector<Mat<Fp>> fmat(n);
    std::vector<int> dims(n);
    for (int u = 0; u < n; ++u) {
        fmat[u] = f.vertex_matrix(u);
        keep[u] = cokernel_coords(fmat[u]);
        dims[u] = static_cast<int>(keep[u].size());
    }
    Representation m = Representation::zero(A, dims);
    for (std::size_t a = 0; a < A.quiver().arrows.size(); ++a) {
        int u = A.quiver().arrows[a].tail, up = A.quiver().arrows[a].head;
        Mat<Fp> act = detail::p0_arrow_matrix(A, f.cols, static_cast<int>(a));
        // express the image of each kept coordinate modulo im(f) at the head
        Mat<Fp> units(f.p0_dim(up), keep[up].size());
        for (std::size_t k = 0; k < keep[up].size(); ++k)
            units(keep[up][k], k) = Fp::one();
        Mat<Fp> aug = hcat(fmat[up], units);
        for (std::size_t j = 0; j < keep[u].size(); ++j) {
            std::vector<Fp> img = act.col(keep[u][j]);
            auto x = solve(aug, img);
            if (!x)
                throw DomainError("cokernel: inconsistent projection");
            for (std::size_t i = 0; i < keep[up].size(); ++i)
                m.arr[a](i, j) = (*x)[fmat[up].cols() + i];
        }
    }
    return m;
}

// Betti numbers of the minimal projective presentation, computed in place:
// beta0(v) from the cokernel of phi_v : ⊕_{head(a)=v} M(ta) -> M(v), beta1(v)
// from the homology of psi_v -> phi_v, where psi_v collects, for each minimal
// relation ending at v, the action of the prefix of each term at its last
// arrow.
inline std::pair<std::vector<long long>, std::vector<long long>> betti(
    const Representation& M) {
    const AlgebraModel& A = *M.A;
    const Quiver& q = A.quiver();
    std::vector<RelElem> q2 = A.minimal_relations();
    std::vector<long long> b0(A.n()), b1(A.n());
    for (int v = 0; v < A.n(); ++v) {
        std::vector<std::size_t> aoff;
        std::size_t dn = 0;
        std::vector<std::size_t> arrows_in;
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].head == v) {
                arrows_in.push_back(a);
                aoff.push_back(dn);
                dn += M.dims[q.arrows[a].tail];
            }
        Mat<Fp> phi(M.dims[v], dn);
        for (std::size_t t = 0; t < arrows_in.size(); ++t) {
            const Mat<Fp>& blk = M.arr[arrows_in[t]];
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j)
                    phi(i, aoff[t] + j) = blk(i, j);
        }
        b0[v] = M.dims[v] - static_cast<long long>(rank(phi));

        std::size_t rn = 0;
        std::vector<std::size_t> roff;
        std::vector<std::size_t> rels_in;
        for (std::size_t r = 0; r < q2.size(); ++r)
            if (q2[r].head == v) {
                rels_in.push_back(r);
                roff.push_back(rn);
                rn += M.dims[q2[r].tail];
            }
        Mat<Fp> psi(dn, rn);
        for (std::size_t t = 0; t < rels_in.size(); ++t) {
            const RelElem& r = q2[rels_in[t]];
            for (const auto& [coeff, path] : r.terms) {
                int last = path.back();
                std::vector<int> prefix(path.begin(), path.end() - 1);
                Mat<Fp> pre = path_matrix(M, r.tail, prefix);
                std::size_t slot = 0;
                while (arrows_in[slot] != static_cast<std::size_t>(last)) ++slot;
                for (std::size_t i = 0; i < pre.rows(); ++i)
                    for (std::size_t j = 0; j < pre.cols(); ++j)
                        psi(aoff[slot] + i, roff[t] + j) += coeff * pre(i, j);
            }
        }
        long long kernel = static_cast<long long>(dn) -
                           static_cast<long long>(rank(phi));
        b1[v] = kernel - static_cast<long long>(rank(psi));
    }
    return {b0, b1};
}

// Minimal projective presentation: projective cover from the top of M, then
// the top of its kernel, with the kernel generators read off as algebra
// coefficients.
inline Presentation minimal_presentation(const Representation& M) {
    const AlgebraModel& A = *M.A;
    const Quiver& q = A.quiver();
    int n = A.n();
    // top of M: unit-vector complement of the radical sum at each vertex
    std::vector<int> gen_vertex;
    std::vector<std::vector<Fp>> gen_vec;  // in M(v)
    for (int v = 0; v < n; ++v) {
        std::size_t dn = 0;
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].head == v) dn += M.dims[q.arrows[a].tail];
        Mat<Fp> phi(M.dims[v], dn);
        std::size_t off = 0;
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].head == v) {
                for (std::size_t i = 0; i < M.arr[a].rows(); ++i)
                    for (std::size_t j = 0; j < M.arr[a].cols(); ++j)
                        phi(i, off + j) = M.arr[a](i, j);
                off += M.arr[a].cols();
            }
        for (std::size_t k : cokernel_coords(phi)) {
            gen_vertex.push_back(v);
            std::vector<Fp> e(M.dims[v], Fp::zero());
            e[k] = Fp::one();
            gen_vec.push_back(std::move(e));
        }
    }
    // the cover map P0(u) -> M(u), with P0 = ⊕ A e_{gen_vertex[i]}
    auto cover_matrix = [&](int u) {
        std::size_t dn = 0;
        for (int v : gen_vertex) dn += A.dim_bigrade(v, u);
        Mat<Fp> c(M.dims[u], dn);
        std::size_t off = 0;
        for (std::size_t i = 0; i < gen_vertex.size(); ++i) {
            int v = gen_vertex[i];
            for (std::size_t k = 0; k < A.dim_bigrade(v, u); ++k) {
                const BasisPath& p = A.basis_path(A.basis_at(v, u)[k]);
                std::vector<Fp> img =
                    path_matrix(M, v, p.arrows).apply(gen_vec[i]);
                c.set_col(off + k, img);
            }
            off += A.dim_bigrade(v, u);
        }
        return c;
    };
    // kernel of the cover as a subrepresentation of P0
    std::vector<Mat<Fp>> kb(n);  // P0(u)-coordinates of the kernel basis
    std::vector<int> kdim(n);
    for (int u = 0; u < n; ++u) {
        kb[u] = kernel_basis(cover_matrix(u));
        kdim[u] = static_cast<int>(kb[u].cols());
    }
    Representation K = Representation::zero(A, kdim);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int u = q.arrows[a].tail, up = q.arrows[a].head;
        Mat<Fp> act = detail::p0_arrow_matrix(A, gen_vertex, static_cast<int>(a));
        for (int j = 0; j < kdim[u]; ++j) {
            auto x = solve(kb[up], act.apply(kb[u].col(j)));
            if (!x) throw DomainError("presentation: kernel not invariant");
            for (int i = 0; i < kdim[up]; ++i) K.arr[a](i, j) = (*x)[i];
        }
    }
    // top of K lifts to the relation generators
    std::vector<int> rel_vertex;
    std::vector<std::vector<Fp>> rel_vec;  // in P0(u)
    for (int u = 0; u < n; ++u) {
        std::size_t dn = 0;
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].head == u) dn += kdim[q.arrows[a].tail];
        Mat<Fp> phi(kdim[u], dn);
        std::size_t off = 0;
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].head == u) {
                for (std::size_t i = 0; i < K.arr[a].rows(); ++i)
                    for (std::size_t j = 0; j < K.arr[a].cols(); ++j)
                        phi(i, off + j) = K.arr[a](i, j);
                off += K.arr[a].cols();
            }
        for (std::size_t k : cokernel_coords(phi)) {
            rel_vertex.push_back(u);
            rel_vec.push_back(kb[u].col(k));
        }
    }
    Presentation f = Presentation::zero(A, rel_vertex, gen_vertex);
    for (std::size_t j = 0; j < rel_vertex.size(); ++j) {
        int u = rel_vertex[j];
        std::size_t off = 0;
        for (std::size_t i = 0; i < gen_vertex.size(); ++i) {
            int v = gen_vertex[i];
            for (std::size_t k = 0; k < A.dim_bigrade(v, u); ++k)
                f.F[j][i].coords[k] = rel_vec[j][off + k];
            off += A.dim_bigrade(v, u);
        }
    }
    return f;
}

// Generic (hom, ext) between representations of a relation-free algebra,
// taken as the minimum over independently sampled pairs.
inline std::pair<long long, long long> generic_hom_ext(
    const AlgebraModel& A, const std::vector<long long>& d1,
    const std::vector<long long>& d2, int trials, Rng& rng) {
    if (!A.relations().empty())
        throw HasRelations("generic_hom_ext requires an algebra without relations");
    long long h = -1, e = -1;
    for (int t = 0; t < trials; ++t) {
        Representation M = sample_representation(A, d1, rng);
        Representation N = sample_representation(A, d2, rng);
        long long ht = hom_dim(M, N), et = ext1_dim(M, N);
        if (h < 0 || ht < h) h = ht;
        if (e < 0 || et < e) e = et;
    }
    return {h, e};
}

}  // namespace presekit
