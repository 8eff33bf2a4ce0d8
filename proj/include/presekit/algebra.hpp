#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace presekit {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotNilpotent : DomainError {
    explicit NotNilpotent(const std::string& what) : DomainError(what) {}
};
struct Inadmissible : DomainError {
    explicit Inadmissible(const std::string& what) : DomainError(what) {}
};

struct Arrow {
    std::string name;
    int tail = 0, head = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int n() const { return static_cast<int>(vertices.size()); }
    int vertex_index(const std::string& name) const {
        for (int i = 0; i < n(); ++i)
            if (vertices[i] == name) return i;
        throw Inadmissible("unknown vertex: " + name);
    }
    int arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return static_cast<int>(i);
        throw Inadmissible("unknown arrow: " + name);
    }
};

// A path is a sequence of arrow indices in application order: arrows[0] acts
// first. The trivial path at a vertex is the empty sequence plus the vertex.
struct PathTerm {
    long long coeff = 1;
    int tail = 0;  // only meaningful for empty paths
    std::vector<int> arrows;
};

// A k-combination of parallel paths (shared tail and head).
struct Relation {
    std::vector<PathTerm> terms;
};

struct BasisPath {
    int tail = 0, head = 0;
    std::vector<int> arrows;
};

// Element of e_{tgt} A e_{src}: a combination of basis paths from src to tgt.
struct AlgElem {
    int src = 0, tgt = 0;
    std::vector<Fp> coords;

    bool is_zero() const {
        for (Fp c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

// A relation already reduced to explicit field coefficients, tagged with its
// endpoints. Output form of minimal_relations.
struct RelElem {
    int tail = 0, head = 0;
    std::vector<std::pair<Fp, std::vector<int>>> terms;
};

class AlgebraModel {
  public:
    // Admissible build: every relation homogeneous with all paths of length
    // >= 2. The raw flag admits shorter generators (used by quotient
    // constructions); those bypass the admissibility check only.
    static AlgebraModel build(const Quiver& q, const std::vector<Relation>& rels,
                              int L, bool raw = false) {
        AlgebraModel a;
        a.q_ = q;
        a.rels_ = rels;
        a.L_ = L;
        for (const Relation& r : rels) a.validate(r, raw);
        a.run_reduction();
        a.build_table();
        return a;
    }

    const Quiver& quiver() const { return q_; }
    const std::vector<Relation>& relations() const { return rels_; }
    int max_len() const { return L_; }
    int n() const { return q_.n(); }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisPath>& basis() const { return basis_; }
    const BasisPath& basis_path(std::size_t i) const { return basis_[i]; }

    // Global indices of basis paths from v to w.
    const std::vector<std::size_t>& basis_at(int v, int w) const {
        return at_[v][w];
    }
    std::size_t dim_bigrade(int v, int w) const { return at_[v][w].size(); }

    // ---- elements ----

    AlgElem zero_elem(int src, int tgt) const {
        return AlgElem{src, tgt, std::vector<Fp>(dim_bigrade(src, tgt), Fp::zero())};
    }
    AlgElem unit(int v) const {
        AlgElem e = zero_elem(v, v);
        for (std::size_t k = 0; k < at_[v][v].size(); ++k)
            if (basis_[at_[v][v][k]].arrows.empty()) e.coords[k] = Fp::one();
        return e;
    }
    AlgElem arrow_elem(int a) const {
        return reduce_path(q_.arrows[a].tail, {a});
    }
    AlgElem basis_elem(std::size_t global) const {
        const BasisPath& p = basis_[global];
        AlgElem e = zero_elem(p.tail, p.head);
        const auto& slot = at_[p.tail][p.head];
        for (std::size_t k = 0; k < slot.size(); ++k)
            if (slot[k] == global) e.coords[k] = Fp::one();
        return e;
    }

    // Normal form of an arbitrary path as an element of its bigrade.
    AlgElem reduce_path(int tail, const std::vector<int>& arrows) const {
        int head = tail;
        for (int a : arrows) {
            if (q_.arrows[a].tail != head)
                throw Inadmissible("path not composable");
            head = q_.arrows[a].head;
        }
        AlgElem e = zero_elem(tail, head);
        auto it = nf_.find(key(tail, arrows));
        if (it == nf_.end()) return e;  // dropped path: zero
        const auto& slot = at_[tail][head];
        for (const auto& [g, c] : it->second) {
            for (std::size_t k = 0; k < slot.size(); ++k)
                if (slot[k] == g) e.coords[k] += c;
        }
        return e;
    }

    AlgElem reduce_combination(const Relation& r) const {
        if (r.terms.empty()) throw Inadmissible("empty combination");
        auto [t, h] = endpoints(r.terms[0]);
        AlgElem e = zero_elem(t, h);
        for (const PathTerm& term : r.terms) {
            int tl = term.arrows.empty() ? term.tail
                                         : q_.arrows[term.arrows[0]].tail;
            AlgElem p = reduce_path(tl, term.arrows);
            Fp c{term.coeff};
            for (std::size_t k = 0; k < e.coords.size(); ++k)
                e.coords[k] += c * p.coords[k];
        }
        return e;
    }

    AlgElem add(const AlgElem& a, const AlgElem& b) const {
        AlgElem r = a;
        for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
        return r;
    }
    AlgElem scale(Fp c, const AlgElem& a) const {
        AlgElem r = a;
        for (Fp& x : r.coords) x *= c;
        return r;
    }

    // Product a.b with source(a) = target(b): apply b first, then a.
    AlgElem multiply(const AlgElem& a, const AlgElem& b) const {
        AlgElem r = zero_elem(b.src, a.tgt);
        if (a.src != b.tgt) return r;
        const auto& sa = at_[a.src][a.tgt];
        const auto& sb = at_[b.src][b.tgt];
        const auto& sr = at_[b.src][a.tgt];
        for (std::size_t i = 0; i < sa.size(); ++i) {
            if (a.coords[i].is_zero()) continue;
            for (std::size_t j = 0; j < sb.size(); ++j) {
                if (b.coords[j].is_zero()) continue;
                const auto& prod = table_.at({sa[i], sb[j]});
                Fp c = a.coords[i] * b.coords[j];
                for (const auto& [g, cc] : prod)
                    for (std::size_t k = 0; k < sr.size(); ++k)
                        if (sr[k] == g) r.coords[k] += c * cc;
            }
        }
        return r;
    }

    // Matrix of left multiplication b -> a.b on e_{a.src} A e_{u} -> e_{a.tgt} A e_u
    // ... domain = paths u -> a.src, codomain = paths u -> a.tgt.
    Mat<Fp> left_mult(const AlgElem& a, int u) const {
        std::size_t dn = dim_bigrade(u, a.src), cn = dim_bigrade(u, a.tgt);
        Mat<Fp> m(cn, dn);
        for (std::size_t j = 0; j < dn; ++j) {
            AlgElem b = basis_elem(at_[u][a.src][j]);
            AlgElem p = multiply(a, b);
            for (std::size_t i = 0; i < cn; ++i) m(i, j) = p.coords[i];
        }
        return m;
    }

    // Matrix of right multiplication x -> x.a on paths a.tgt -> t mapping to
    // paths a.src -> t.
    Mat<Fp> right_mult(const AlgElem& a, int t) const {
        std::size_t dn = dim_bigrade(a.tgt, t), cn = dim_bigrade(a.src, t);
        Mat<Fp> m(cn, dn);
        for (std::size_t j = 0; j < dn; ++j) {
            AlgElem x = basis_elem(at_[a.tgt][t][j]);
            AlgElem p = multiply(x, a);
            for (std::size_t i = 0; i < cn; ++i) m(i, j) = p.coords[i];
        }
        return m;
    }

    // Cartan matrix: row v, column w = dim e_w A e_v = #paths v -> w.
    std::vector<std::vector<long long>> cartan() const {
        std::vector<std::vector<long long>> c(n(), std::vector<long long>(n()));
        for (int v = 0; v < n(); ++v)
            for (int w = 0; w < n(); ++w)
                c[v][w] = static_cast<long long>(dim_bigrade(v, w));
        return c;
    }

    // A basis of I/(JI+IJ), as explicit combinations lying in I. Computed on
    // the unpruned degree-<=L path coordinates so the full ideal slice is
    // visible.
    std::vector<RelElem> minimal_relations() const {
        int nn = n();
        // all composable paths up to length L, per bigrade, sorted
        std::vector<std::vector<std::vector<BasisPath>>> paths(
            nn, std::vector<std::vector<BasisPath>>(nn));
        std::vector<BasisPath> frontier;
        for (int v = 0; v < nn; ++v) {
            BasisPath p{v, v, {}};
            paths[v][v].push_back(p);
            frontier.push_back(p);
        }
        for (int len = 1; len <= L_; ++len) {
            std::vector<BasisPath> next;
            for (const BasisPath& p : frontier)
                for (int a = 0; a < static_cast<int>(q_.arrows.size()); ++a) {
                    if (q_.arrows[a].tail != p.head) continue;
                    BasisPath np{p.tail, q_.arrows[a].head, p.arrows};
                    np.arrows.push_back(a);
                    paths[np.tail][np.head].push_back(np);
                    next.push_back(np);
                }
            frontier = std::move(next);
        }
        for (int v = 0; v < nn; ++v)
            for (int w = 0; w < nn; ++w)
                std::sort(paths[v][w].begin(), paths[v][w].end(), path_less);

        auto coord_of = [&paths](int t, int h, const std::vector<int>& arrows) {
            const auto& ps = paths[t][h];
            for (std::size_t d = 0; d < ps.size(); ++d)
                if (ps[d].arrows == arrows) return d;
            return ps.size();
        };
        // product u.r.w vectors per bigrade, with (t, h) running over cofactor
        // endpoints; collect the ideal slice and its arrow-shifts.
        std::map<std::pair<int, int>, std::vector<std::vector<Fp>>> slice;
        for (const Relation& r : rels_) {
            auto [rt, rh] = endpoints(r.terms[0]);
            for (int wt = 0; wt < nn; ++wt)
                for (const BasisPath& w : paths[wt][rt])
                    for (int uh = 0; uh < nn; ++uh)
                        for (const BasisPath& u : paths[rh][uh]) {
                            std::vector<Fp> vec(paths[wt][uh].size(), Fp::zero());
                            bool nonzero = false;
                            for (const PathTerm& term : r.terms) {
                                std::vector<int> arrows = w.arrows;
                                arrows.insert(arrows.end(), term.arrows.begin(),
                                              term.arrows.end());
                                arrows.insert(arrows.end(), u.arrows.begin(),
                                              u.arrows.end());
                                if (static_cast<int>(arrows.size()) > L_)
                                    continue;
                                std::size_t d = coord_of(wt, uh, arrows);
                                if (d < vec.size()) {
                                    vec[d] += Fp{term.coeff};
                                    nonzero = true;
                                }
                            }
                            if (nonzero)
                                slice[{wt, uh}].push_back(std::move(vec));
                        }
        }
        // JI+IJ subspace: any u.r.w with |u|+|w| >= 1, i.e. the products where
        // a cofactor is nontrivial.
        std::map<std::pair<int, int>, SpanTracker<Fp>> ji;
        for (auto& [bg, vecs] : slice) {
            auto [t, h] = bg;
            ji.emplace(bg, SpanTracker<Fp>(paths[t][h].size()));
        }
        for (const Relation& r : rels_) {
            auto [rt, rh] = endpoints(r.terms[0]);
            for (int wt = 0; wt < nn; ++wt)
                for (const BasisPath& w : paths[wt][rt])
                    for (int uh = 0; uh < nn; ++uh)
                        for (const BasisPath& u : paths[rh][uh]) {
                            if (u.arrows.empty() && w.arrows.empty()) continue;
                            std::vector<Fp> vec(paths[wt][uh].size(), Fp::zero());
                            bool nonzero = false;
                            for (const PathTerm& term : r.terms) {
                                std::vector<int> arrows = w.arrows;
                                arrows.insert(arrows.end(), term.arrows.begin(),
                                              term.arrows.end());
                                arrows.insert(arrows.end(), u.arrows.begin(),
                                              u.arrows.end());
                                if (static_cast<int>(arrows.size()) > L_)
                                    continue;
                                std::size_t d = coord_of(wt, uh, arrows);
                                if (d < vec.size()) {
                                    vec[d] += Fp{term.coeff};
                                    nonzero = true;
                                }
                            }
                            if (nonzero) ji.at({wt, uh}).insert(std::move(vec));
                        }
        }
        std::vector<RelElem> out;
        for (auto& [bg, vecs] : slice) {
            auto [t, h] = bg;
            SpanTracker<Fp>& tr = ji.at(bg);
            for (const auto& vec : vecs) {
                if (!tr.insert(vec)) continue;
                RelElem r;
                r.tail = t;
                r.head = h;
                for (std::size_t k = 0; k < vec.size(); ++k)
                    if (!vec[k].is_zero())
                        r.terms.emplace_back(vec[k], paths[t][h][k].arrows);
                out.push_back(std::move(r));
            }
        }
        return out;
    }

    AlgebraModel opposite() const {
        Quiver oq;
        oq.vertices = q_.vertices;
        for (const Arrow& a : q_.arrows)
            oq.arrows.push_back({a.name, a.head, a.tail});
        std::vector<Relation> orels;
        for (const Relation& r : rels_) {
            Relation ro;
            for (const PathTerm& t : r.terms) {
                PathTerm to = t;
                std::reverse(to.arrows.begin(), to.arrows.end());
                if (to.arrows.empty())
                    to.tail = t.tail;
                ro.terms.push_back(std::move(to));
            }
            orels.push_back(std::move(ro));
        }
        return build(oq, orels, L_, /*raw=*/true);
    }

    // Transport an element to the opposite algebra (path reversal).
    AlgElem to_opposite(const AlgebraModel& op, const AlgElem& a) const {
        AlgElem r = op.zero_elem(a.tgt, a.src);
        const auto& slot = at_[a.src][a.tgt];
        for (std::size_t k = 0; k < slot.size(); ++k) {
            if (a.coords[k].is_zero()) continue;
            std::vector<int> rev = basis_[slot[k]].arrows;
            std::reverse(rev.begin(), rev.end());
            AlgElem p = op.reduce_path(a.tgt, rev);
            for (std::size_t i = 0; i < r.coords.size(); ++i)
                r.coords[i] += a.coords[k] * p.coords[i];
        }
        return r;
    }

    std::uint64_t content_hash() const {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](const std::string& s) {
            for (char c : s) {
                h ^= static_cast<unsigned char>(c);
                h *= 1099511628211ULL;
            }
            h ^= 0xff;
            h *= 1099511628211ULL;
        };
        for (const auto& v : q_.vertices) mix(v);
        for (const Arrow& a : q_.arrows) {
            mix(a.name);
            mix(std::to_string(a.tail));
            mix(std::to_string(a.head));
        }
        for (const Relation& r : rels_)
            for (const PathTerm& t : r.terms) {
                mix(std::to_string(t.coeff));
                for (int a : t.arrows) mix(std::to_string(a));
            }
        return h;
    }

  private:
    std::pair<int, int> endpoints(const PathTerm& t) const {
        if (t.arrows.empty()) return {t.tail, t.tail};
        int tl = q_.arrows[t.arrows[0]].tail;
        int hd = q_.arrows[t.arrows.back()].head;
        return {tl, hd};
    }

    void validate(const Relation& r, bool raw) const {
        if (r.terms.empty()) throw Inadmissible("relation with no terms");
        auto e0 = endpoints(r.terms[0]);
        for (const PathTerm& t : r.terms) {
            int at = t.arrows.empty() ? t.tail : q_.arrows[t.arrows[0]].tail;
            int cur = at;
            for (int a : t.arrows) {
                if (a < 0 || a >= static_cast<int>(q_.arrows.size()))
                    throw Inadmissible("bad arrow index in relation");
                if (q_.arrows[a].tail != cur)
                    throw Inadmissible("relation path not composable");
                cur = q_.arrows[a].head;
            }
            if (endpoints(t) != e0)
                throw Inadmissible("relation not homogeneous");
            if (!raw && t.arrows.size() < 2)
                throw Inadmissible("relation term of length < 2");
        }
    }

    static std::vector<int> key(int tail, const std::vector<int>& arrows) {
        std::vector<int> k;
        k.reserve(arrows.size() + 1);
        k.push_back(tail);
        for (int a : arrows) k.push_back(a);
        return k;
    }

    // Path order: length, then arrow sequence lexicographically, trivial paths
    // by vertex.
    static bool path_less(const BasisPath& a, const BasisPath& b) {
        if (a.arrows.size() != b.arrows.size())
            return a.arrows.size() < b.arrows.size();
        if (a.arrows.empty()) return a.tail < b.tail;
        return a.arrows < b.arrows;
    }

    bool path_killed(int tail, const std::vector<int>& arrows) const {
        int cur = tail;
        if (dead_vertices_.count(cur)) return true;
        for (int a : arrows) {
            cur = q_.arrows[a].head;
            if (dead_vertices_.count(cur)) return true;
        }
        for (std::size_t i = 0; i < arrows.size(); ++i)
            for (std::size_t j = i + 1; j <= arrows.size(); ++j) {
                if (j - i == 0) continue;
                std::vector<int> sub(arrows.begin() + i, arrows.begin() + j);
                if (zero_paths_.count(sub)) return true;
            }
        return false;
    }

    void run_reduction() {
        int nn = n();
        for (;;) {
            // Enumerate kept paths by length.
            kept_.assign(nn, std::vector<std::vector<BasisPath>>(nn));
            std::vector<BasisPath> frontier;
            for (int v = 0; v < nn; ++v)
                if (!dead_vertices_.count(v)) {
                    BasisPath p{v, v, {}};
                    kept_[v][v].push_back(p);
                    frontier.push_back(p);
                }
            for (int len = 1; len <= L_; ++len) {
                std::vector<BasisPath> next;
                for (const BasisPath& p : frontier)
                    for (int a = 0; a < static_cast<int>(q_.arrows.size()); ++a) {
                        if (q_.arrows[a].tail != p.head) continue;
                        BasisPath np{p.tail, q_.arrows[a].head, p.arrows};
                        np.arrows.push_back(a);
                        if (path_killed(np.tail, np.arrows)) continue;
                        kept_[np.tail][np.head].push_back(np);
                        next.push_back(np);
                    }
                frontier = std::move(next);
            }
            for (int v = 0; v < nn; ++v)
                for (int w = 0; w < nn; ++w)
                    std::sort(kept_[v][w].begin(), kept_[v][w].end(), path_less);

            // Ideal slice per bigrade: all products u . r . w of kept
            // cofactors with the generators, truncated at length L.
            std::map<std::pair<int, int>, SpanTracker<Fp>> trackers;
            for (const Relation& r : rels_) {
                auto [rt, rh] = endpoints(r.terms[0]);
                for (int wt = 0; wt < nn; ++wt) {
                    for (const BasisPath& w : kept_[wt][rt]) {
                        for (int uh = 0; uh < nn; ++uh) {
                            for (const BasisPath& u : kept_[rh][uh]) {
                                auto it = trackers.find({wt, uh});
                                if (it == trackers.end())
                                    it = trackers
                                             .emplace(std::make_pair(wt, uh),
                                                      SpanTracker<Fp>(
                                                          kept_[wt][uh].size()))
                                             .first;
                                std::vector<Fp> vec(kept_[wt][uh].size(),
                                                    Fp::zero());
                                bool nonzero = false;
                                for (const PathTerm& term : r.terms) {
                                    std::vector<int> arrows = w.arrows;
                                    arrows.insert(arrows.end(),
                                                  term.arrows.begin(),
                                                  term.arrows.end());
                                    arrows.insert(arrows.end(),
                                                  u.arrows.begin(),
                                                  u.arrows.end());
                                    if (static_cast<int>(arrows.size()) > L_)
                                        continue;
                                    if (path_killed(wt, arrows)) continue;
                                    const auto& kk = kept_[wt][uh];
                                    for (std::size_t d = 0; d < kk.size(); ++d)
                                        if (kk[d].arrows == arrows) {
                                            vec[d] += Fp{term.coeff};
                                            nonzero = true;
                                            break;
                                        }
                                }
                                if (nonzero) it->second.insert(std::move(vec));
                            }
                        }
                    }
                }
            }

            // Extract normal forms and newly discovered zero paths.
            bool grew = false;
            nf_.clear();
            basis_.clear();
            at_.assign(nn, std::vector<std::vector<std::size_t>>(nn));
            std::map<std::vector<int>, bool> is_pivot;
            for (auto& [bg, tr] : trackers) {
                auto [t, h] = bg;
                const auto& kept = kept_[t][h];
                for (std::size_t r = 0; r < tr.rows().size(); ++r) {
                    const auto& row = tr.rows()[r];
                    std::size_t piv = tr.pivots()[r];
                    bool zero_rest = true;
                    for (std::size_t k = 0; k < row.size(); ++k)
                        if (k != piv && !row[k].is_zero()) zero_rest = false;
                    if (zero_rest) {
                        // kept path identically zero in the quotient
                        if (kept[piv].arrows.empty()) {
                            if (!dead_vertices_.count(t)) {
                                dead_vertices_.insert(t);
                                grew = true;
                            }
                        } else if (!zero_paths_.count(kept[piv].arrows)) {
                            zero_paths_.insert(kept[piv].arrows);
                            grew = true;
                        }
                    }
                }
            }
            if (grew) continue;

            // Stable: record normal forms and the basis.
            std::vector<BasisPath> all;
            for (int v = 0; v < nn; ++v)
                for (int w = 0; w < nn; ++w)
                    for (const BasisPath& p : kept_[v][w]) all.push_back(p);
            std::sort(all.begin(), all.end(), [](const BasisPath& a,
                                                 const BasisPath& b) {
                return path_less(a, b);
            });
            std::map<std::vector<int>, std::size_t> global;
            for (const BasisPath& p : all) {
                auto it = trackers.find({p.tail, p.head});
                bool pivot = false;
                if (it != trackers.end()) {
                    const auto& kept = kept_[p.tail][p.head];
                    for (std::size_t r = 0; r < it->second.pivots().size(); ++r)
                        if (kept[it->second.pivots()[r]].arrows == p.arrows)
                            pivot = true;
                }
                if (pivot) continue;
                std::size_t g = basis_.size();
                basis_.push_back(p);
                at_[p.tail][p.head].push_back(g);
                global[key(p.tail, p.arrows)] = g;
                nf_[key(p.tail, p.arrows)] = {{g, Fp::one()}};
            }
            for (auto& [bg, tr] : trackers) {
                auto [t, h] = bg;
                const auto& kept = kept_[t][h];
                for (std::size_t r = 0; r < tr.rows().size(); ++r) {
                    const auto& row = tr.rows()[r];
                    std::size_t piv = tr.pivots()[r];
                    std::vector<std::pair<std::size_t, Fp>> form;
                    for (std::size_t k = 0; k < row.size(); ++k) {
                        if (k == piv || row[k].is_zero()) continue;
                        auto it = global.find(key(t, kept[k].arrows));
                        if (it == global.end())
                            throw Inadmissible("reduction error: non-basis tail");
                        form.emplace_back(it->second, -row[k]);
                    }
                    nf_[key(t, kept[piv].arrows)] = std::move(form);
                }
            }

            // Nilpotency: all kept length-L paths must be zero.
            for (const BasisPath& p : basis_)
                if (static_cast<int>(p.arrows.size()) >= L_)
                    throw NotNilpotent(
                        "path of length " + std::to_string(L_) +
                        " does not reduce to zero; raise max_path_length or "
                        "check the relations");
            return;
        }
    }

    void build_table() {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (basis_[j].head != basis_[i].tail) continue;
                std::vector<int> arrows = basis_[j].arrows;
                arrows.insert(arrows.end(), basis_[i].arrows.begin(),
                              basis_[i].arrows.end());
                std::vector<std::pair<std::size_t, Fp>> prod;
                if (static_cast<int>(arrows.size()) <= L_ &&
                    !path_killed(basis_[j].tail, arrows)) {
                    auto it = nf_.find(key(basis_[j].tail, arrows));
                    if (it != nf_.end()) prod = it->second;
                }
                table_[{i, j}] = std::move(prod);
            }
    }

    Quiver q_;
    std::vector<Relation> rels_;
    int L_ = 0;
    std::vector<BasisPath> basis_;
    std::vector<std::vector<std::vector<std::size_t>>> at_;
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, Fp>>> nf_;
    // product (first . second) meaning: apply `second` then `first`
    std::map<std::pair<std::size_t, std::size_t>,
             std::vector<std::pair<std::size_t, Fp>>>
        table_;
    std::set<std::vector<int>> zero_paths_;
    std::set<int> dead_vertices_;
    std::vector<std::vector<std::vector<BasisPath>>> kept_;
};

inline long long euler_pairing(const std::vector<long long>& delta,
                               const std::vector<long long>& d) {
    if (delta.size() != d.size())
        throw Inadmissible("euler_pairing: length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < delta.size(); ++i) s += delta[i] * d[i];
    return s;
}

}  // namespace presekit
