#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "decompose.hpp"

namespace presekit {

struct ZeroVector : DomainError {
    explicit ZeroVector(const std::string& what) : DomainError(what) {}
};

struct PoleCollision : DomainError {
    explicit PoleCollision(const std::string& what) : DomainError(what) {}
};

struct ScanVertex {
    DeltaVector delta;
    DeltaClass cls = DeltaClass::Wild;
    bool obstructed = false;  // classification hit a field obstruction
};

// The one-skeleton of the compatibility complex over a box of delta-vectors,
// plus its maximal cliques. Simplices are exactly the cliques of the edge
// graph, so the graph determines the whole complex.
struct ComplexData {
    std::uint64_t algebra_hash = 0;
    int box = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<ScanVertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> cliques;
    // distinct vertices on a common positive ray, reported as findings
    std::vector<std::pair<std::size_t, std::size_t>> parallel;
};

namespace detail {

inline void max_cliques(
    const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r,
    std::vector<std::size_t> p, std::vector<std::size_t> x,
    std::vector<std::vector<std::size_t>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // pivot on the candidate with the most neighbours in p
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (std::size_t u : p) {
        std::size_t c = 0;
        for (std::size_t v : p)
            if (adj[u][v]) ++c;
        if (!have || c > best) {
            have = true;
            best = c;
            pivot = u;
        }
    }
    std::vector<std::size_t> cand;
    for (std::size_t v : p)
        if (!have || !adj[pivot][v]) cand.push_back(v);
    for (std::size_t v : cand) {
        std::vector<std::size_t> np, nx;
        for (std::size_t u : p)
            if (adj[v][u]) np.push_back(u);
        for (std::size_t u : x)
            if (adj[v][u]) nx.push_back(u);
        r.push_back(v);
        max_cliques(adj, r, np, nx, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

inline bool positive_parallel(const DeltaVector& a, const DeltaVector& b) {
    // b = (p/q) a with p/q > 0, i.e. a[i] b[j] == a[j] b[i] with matching signs
    bool sign_ok = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        if (a[i] != 0) {
            if ((a[i] > 0) != (b[i] > 0)) return false;
            sign_ok = true;
        }
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    }
    return sign_ok;
}

}  // namespace detail

// Enumerate every nonzero delta-vector with sup-norm at most `box`, keep the
// generically indecomposable ones with their class, and connect two vertices
// when the generic obstruction vanishes in both orders. One presentation is
// sampled per vertex per round and shared across all pair checks of that
// round.
inline ComplexData scan(const AlgebraModel& A, int box, int trials,
                        std::uint64_t seed) {
    if (box < 1) throw DomainError("scan: box bound must be at least 1");
    Rng rng(seed);
    ComplexData c;
    c.algebra_hash = A.content_hash();
    c.box = box;
    c.trials = trials;
    c.seed = seed;
    const int n = A.n();
    DeltaVector d(n, -box);
    for (;;) {
        bool zero = true;
        for (long long x : d) zero &= (x == 0);
        if (!zero) {
            ScanVertex v{d, DeltaClass::Wild, false};
            bool keep = false;
            try {
                v.cls = classify(A, d, trials, rng);
                keep = v.cls != DeltaClass::Decomposable;
            } catch (const FieldObstruction&) {
                v.obstructed = true;
                keep = true;  // flagged, not dropped
            }
            if (keep) c.vertices.push_back(std::move(v));
        }
        int k = n - 1;
        while (k >= 0 && d[k] == box) d[k--] = -box;
        if (k < 0) break;
        ++d[k];
    }
    const std::size_t m = c.vertices.size();
    std::vector<std::vector<long long>> emin(m, std::vector<long long>(m, -1));
    for (int t = 0; t < trials; ++t) {
        std::vector<Presentation> fs;
        fs.reserve(m);
        for (const ScanVertex& v : c.vertices)
            fs.push_back(sample_presentation(A, v.delta, rng));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                long long e = E_dim(fs[i], fs[j]);
                if (emin[i][j] < 0 || e < emin[i][j]) emin[i][j] = e;
            }
    }
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (emin[i][j] == 0 && emin[j][i] == 0) {
                adj[i][j] = adj[j][i] = true;
                c.edges.push_back({i, j});
            }
            if (detail::positive_parallel(c.vertices[i].delta,
                                          c.vertices[j].delta))
                c.parallel.push_back({i, j});
        }
    std::vector<std::size_t> all(m), r;
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    detail::max_cliques(adj, r, all, {}, c.cliques);
    for (auto& q : c.cliques) std::sort(q.begin(), q.end());
    std::sort(c.cliques.begin(), c.cliques.end());
    return c;
}

// The subcomplex spanned by the rigid (real) vertices, with indices renumbered.
inline ComplexData rigid_subcomplex(const ComplexData& c) {
    ComplexData r;
    r.algebra_hash = c.algebra_hash;
    r.box = c.box;
    r.trials = c.trials;
    r.seed = c.seed;
    std::vector<std::size_t> map(c.vertices.size(), SIZE_MAX);
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        if (c.vertices[i].cls == DeltaClass::Real && !c.vertices[i].obstructed) {
            map[i] = r.vertices.size();
            r.vertices.push_back(c.vertices[i]);
        }
    for (auto [i, j] : c.edges)
        if (map[i] != SIZE_MAX && map[j] != SIZE_MAX)
            r.edges.push_back({map[i], map[j]});
    std::vector<std::vector<bool>> adj(r.vertices.size(),
                                       std::vector<bool>(r.vertices.size()));
    for (auto [i, j] : r.edges) adj[i][j] = adj[j][i] = true;
    std::vector<std::size_t> all(r.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> rr;
    detail::max_cliques(adj, rr, all, {}, r.cliques);
    for (auto& q : r.cliques) std::sort(q.begin(), q.end());
    std::sort(r.cliques.begin(), r.cliques.end());
    return r;
}

// Euclidean normalization onto the unit sphere.
inline std::vector<double> lambda_map(const DeltaVector& d) {
    double norm = 0;
    for (long long x : d) norm += static_cast<double>(x) * x;
    if (norm == 0) throw ZeroVector("lambda_map: zero delta-vector");
    norm = std::sqrt(norm);
    std::vector<double> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i] / norm;
    return out;
}

// Stereographic projection of unit sphere points from `pole` onto the plane
// through the origin orthogonal to the pole, returned in a fixed orthonormal
// basis of that plane.
inline std::vector<std::array<double, 2>> stereo_project(
    const std::vector<std::vector<double>>& pts,
    const std::vector<double>& pole) {
    if (pole.size() != 3)
        throw DomainError("stereo_project: expected points on the 2-sphere");
    double pn = std::sqrt(pole[0] * pole[0] + pole[1] * pole[1] +
                          pole[2] * pole[2]);
    if (pn == 0) throw ZeroVector("stereo_project: zero pole");
    std::array<double, 3> p{pole[0] / pn, pole[1] / pn, pole[2] / pn};
    // plane basis: the coordinate axis least aligned with the pole,
    // orthogonalized, and its cross product with the pole
    std::size_t least = 0;
    for (std::size_t k = 1; k < 3; ++k)
        if (std::fabs(p[k]) < std::fabs(p[least])) least = k;
    std::array<double, 3> e1{0, 0, 0};
    e1[least] = 1;
    double dp = e1[0] * p[0] + e1[1] * p[1] + e1[2] * p[2];
    for (std::size_t k = 0; k < 3; ++k) e1[k] -= dp * p[k];
    double e1n = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    for (std::size_t k = 0; k < 3; ++k) e1[k] /= e1n;
    std::array<double, 3> e2{p[1] * e1[2] - p[2] * e1[1],
                             p[2] * e1[0] - p[0] * e1[2],
                             p[0] * e1[1] - p[1] * e1[0]};
    std::vector<std::array<double, 2>> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& x = pts[i];
        if (x.size() != 3)
            throw DomainError("stereo_project: expected 3d points");
        double xp = x[0] * p[0] + x[1] * p[1] + x[2] * p[2];
        if (1 - xp < 1e-9)
            throw PoleCollision("stereo_project: point " + std::to_string(i) +
                                " coincides with the pole");
        double s = 1 / (1 - xp);
        std::array<double, 3> y{s * (x[0] - xp * p[0]), s * (x[1] - xp * p[1]),
                                s * (x[2] - xp * p[2])};
        out.push_back({y[0] * e1[0] + y[1] * e1[1] + y[2] * e1[2],
                       y[0] * e2[0] + y[1] * e2[1] + y[2] * e2[2]});
    }
    return out;
}

inline std::string to_json(const ComplexData& c) {
    std::string s = "{\n  \"algebra_hash\": " + std::to_string(c.algebra_hash) +
                    ",\n  \"box\": " + std::to_string(c.box) +
                    ",\n  \"trials\": " + std::to_string(c.trials) +
                    ",\n  \"seed\": " + std::to_string(c.seed) +
                    ",\n  \"vertices\": [\n";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const ScanVertex& v = c.vertices[i];
        s += "    {\"delta\": [";
        for (std::size_t k = 0; k < v.delta.size(); ++k) {
            s += std::to_string(v.delta[k]);
            if (k + 1 < v.delta.size()) s += ",";
        }
        s += std::string("], \"class\": \"") + to_string(v.cls) + "\"";
        if (v.obstructed) s += ", \"obstructed\": true";
        s += i + 1 < c.vertices.size() ? "},\n" : "}\n";
    }
    s += "  ],\n  \"edges\": [";
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        s += "[" + std::to_string(c.edges[i].first) + "," +
             std::to_string(c.edges[i].second) + "]";
        if (i + 1 < c.edges.size()) s += ",";
    }
    s += "],\n  \"cliques\": [";
    for (std::size_t i = 0; i < c.cliques.size(); ++i) {
        s += "[";
        for (std::size_t k = 0; k < c.cliques[i].size(); ++k) {
            s += std::to_string(c.cliques[i][k]);
            if (k + 1 < c.cliques[i].size()) s += ",";
        }
        s += "]";
        if (i + 1 < c.cliques.size()) s += ",";
    }
    s += "],\n  \"parallel\": [";
    for (std::size_t i = 0; i < c.parallel.size(); ++i) {
        s += "[" + std::to_string(c.parallel[i].first) + "," +
             std::to_string(c.parallel[i].second) + "]";
        if (i + 1 < c.parallel.size()) s += ",";
    }
    s += "]\n}\n";
    return s;
}

namespace detail {

inline std::string fixed6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x + 0.0);  // normalize -0
    return buf;
}

}  // namespace detail

// Plane picture of the complex: three vertices project stereographically from
// the given pole; two vertices are drawn on the unit circle by angle.
inline std::string to_svg(const ComplexData& c,
                          const std::vector<double>& pole = {}) {
    std::size_t n = c.vertices.empty() ? 0 : c.vertices[0].delta.size();
    std::vector<std::array<double, 2>> pts;
    if (n == 3) {
        std::vector<double> p = pole;
        if (p.empty()) p = {1 / std::sqrt(2.0), 0, -1 / std::sqrt(2.0)};
        std::vector<std::vector<double>> sphere;
        for (const ScanVertex& v : c.vertices)
            sphere.push_back(lambda_map(v.delta));
        pts = stereo_project(sphere, p);
    } else if (n == 2) {
        for (const ScanVertex& v : c.vertices) {
            std::vector<double> u = lambda_map(v.delta);
            pts.push_back({u[0], u[1]});
        }
    } else {
        throw DomainError("to_svg: only rank 2 and 3 are drawable");
    }
    double extent = 1;
    for (const auto& p : pts)
        extent = std::max({extent, std::fabs(p[0]), std::fabs(p[1])});
    const double scale = 350 / extent, cx = 400, cy = 400;
    auto px = [&](const std::array<double, 2>& p) {
        return std::array<double, 2>{cx + scale * p[0], cy - scale * p[1]};
    };
    std::string s =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
        "height=\"800\" viewBox=\"0 0 800 800\">\n";
    for (auto [i, j] : c.edges) {
        auto a = px(pts[i]), b = px(pts[j]);
        s += "  <line x1=\"" + detail::fixed6(a[0]) + "\" y1=\"" +
             detail::fixed6(a[1]) + "\" x2=\"" + detail::fixed6(b[0]) +
             "\" y2=\"" + detail::fixed6(b[1]) +
             "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const char* color = "#b2182b";  // wild
        if (c.vertices[i].cls == DeltaClass::Real) color = "#2166ac";
        if (c.vertices[i].cls == DeltaClass::Tame) color = "#1b7837";
        auto a = px(pts[i]);
        s += "  <circle cx=\"" + detail::fixed6(a[0]) + "\" cy=\"" +
             detail::fixed6(a[1]) + "\" r=\"4\" fill=\"" + color + "\"";
        if (c.vertices[i].obstructed) s += " stroke=\"#e08214\"";
        s += "/>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace presekit
