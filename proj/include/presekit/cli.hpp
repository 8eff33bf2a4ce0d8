#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "artau.hpp"
#include "complexgeo.hpp"
#include "rigid.hpp"
#include "toml.hpp"

namespace presekit {
namespace cli {

inline DeltaVector parse_delta(const std::string& s, int n) {
    DeltaVector d;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        d.push_back(std::stoll(tomldetail::trim(tok)));
    if (static_cast<int>(d.size()) != n)
        throw Inadmissible("delta-vector must have " + std::to_string(n) +
                           " components: " + s);
    return d;
}

inline std::string delta_str(const DeltaVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        s += std::to_string(d[i]);
        if (i + 1 < d.size()) s += ",";
    }
    return s + ")";
}

inline std::string group_parts(std::vector<DeltaVector> parts) {
    std::sort(parts.begin(), parts.end(),
              [](const DeltaVector& a, const DeltaVector& b) { return b < a; });
    std::string s;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!s.empty()) s += " + ";
        if (j - i > 1) s += std::to_string(j - i) + "*";
        s += delta_str(parts[i]);
        i = j;
    }
    return s;
}

inline std::string word_str(const Quiver& q, const PathTerm& t) {
    std::string s;
    if (t.coeff != 1) s = std::to_string(t.coeff) + "*";
    for (auto it = t.arrows.rbegin(); it != t.arrows.rend(); ++it) {
        s += q.arrows.at(*it).name;
        if (std::next(it) != t.arrows.rend()) s += "*";
    }
    return s;
}

inline Presentation rigid_sample(const AlgebraModel& A, const DeltaVector& d,
                                 int trials, Rng& rng) {
    for (int t = 0; t < trials; ++t) {
        Presentation f = sample_presentation(A, d, rng);
        if (is_rigid(f)) return f;
    }
    throw NotRigid("no rigid presentation found for " + delta_str(d));
}

inline void write_out(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Inadmissible("cannot open output file: " + path);
    out << body;
    std::cout << "wrote " << path << "\n";
}

inline ComplexData complex_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Inadmissible("cannot open input file: " + path);
    nlohmann::json j;
    in >> j;
    ComplexData c;
    c.algebra_hash = j.value("algebra_hash", 0ULL);
    c.box = j.value("box", 0);
    c.trials = j.value("trials", 0);
    c.seed = j.value("seed", 0ULL);
    for (const auto& v : j.at("vertices")) {
        ScanVertex sv;
        for (const auto& x : v.at("delta")) sv.delta.push_back(x.get<long long>());
        std::string cls = v.at("class").get<std::string>();
        sv.cls = cls == "Real"   ? DeltaClass::Real
                 : cls == "Tame" ? DeltaClass::Tame
                                 : DeltaClass::Wild;
        sv.obstructed = v.value("obstructed", false);
        c.vertices.push_back(std::move(sv));
    }
    for (const auto& e : j.at("edges"))
        c.edges.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()});
    if (j.contains("cliques"))
        for (const auto& q : j["cliques"]) {
            std::vector<std::size_t> cl;
            for (const auto& x : q) cl.push_back(x.get<std::size_t>());
            c.cliques.push_back(std::move(cl));
        }
    return c;
}

inline int run(int argc, const char* const* argv) {
    CLI::App app{"computational toolkit for projective presentations over "
                 "bound quiver algebras"};
    app.require_subcommand(1);
    std::string algebra_path, d1s, d2s, ds, cluster, dir = "pos", outpath,
                inpath, poles, svgpath;
    long long seed_flag = -1;
    int trials_flag = -1, depth = 2, box = 2;
    std::size_t at = 0;
    bool inverse = false;
    app.add_option("-a,--algebra", algebra_path, "algebra description file")
        ->required();
    app.add_option("--seed", seed_flag, "random seed override");
    app.add_option("--trials", trials_flag, "sampling rounds override");

    auto* c_check = app.add_subcommand("check", "build and report invariants");
    auto* c_e = app.add_subcommand("e", "generic obstruction dimension");
    c_e->add_option("--d1", d1s)->required();
    c_e->add_option("--d2", d2s)->required();
    auto* c_classify = app.add_subcommand("classify", "delta-vector class");
    c_classify->add_option("--d", ds)->required();
    auto* c_cd = app.add_subcommand("candecomp", "canonical decomposition");
    c_cd->add_option("--d", ds)->required();
    auto* c_rigid = app.add_subcommand("rigid", "test generic rigidity");
    c_rigid->add_option("--d", ds)->required();
    auto* c_complete =
        app.add_subcommand("complete", "complete a rigid presentation");
    c_complete->add_option("--d", ds)->required();
    c_complete->add_option("--dir", dir)->check(CLI::IsMember({"pos", "neg"}));
    auto* c_mutate = app.add_subcommand("mutate", "mutate a maximal rigid set");
    c_mutate->add_option("--cluster", cluster, "semicolon-separated deltas")
        ->required();
    c_mutate->add_option("--at", at, "slot to mutate")->required();
    auto* c_ex = app.add_subcommand("exchange", "exchange graph as JSON");
    c_ex->add_option("--depth", depth);
    c_ex->add_option("--out", outpath);
    auto* c_tau = app.add_subcommand("tau", "translate a sampled presentation");
    c_tau->add_option("--d", ds)->required();
    c_tau->add_flag("--inverse", inverse);
    auto* c_reg = app.add_subcommand("regularize", "quotient until injective");
    c_reg->add_option("--d", ds)->required();
    auto* c_scan = app.add_subcommand("scan", "box scan of delta-vectors");
    c_scan->add_option("--box", box);
    c_scan->add_option("--out", outpath);
    auto* c_proj = app.add_subcommand("project", "stereographic SVG picture");
    c_proj->add_option("--in", inpath, "scan JSON file")->required();
    c_proj->add_option("--pole", poles, "projection pole x,y,z");
    c_proj->add_option("--svg", svgpath, "output SVG path")->required();
    auto* c_qp = app.add_subcommand("qp-build", "Jacobian algebra report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    ParsedFile pf = parse_algebra_file(algebra_path);
    if (seed_flag >= 0) pf.seed = static_cast<std::uint64_t>(seed_flag);
    if (trials_flag > 0) pf.trials = trials_flag;
    AlgebraModel A = build_from_file(pf);
    Rng rng(pf.seed);
    const int trials = pf.trials;

    if (c_check->parsed()) {
        std::cout << "vertices: " << A.n() << "\n"
                  << "arrows: " << A.quiver().arrows.size() << "\n"
                  << "dimension: " << A.dim() << "\n";
        std::cout << "cartan: [";
        auto cart = A.cartan();
        for (int i = 0; i < A.n(); ++i) {
            std::cout << "[";
            for (int j = 0; j < A.n(); ++j)
                std::cout << cart[i][j] << (j + 1 < A.n() ? "," : "");
            std::cout << "]" << (i + 1 < A.n() ? "," : "");
        }
        std::cout << "]\n"
                  << "hash: " << A.content_hash() << "\n";
    } else if (c_e->parsed()) {
        std::cout << e_generic(A, parse_delta(d1s, A.n()),
                               parse_delta(d2s, A.n()), trials, rng)
                  << "\n";
    } else if (c_classify->parsed()) {
        DeltaClass cls = classify(A, parse_delta(ds, A.n()), trials, rng);
        std::string name = to_string(cls);
        for (char& ch : name) ch = static_cast<char>(std::tolower(ch));
        std::cout << name << "\n";
    } else if (c_cd->parsed()) {
        std::cout << group_parts(canonical_decomposition(
                         A, parse_delta(ds, A.n()), trials, rng))
                  << "\n";
    } else if (c_rigid->parsed()) {
        try {
            rigid_sample(A, parse_delta(ds, A.n()), trials, rng);
            std::cout << "rigid\n";
        } catch (const NotRigid&) {
            std::cout << "not-rigid\n";
        }
    } else if (c_complete->parsed()) {
        Presentation f = rigid_sample(A, parse_delta(ds, A.n()), trials, rng);
        RigidCollection c = dir == "pos" ? completion_pos(f, trials, rng)
                                         : completion_neg(f, trials, rng);
        for (const DeltaVector& d : c.key()) std::cout << delta_str(d) << "\n";
    } else if (c_mutate->parsed()) {
        RigidCollection c;
        std::stringstream ss(cluster);
        std::string tok;
        while (std::getline(ss, tok, ';'))
            c.items.push_back(
                rigid_sample(A, parse_delta(tok, A.n()), trials, rng));
        detail::sort_items(c.items);
        if (at >= c.items.size())
            throw Inadmissible("mutation slot out of range");
        RigidCollection m = mutate(c, A, at, trials, rng);
        for (const DeltaVector& d : m.key()) std::cout << delta_str(d) << "\n";
    } else if (c_ex->parsed()) {
        write_out(outpath, to_json(exchange_graph(A, depth, trials, rng)));
    } else if (c_tau->parsed()) {
        Presentation f =
            minimize(sample_presentation(A, parse_delta(ds, A.n()), rng));
        Presentation t =
            tau(f, inverse ? TauDir::Inverse : TauDir::Forward);
        std::cout << delta_str(t.delta()) << "\n";
    } else if (c_reg->parsed()) {
        Presentation f =
            minimize(sample_presentation(A, parse_delta(ds, A.n()), rng));
        Regularization r = regularize(f);
        std::cout << "passes: " << r.passes << "\n"
                  << "dimension: " << r.algebra.dim() << "\n";
    } else if (c_scan->parsed()) {
        write_out(outpath, to_json(scan(A, box, trials, pf.seed)));
    } else if (c_proj->parsed()) {
        ComplexData c = complex_from_json(inpath);
        std::vector<double> pole;
        if (!poles.empty()) {
            std::stringstream ss(poles);
            std::string tok;
            while (std::getline(ss, tok, ','))
                pole.push_back(std::stod(tomldetail::trim(tok)));
        }
        write_out(svgpath, to_svg(c, pole));
    } else if (c_qp->parsed()) {
        if (!pf.has_potential)
            throw Inadmissible("qp-build needs a [potential] section");
        Potential s = make_potential(pf.quiver, pf.potential_terms);
        for (std::size_t a = 0; a < pf.quiver.arrows.size(); ++a) {
            Relation r = cyclic_derivative(pf.quiver, s, static_cast<int>(a));
            if (r.terms.empty()) continue;
            std::cout << "d/d" << pf.quiver.arrows[a].name << ": ";
            for (std::size_t i = 0; i < r.terms.size(); ++i) {
                if (i) std::cout << " + ";
                std::cout << word_str(pf.quiver, r.terms[i]);
            }
            std::cout << "\n";
        }
        AlgebraModel j = jacobian_algebra(pf.quiver, s, pf.max_path_length);
        std::cout << "dimension: " << j.dim() << "\n";
    }
    return 0;
}

inline int main_guarded(int argc, const char* const* argv) {
    try {
        return run(argc, argv);
    } catch (const Inadmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace presekit
