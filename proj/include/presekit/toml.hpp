#pragma once

#include <cctype>
#include <fstream>
#include <sstream>

#include "qp.hpp"

namespace presekit {

// Contents of an algebra description file. The accepted grammar is the small
// TOML subset documented in the README: [quiver] with `vertices` and `arrows`,
// optional [relations] with `items`, optional [potential] with `terms`, and
// optional [options].
struct ParsedFile {
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<CycleTerm> potential_terms;
    bool has_potential = false;
    long long prime = 1'000'000'007LL;
    int max_path_length = 6;
    std::uint64_t seed = 1;
    int trials = 3;
};

namespace tomldetail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

// split a bracket-free-at-top-level list on commas
inline std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    bool quoted = false;
    std::string cur;
    for (char ch : s) {
        if (ch == '"') quoted = !quoted;
        if (!quoted) {
            if (ch == '[' || ch == '{') ++depth;
            if (ch == ']' || ch == '}') --depth;
            if (ch == ',' && depth == 0) {
                out.push_back(trim(cur));
                cur.clear();
                continue;
            }
        }
        cur += ch;
    }
    std::string last = trim(cur);
    if (!last.empty()) out.push_back(last);
    return out;
}

inline std::string unquote(const std::string& s) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '"' || t.back() != '"')
        throw Inadmissible("algebra file: expected a quoted string, got: " + t);
    return t.substr(1, t.size() - 2);
}

inline long long to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(trim(s), &used);
        if (used != trim(s).size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Inadmissible("algebra file: expected an integer, got: " + s);
    }
}

// parse an inline table {k = v, ...} into key/value strings
inline std::vector<std::pair<std::string, std::string>> inline_table(
    const std::string& s) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        throw Inadmissible("algebra file: expected an inline table, got: " + t);
    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string& kv : split_top(t.substr(1, t.size() - 2))) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw Inadmissible("algebra file: malformed table entry: " + kv);
        out.push_back({trim(kv.substr(0, eq)), trim(kv.substr(eq + 1))});
    }
    return out;
}

inline std::vector<std::string> array_items(const std::string& s) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw Inadmissible("algebra file: expected an array, got: " + t);
    return split_top(t.substr(1, t.size() - 2));
}

// a word composed with `*`, rightmost factor acting first
inline std::vector<int> parse_word(const Quiver& q, const std::string& s,
                                   long long& coeff) {
    std::vector<int> arrows;
    std::stringstream ss(s);
    std::string factor;
    std::vector<std::string> factors;
    while (std::getline(ss, factor, '*')) {
        factor = trim(factor);
        if (factor.empty())
            throw Inadmissible("algebra file: empty factor in: " + s);
        factors.push_back(factor);
    }
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const std::string& f = *it;
        if (std::isdigit(static_cast<unsigned char>(f[0])) || f[0] == '-')
            coeff *= to_int(f);
        else
            arrows.push_back(q.arrow_index(f));
    }
    return arrows;
}

// integer combination of words, e.g. "b2*a2 - b1*a1" or "2*c*b*a"
inline Relation parse_relation(const Quiver& q, const std::string& s) {
    Relation r;
    std::string term;
    int sign = 1;
    bool quoted = false;
    auto flush = [&](int next_sign) {
        term = trim(term);
        if (!term.empty()) {
            PathTerm p;
            p.coeff = sign;
            p.arrows = parse_word(q, term, p.coeff);
            if (p.arrows.empty())
                throw Inadmissible("algebra file: constant term in relation: " +
                                   s);
            p.tail = q.arrows.at(p.arrows.front()).tail;
            r.terms.push_back(std::move(p));
        } else if (!r.terms.empty() || next_sign == 0) {
            throw Inadmissible("algebra file: malformed relation: " + s);
        }
        term.clear();
        sign = next_sign;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '"') quoted = !quoted;
        if (!quoted && (ch == '+' || ch == '-') && !term.empty() &&
            trim(term) != "") {
            flush(ch == '+' ? 1 : -1);
        } else if (ch == '-' && trim(term).empty()) {
            sign = -sign;
        } else {
            term += ch;
        }
    }
    flush(0);
    return r;
}

}  // namespace tomldetail

inline ParsedFile parse_algebra_text(const std::string& text) {
    using namespace tomldetail;
    ParsedFile out;
    std::string section;
    std::istringstream in(text);
    std::string line, pending;
    std::vector<std::tuple<std::string, std::string, std::string>> entries;
    auto balance = [](const std::string& s) {
        int d = 0;
        bool quoted = false;
        for (char ch : s) {
            if (ch == '"') quoted = !quoted;
            if (!quoted && (ch == '[' || ch == '{')) ++d;
            if (!quoted && (ch == ']' || ch == '}')) --d;
        }
        return d;
    };
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (!pending.empty()) {
            pending += "\n" + line;
            if (balance(pending) != 0) continue;
            line = pending;
            pending.clear();
        }
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[' && t.back() == ']' &&
            t.find('=') == std::string::npos) {
            section = t.substr(1, t.size() - 2);
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Inadmissible("algebra file: expected key = value: " + t);
        if (balance(line) != 0) {
            pending = line;
            continue;
        }
        entries.push_back({section, trim(line.substr(0, eq)),
                           trim(line.substr(eq + 1))});
    }
    if (!pending.empty())
        throw Inadmissible("algebra file: unbalanced brackets at end of file");
    for (const auto& [sec, key, val] : entries) {
        if (sec == "quiver" && key == "vertices") {
            for (const std::string& v : array_items(val))
                out.quiver.vertices.push_back(unquote(v));
        } else if (sec == "quiver" && key == "arrows") {
            for (const std::string& a : array_items(val)) {
                Arrow arrow;
                for (const auto& [k, v] : inline_table(a)) {
                    if (k == "name")
                        arrow.name = unquote(v);
                    else if (k == "tail")
                        arrow.tail = out.quiver.vertex_index(unquote(v));
                    else if (k == "head")
                        arrow.head = out.quiver.vertex_index(unquote(v));
                    else
                        throw Inadmissible("algebra file: unknown arrow key: " +
                                           k);
                }
                if (arrow.name.empty())
                    throw Inadmissible("algebra file: arrow without a name");
                out.quiver.arrows.push_back(std::move(arrow));
            }
        } else if (sec == "relations" && key == "items") {
            for (const std::string& r : array_items(val))
                out.relations.push_back(
                    tomldetail::parse_relation(out.quiver, unquote(r)));
        } else if (sec == "potential" && key == "terms") {
            out.has_potential = true;
            for (const std::string& t : array_items(val)) {
                CycleTerm term;
                for (const auto& [k, v] : inline_table(t)) {
                    if (k == "coeff")
                        term.coeff = to_int(v);
                    else if (k == "cycle") {
                        long long extra = 1;
                        term.cycle =
                            parse_word(out.quiver, unquote(v), extra);
                        term.coeff *= extra;
                    } else
                        throw Inadmissible(
                            "algebra file: unknown potential key: " + k);
                }
                out.potential_terms.push_back(std::move(term));
            }
        } else if (sec == "options") {
            if (key == "prime")
                out.prime = to_int(val);
            else if (key == "max_path_length")
                out.max_path_length = static_cast<int>(to_int(val));
            else if (key == "seed")
                out.seed = static_cast<std::uint64_t>(to_int(val));
            else if (key == "trials")
                out.trials = static_cast<int>(to_int(val));
            else
                throw Inadmissible("algebra file: unknown option: " + key);
        } else {
            throw Inadmissible("algebra file: unknown entry [" + sec + "] " +
                               key);
        }
    }
    if (out.quiver.vertices.empty())
        throw Inadmissible("algebra file: no vertices declared");
    if (out.prime != 1'000'000'007LL)
        throw Inadmissible(
            "algebra file: only the prime 1000000007 is compiled in");
    return out;
}

inline ParsedFile parse_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Inadmissible("cannot open algebra file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_text(ss.str());
}

// Build the algebra: Jacobian relations from the potential (if present) are
// combined with any explicitly listed relations.
inline AlgebraModel build_from_file(const ParsedFile& f) {
    std::vector<Relation> rels = f.relations;
    if (f.has_potential) {
        Potential s = make_potential(f.quiver, f.potential_terms);
        for (std::size_t a = 0; a < f.quiver.arrows.size(); ++a) {
            Relation r =
                cyclic_derivative(f.quiver, s, static_cast<int>(a));
            if (!r.terms.empty()) rels.push_back(std::move(r));
        }
    }
    return AlgebraModel::build(f.quiver, rels, f.max_path_length);
}

}  // namespace presekit
