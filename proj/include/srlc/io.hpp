#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "srlc/complex.hpp"
#include "srlc/local_cohomology.hpp"
#include "srlc/stanley_reisner.hpp"
#include "srlc/subdivision.hpp"

namespace srlc {

// Complex files come in two formats.
//
// Text: the first content line is the ground size n; every later nonempty
// line is one facet as space-separated labels in 1..n. `#` starts a comment.
// A line reading `void` marks the void complex. No facet lines means {∅}.
//
//     # boundary of a triangle
//     3
//     1 2
//     1 3
//     2 3
//
// JSON: {"vertices": n, "facets": [[1,2],[1,3],[2,3]]}, with an optional
// "void": true.

using nlohmann::json;

namespace detail {

inline std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline int parse_label(const std::string& token, int line_no) {
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw InputError("line " + std::to_string(line_no) + ": expected a positive integer, got '" + token + "'");
    }
    return std::stoi(token);
}

inline SimplicialComplex parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int ground = 0;
    bool is_void = false;
    std::vector<VertexSet> facets;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        if (ground == 0) {
            ground = parse_label(line, line_no);
            if (ground < 1 || ground > kMaxVertices) {
                throw InputError("line " + std::to_string(line_no) + ": ground size " + line + " outside 1.." +
                                 std::to_string(kMaxVertices));
            }
            continue;
        }
        if (line == "void") {
            is_void = true;
            continue;
        }
        std::istringstream tokens(line);
        std::string token;
        VertexSet facet;
        while (tokens >> token) {
            const int v = parse_label(token, line_no);
            if (v < 1 || v > ground) {
                throw InputError("line " + std::to_string(line_no) + ": vertex " + token + " outside 1.." +
                                 std::to_string(ground));
            }
            facet.insert(v);
        }
        facets.push_back(facet);
    }
    if (ground == 0) throw InputError("missing ground-size line");
    if (is_void) {
        if (!facets.empty()) throw InputError("a void complex cannot list facets");
        return SimplicialComplex::void_complex(ground);
    }
    return SimplicialComplex::from_facets(ground, facets);
}

inline SimplicialComplex parse_complex_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    try {
        const int ground = j.at("vertices").get<int>();
        const bool is_void = j.value("void", false);
        const auto facets = j.value("facets", std::vector<std::vector<int>>{});
        if (is_void) {
            if (!facets.empty()) throw InputError("a void complex cannot list facets");
            return SimplicialComplex::void_complex(ground);
        }
        return SimplicialComplex::from_facets(ground, facets);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed complex JSON: ") + e.what());
    }
}

}  // namespace detail

/// Parses either format; input whose first non-blank character is `{` is JSON.
[[nodiscard]] inline SimplicialComplex parse_complex(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return detail::parse_complex_json(text);
    return detail::parse_complex_text(text);
}

[[nodiscard]] inline SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_complex(buf.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

/// Canonical text form: ground size, then facets in lexicographic order.
[[nodiscard]] inline std::string emit_text(const SimplicialComplex& k) {
    std::string out = std::to_string(k.ground_size()) + "\n";
    if (k.is_void()) return out + "void\n";
    for (Face f : k.facets()) {
        if (f.empty()) continue;
        std::string line;
        for (int v : f) {
            if (!line.empty()) line += ' ';
            line += std::to_string(v);
        }
        out += line + "\n";
    }
    return out;
}

[[nodiscard]] inline json complex_to_json(const SimplicialComplex& k) {
    json facets = json::array();
    if (!k.is_void()) {
        for (Face f : k.facets()) {
            if (!f.empty()) facets.push_back(f.labels());
        }
    }
    json j = {{"vertices", k.ground_size()}, {"facets", facets}};
    if (k.is_void()) j["void"] = true;
    return j;
}

[[nodiscard]] inline std::string emit_json(const SimplicialComplex& k) { return complex_to_json(k).dump() + "\n"; }

[[nodiscard]] inline json face_to_json(Face f) { return f.labels(); }

[[nodiscard]] inline json faces_to_json(const std::vector<Face>& faces) {
    json out = json::array();
    for (Face f : faces) out.push_back(f.labels());
    return out;
}

[[nodiscard]] inline json pair_to_json(const SupportPair& p) {
    return {{"f_plus", p.plus.labels()}, {"f_minus", p.minus.labels()}};
}

[[nodiscard]] inline json query_to_json(const VanishingQuery& q) {
    return {{"delta", complex_to_json(q.delta)},
            {"sigma", complex_to_json(q.sigma)},
            {"index", q.index},
            {"field", q.field.name()}};
}

[[nodiscard]] inline json report_to_json(const AuditReport& r, bool with_pieces) {
    json j = {{"query", query_to_json(r.query)},
              {"n", r.n},
              {"admissible", r.admissible},
              {"criterion_verdict", r.criterion_verdict},
              {"cohomology_verdict", r.cohomology_verdict},
              {"agree", r.agree},
              {"witness", r.witness ? pair_to_json(*r.witness) : json(nullptr)}};
    if (with_pieces) {
        json pieces = json::array();
        for (const auto& [pair, dim] : r.per_pair_dims) {
            json p = pair_to_json(pair);
            p["dim"] = dim;
            pieces.push_back(std::move(p));
        }
        j["per_pair_dims"] = std::move(pieces);
    }
    return j;
}

/// Subdivision with its vertex-to-face map: {"complex": ..., "barycenters": {"1": [..], ...}}.
[[nodiscard]] inline json subdivision_to_json(const Subdivision& sd) {
    json centers = json::array();
    for (std::size_t j = 0; j < sd.source.size(); ++j) {
        centers.push_back({{"label", j + 1}, {"face", sd.source[j].labels()}});
    }
    return {{"complex", complex_to_json(sd.complex)}, {"barycenters", centers}};
}

[[nodiscard]] inline json collapse_to_json(const CollapseState& s) {
    json pairs = json::array();
    for (const auto& p : s.removed_pairs) {
        pairs.push_back({{"free_face", p.free_face.labels()}, {"coface", p.coface.labels()}});
    }
    return {{"removed_pairs", pairs},
            {"stuck", s.stuck},
            {"stuck_dimension", s.stuck_dimension ? json(*s.stuck_dimension) : json(nullptr)},
            {"obstruction", faces_to_json(s.obstruction)},
            {"current", complex_to_json(s.current)}};
}

}  // namespace srlc
