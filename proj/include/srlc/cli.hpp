#pragma once

// Command-line front end. `run_cli` is the whole program minus `main`, so the
// exit-code contract can be tested in-process.
//
// Exit codes: 0 = the property asked about holds (criterion satisfied,
// module vanishes, audit clean, collapse finished); 1 = it does not;
// 2 = input error.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srlc/audit.hpp"
#include "srlc/corpus.hpp"
#include "srlc/io.hpp"
#include "srlc/local_cohomology.hpp"
#include "srlc/subdivision.hpp"

namespace srlc {

namespace cli_detail {

inline void write_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline std::vector<FieldSpec> parse_fields(const std::vector<std::string>& names) {
    std::vector<FieldSpec> fields;
    for (const auto& name : names) {
        std::stringstream ss(name);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) fields.push_back(FieldSpec::parse(part));
        }
    }
    if (fields.empty()) throw InputError("no fields given");
    return fields;
}

inline std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    auto number = [&](const std::string& s) {
        if (s.empty() || s.size() > 3 || s.find_first_not_of("0123456789") != std::string::npos) {
            throw InputError("bad vertex range '" + text + "'");
        }
        return std::stoi(s);
    };
    if (dots == std::string::npos) {
        const int v = number(text);
        return {v, v};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

inline std::vector<int> parse_targets(const std::vector<std::string>& items) {
    std::vector<int> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty()) continue;
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(part, &used));
                if (used != part.size()) throw InputError("bad target dimension '" + part + "'");
            } catch (const std::logic_error&) {
                throw InputError("bad target dimension '" + part + "'");
            }
        }
    }
    return out;
}

inline void require_same_ground(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground_size() != b.ground_size()) {
        throw InputError("ground-size mismatch: Δ has " + std::to_string(a.ground_size()) + " vertices, Σ has " +
                         std::to_string(b.ground_size()));
    }
}

struct Options {
    std::string format = "json";
    // check / cohomology
    std::string delta_path;
    std::string sigma_path;
    int n = 2;
    int index = 0;
    std::string field = "Q";
    bool exhaustive = false;
    // audit
    std::uint64_t seed = 42;
    std::string vertices = "4..4";
    std::size_t count = 100;
    std::vector<std::string> fields{"Q", "F2"};
    std::string strategy = "mixed";
    bool exhaustive_corpus = false;
    // subdivide / collapse / normalize
    std::string complex_path;
    std::string minus_path;
    std::vector<std::string> targets;
};

inline int cmd_check(const Options& o, std::ostream& out) {
    const SimplicialComplex delta = read_complex_file(o.delta_path);
    const SimplicialComplex sigma = read_complex_file(o.sigma_path);
    require_same_ground(delta, sigma);
    const CriterionResult r = evaluate_criterion(delta, sigma, o.n);
    const IndexMap idx = IndexMap::of(delta);
    if (o.format == "text") {
        out << (r.holds ? "criterion holds" : "criterion fails") << " (n=" << o.n << ", d=" << idx.d
            << (r.admissible ? "" : ", n outside 1..d-1") << ")\n";
        for (const auto& v : r.violations) {
            out << "  face " << v.face.to_string() << " (dim " << v.face.dimension() << "): " << v.sigma_vertices
                << " vertices of Σ, needs " << v.required << "\n";
        }
    } else {
        json violations = json::array();
        for (const auto& v : r.violations) {
            violations.push_back({{"face", v.face.labels()},
                                  {"dim", v.face.dimension()},
                                  {"sigma_vertices", v.sigma_vertices},
                                  {"required", v.required}});
        }
        write_json(out, {{"tool", kToolName},
                         {"version", kToolVersion},
                         {"query", {{"delta", complex_to_json(delta)}, {"sigma", complex_to_json(sigma)}, {"n", o.n}}},
                         {"krull_dimension", idx.d},
                         {"admissible", r.admissible},
                         {"cohomological_index", idx.vanishing_index(o.n)},
                         {"criterion", r.holds},
                         {"violations", violations}});
    }
    return r.holds ? 0 : 1;
}

inline int cmd_cohomology(const Options& o, std::ostream& out) {
    const SimplicialComplex delta = read_complex_file(o.delta_path);
    const SimplicialComplex sigma = read_complex_file(o.sigma_path);
    require_same_ground(delta, sigma);
    const VanishingQuery q{delta, sigma, o.index, FieldSpec::parse(o.field)};
    const VanishingResult r = local_cohomology_vanishes(q, o.exhaustive);
    const bool excluded_ok = r.excluded_nonzero.empty();
    if (o.format == "text") {
        out << "H^" << q.index << "_J " << (r.vanishes ? "vanishes" : "does not vanish") << " over " << q.field.name()
            << "\n";
        for (const auto& [pair, dim] : r.per_pair) {
            if (dim != 0) out << "  " << pair.to_string() << ": " << dim << "\n";
        }
        if (o.exhaustive) {
            out << "  excluded classes checked: " << r.excluded_checked << ", nonzero: " << r.excluded_nonzero.size()
                << "\n";
        }
    } else {
        json pieces = json::array();
        for (const auto& [pair, dim] : r.per_pair) {
            json p = pair_to_json(pair);
            p["dim"] = dim;
            pieces.push_back(std::move(p));
        }
        json j = {{"tool", kToolName},
                  {"version", kToolVersion},
                  {"query", query_to_json(q)},
                  {"vanishes", r.vanishes},
                  {"witness", r.witness ? pair_to_json(*r.witness) : json(nullptr)},
                  {"pieces", pieces}};
        if (o.exhaustive) {
            json bad = json::array();
            for (const auto& p : r.excluded_nonzero) bad.push_back(pair_to_json(p));
            j["excluded"] = {{"checked", r.excluded_checked}, {"nonzero", bad}};
        }
        write_json(out, j);
    }
    return r.vanishes && excluded_ok ? 0 : 1;
}

inline int cmd_audit(const Options& o, std::ostream& out) {
    const std::vector<FieldSpec> fields = parse_fields(o.fields);
    std::vector<Instance> corpus;
    json description;
    if (o.exhaustive_corpus) {
        corpus = exhaustive_corpus(4);
        description = {{"kind", "exhaustive"}, {"vertices", 4}, {"count", corpus.size()}};
    } else {
        CorpusSpec spec;
        spec.seed = o.seed;
        std::tie(spec.min_vertices, spec.max_vertices) = parse_range(o.vertices);
        spec.count = o.count;
        spec.strategy = parse_strategy(o.strategy);
        corpus = generate_corpus(spec);
        description = {{"kind", "random"},
                       {"seed", spec.seed},
                       {"vertices", {spec.min_vertices, spec.max_vertices}},
                       {"count", spec.count},
                       {"strategy", to_string(spec.strategy)}};
    }
    const auto results = run_audit(corpus, fields, workers_from_env());
    const AuditSummary s = summarize(results);
    if (o.format == "text") {
        out << "instances: " << s.instances << ", agreeing: " << s.instances_agreeing << "/" << s.instances
            << ", field-inconsistent: " << s.field_inconsistent << "\n";
        for (const auto& [key, t] : s.by_level) {
            out << "  n=" << key.first << " " << key.second << ": agree " << t.agree << "/" << t.checked << "\n";
        }
    } else {
        write_json(out, audit_to_json(description, fields, results));
    }
    return s.clean() ? 0 : 1;
}

inline int cmd_subdivide(const Options& o, std::ostream& out) {
    const SimplicialComplex k = read_complex_file(o.complex_path);
    Subdivision sd;
    if (o.minus_path.empty()) {
        sd = barycentric(k);
    } else {
        const SimplicialComplex s = read_complex_file(o.minus_path);
        require_same_ground(k, s);
        sd = sd_minus(k, s);
    }
    if (o.format == "text") {
        out << emit_text(sd.complex);
        for (std::size_t j = 0; j < sd.source.size(); ++j) {
            out << "# " << j + 1 << " = b" << sd.source[j].to_string() << "\n";
        }
    } else {
        json j = subdivision_to_json(sd);
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        write_json(out, j);
    }
    return 0;
}

inline int cmd_collapse(const Options& o, std::ostream& out) {
    const SimplicialComplex k = read_complex_file(o.complex_path);
    SimplicialComplex x = k;
    if (!o.minus_path.empty()) {
        const SimplicialComplex s = read_complex_file(o.minus_path);
        require_same_ground(k, s);
        x = sd_minus(k, s).complex;
    }
    const CollapseState state = collapse_sweep(x, parse_targets(o.targets));
    if (o.format == "text") {
        for (const auto& p : state.removed_pairs) {
            out << p.free_face.to_string() << " < " << p.coface.to_string() << "\n";
        }
        out << (state.stuck ? "stuck" : "done") << "\n";
    } else {
        json j = collapse_to_json(state);
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["input"] = complex_to_json(x);
        write_json(out, j);
    }
    return state.stuck ? 1 : 0;
}

inline int cmd_normalize(const Options& o, std::ostream& out) {
    const SimplicialComplex k = read_complex_file(o.complex_path);
    out << (o.format == "text" ? emit_text(k) : emit_json(k));
    return 0;
}

}  // namespace cli_detail

/// Runs one invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"Vanishing of local cohomology of Stanley-Reisner rings: face-counting criteria vs graded pieces"};
    app.require_subcommand(1);
    Options o;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* check = app.add_subcommand("check", "Evaluate the face-counting criterion at level n");
    check->add_option("delta", o.delta_path, "Complex file for Δ")->required();
    check->add_option("sigma", o.sigma_path, "Complex file for Σ")->required();
    check->add_option("--n", o.n, "Level n (1..d-1)")->required();
    add_format(check);

    auto* coh = app.add_subcommand("cohomology", "Graded pieces of H^i_J(k[Δ]) over every support class");
    coh->add_option("delta", o.delta_path, "Complex file for Δ")->required();
    coh->add_option("sigma", o.sigma_path, "Complex file for Σ")->required();
    coh->add_option("--index", o.index, "Cohomological index i")->required();
    coh->add_option("--field", o.field, "Q, F2, F3 or Fp:<p>");
    coh->add_flag("--exhaustive", o.exhaustive, "Also evaluate classes whose support is not a face");
    add_format(coh);

    auto* audit = app.add_subcommand("audit", "Compare criterion and cohomology over a corpus");
    audit->add_option("--seed", o.seed, "Corpus seed");
    audit->add_option("--vertices", o.vertices, "Vertex range A..B");
    audit->add_option("--count", o.count, "Number of random instances");
    audit->add_option("--fields", o.fields, "Fields, comma separated")->delimiter(',');
    audit->add_option("--strategy", o.strategy,
                      "random_facet_subset, vertex_induced, full_skeleton or mixed");
    audit->add_flag("--exhaustive-4", o.exhaustive_corpus, "Use every (Δ, Σ) on 4 vertices instead");
    add_format(audit);

    auto* subdivide = app.add_subcommand("subdivide", "Barycentric subdivision, optionally avoiding Σ");
    subdivide->add_option("complex", o.complex_path, "Complex file")->required();
    subdivide->add_option("--minus", o.minus_path, "Subcomplex whose barycenters are removed");
    add_format(subdivide);

    auto* collapse = app.add_subcommand("collapse", "Greedy elementary-collapse sweep");
    collapse->add_option("complex", o.complex_path, "Complex file")->required();
    collapse->add_option("--targets", o.targets, "Target dimensions, comma separated")->required()->delimiter(',');
    collapse->add_option("--minus", o.minus_path, "Collapse Sd(complex − minus) instead");
    add_format(collapse);

    auto* normalize = app.add_subcommand("normalize", "Re-emit a complex file in canonical form");
    normalize->add_option("complex", o.complex_path, "Complex file")->required();
    add_format(normalize);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (coh->parsed()) return cmd_cohomology(o, out);
        if (audit->parsed()) return cmd_audit(o, out);
        if (subdivide->parsed()) return cmd_subdivide(o, out);
        if (collapse->parsed()) return cmd_collapse(o, out);
        if (normalize->parsed()) return cmd_normalize(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace srlc
