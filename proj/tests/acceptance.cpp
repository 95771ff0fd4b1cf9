// Acceptance suite. Prints one PASS/FAIL line per criterion; detail lines are
// indented. `--criterion N` runs a single criterion, no argument runs all.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "srlc/cli.hpp"
#include "srlc/srlc.hpp"

using namespace srlc;

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
};

constexpr std::uint64_t kRandomSeed = 20240611;
constexpr std::size_t kRandomCount = 500;
constexpr std::size_t kMaxDetails = 5;

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);

std::vector<Instance> audit_corpus() {
    std::vector<Instance> corpus = exhaustive_corpus(4);
    CorpusSpec spec;
    spec.seed = kRandomSeed;
    spec.min_vertices = 5;
    spec.max_vertices = 6;
    spec.count = kRandomCount;
    for (auto& inst : generate_corpus(spec)) {
        inst.id = corpus.size();
        corpus.push_back(std::move(inst));
    }
    return corpus;
}

std::string describe(const AuditReport& r) {
    json j = report_to_json(r, false);
    j["query"]["field"] = r.query.field.name();
    return j.dump();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Criterion against vanishing over the audit corpus. `level` 0 means every admissible level.
Outcome biconditional(int level) {
    const auto start = std::chrono::steady_clock::now();
    const auto corpus = audit_corpus();
    const auto results = run_audit(corpus, {kQ, kF2}, workers_from_env());
    std::size_t checked = 0;
    std::size_t agree = 0;
    std::size_t level_one_mismatch = 0;
    std::map<std::pair<int, bool>, std::size_t> kinds;  // (n, criterion verdict) -> disagreements
    Outcome o;
    for (const auto& r : results) {
        if (level == 0 && !r.level_one_readings_agree) ++level_one_mismatch;
        for (const auto& rep : r.reports) {
            if (level != 0 && rep.n != level) continue;
            if (level == 0 && !rep.admissible) continue;
            ++checked;
            if (rep.agree) {
                ++agree;
                continue;
            }
            ++kinds[{rep.n, rep.criterion_verdict}];
            if (o.details.size() < kMaxDetails) o.details.push_back("disagreement: " + describe(rep));
        }
    }
    const double elapsed = seconds_since(start);
    o.pass = checked > 0 && agree == checked && level_one_mismatch == 0 && elapsed <= 300.0;
    std::ostringstream s;
    s << corpus.size() << " instances, " << agree << "/" << checked << " comparisons agree";
    if (level == 0) s << ", level-1 reading mismatches " << level_one_mismatch;
    s << ", " << static_cast<int>(elapsed) << "s";
    o.summary = s.str();
    for (const auto& [key, count] : kinds) {
        o.details.push_back("n=" + std::to_string(key.first) + ": " + std::to_string(count) + " comparisons with criterion " +
                            (key.second ? "true but cohomology nonzero" : "false but cohomology zero"));
    }
    return o;
}

Outcome witness_piece() {
    const auto triangle = SimplicialComplex::full_simplex(3);
    const auto sigma = SimplicialComplex::from_facets(3, std::vector<std::vector<int>>{{3}});
    const SupportPair pair(VertexSet{}, VertexSet{1, 2});
    Outcome o{true, "", {}};
    std::ostringstream s;
    for (const auto& field : {kQ, kF2, kF3}) {
        const auto slow = graded_piece_dim(triangle, sigma, 2, pair, field);
        const auto fast = PieceEvaluator(triangle, sigma).piece_dim(2, pair, field);
        s << " " << field.name() << "=" << slow;
        o.pass = o.pass && slow == 1 && fast == 1;
    }
    o.summary = "piece dims" + s.str();
    return o;
}

Outcome engine_ground_truth() {
    Outcome o{true, "", {}};
    std::size_t checks = 0;
    auto expect = [&](const std::string& what, std::size_t got, std::size_t want) {
        ++checks;
        if (got != want) {
            o.pass = false;
            o.details.push_back(what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
        }
    };
    for (const auto& field : {kQ, kF2, kF3}) {
        const std::string f = " over " + field.name();
        const auto circle = reduced_cohomology_dims(SimplicialComplex::simplex_boundary(3), field);
        for (int q = -1; q <= 1; ++q) expect("circle H~" + std::to_string(q) + f, circle[q + 1], q == 1 ? 1 : 0);
        const auto sphere = reduced_cohomology_dims(SimplicialComplex::simplex_boundary(4), field);
        for (int q = -1; q <= 2; ++q) expect("2-sphere H~" + std::to_string(q) + f, sphere[q + 1], q == 2 ? 1 : 0);
        for (int n = 1; n <= 6; ++n) {
            const auto dims = reduced_cohomology_dims(SimplicialComplex::full_simplex(n), field);
            for (std::size_t s = 0; s < dims.size(); ++s) expect("simplex on " + std::to_string(n) + f, dims[s], 0);
            const auto rel = relative_cohomology_dims(SimplicialComplex::full_simplex(n),
                                                      SimplicialComplex::simplex_boundary(n), field);
            for (std::size_t s = 0; s < rel.size(); ++s) {
                expect("(simplex, boundary) on " + std::to_string(n) + f, rel[s], s + 1 == rel.size() ? 1 : 0);
            }
        }
    }
    o.summary = std::to_string(checks) + " exact checks";
    return o;
}

Outcome subdivision_invariance() {
    std::mt19937_64 rng(kRandomSeed);
    Outcome o{true, "", {}};
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        const int facets = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<VertexSet> gens;
        for (int j = 0; j < facets; ++j) gens.emplace_back(std::uniform_int_distribution<std::uint64_t>(1, (1U << n) - 1)(rng));
        const auto k = SimplicialComplex::from_facets(n, gens);
        const auto sd = barycentric(k).complex;
        for (const auto& field : {kQ, kF2}) {
            auto a = reduced_cohomology_dims(k, field);
            auto b = reduced_cohomology_dims(sd, field);
            const std::size_t len = std::max(a.size(), b.size());
            a.resize(len, 0);
            b.resize(len, 0);
            if (a != b) {
                o.pass = false;
                if (o.details.size() < kMaxDetails) o.details.push_back("mismatch on " + k.to_string());
            }
        }
    }
    o.summary = "100 complexes, fields Q and F2";
    return o;
}

Outcome collapse_realization() {
    const auto start = std::chrono::steady_clock::now();
    const auto corpus = audit_corpus();
    std::size_t qualifying = 0;
    std::size_t collapsed = 0;
    std::map<int, std::pair<std::size_t, std::size_t>> by_level;
    Outcome o;
    for (const auto& inst : corpus) {
        const IndexMap idx = IndexMap::of(inst.delta);
        std::optional<Subdivision> x;
        for (int n = 1; n <= idx.d - 1; ++n) {
            if (!vanishing_criterion(inst.delta, inst.sigma, n)) continue;
            if (!x) x = sd_minus(inst.delta, inst.sigma);
            ++qualifying;
            ++by_level[n].first;
            const CollapseState st = collapse_sweep(x->complex, idx.collapse_targets(n));
            if (!st.stuck && collapsed_below(st, idx.face_dimension(n))) {
                ++collapsed;
                ++by_level[n].second;
            } else if (o.details.size() < kMaxDetails) {
                json j = {{"instance", inst.id},
                          {"delta", complex_to_json(inst.delta)},
                          {"sigma", complex_to_json(inst.sigma)},
                          {"n", n},
                          {"stuck_dimension", st.stuck_dimension ? json(*st.stuck_dimension) : json(nullptr)},
                          {"obstruction_size", st.obstruction.size()}};
                o.details.push_back("stuck: " + j.dump());
            }
        }
    }
    o.pass = qualifying > 0 && collapsed == qualifying;
    o.summary = std::to_string(collapsed) + "/" + std::to_string(qualifying) + " qualifying (instance, n) collapse, " +
                std::to_string(static_cast<int>(seconds_since(start))) + "s";
    for (const auto& [n, c] : by_level) {
        o.details.push_back("n=" + std::to_string(n) + ": " + std::to_string(c.second) + "/" + std::to_string(c.first));
    }
    return o;
}

Outcome field_independence() {
    const auto corpus = audit_corpus();
    const auto results = run_audit(corpus, {kQ, kF2, kF3}, workers_from_env());
    std::size_t inconsistent = 0;
    Outcome o;
    for (const auto& r : results) {
        if (r.fields_consistent) continue;
        ++inconsistent;
        if (o.details.size() < kMaxDetails) {
            o.details.push_back("finding: " + json{{"instance", r.instance.id},
                                                   {"delta", complex_to_json(r.instance.delta)},
                                                   {"sigma", complex_to_json(r.instance.sigma)}}
                                                  .dump());
        }
    }
    o.pass = inconsistent == 0;
    o.summary = std::to_string(corpus.size()) + " instances over Q, F2, F3, " + std::to_string(inconsistent) +
                " field-dependent verdicts";
    return o;
}

Outcome infrastructure() {
    Outcome o{true, "", {}};
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(SRLC_DATA_DIR)) {
        const auto k = read_complex_file(entry.path().string());
        ++files;
        if (!(parse_complex(emit_text(k)) == k) || !(parse_complex(emit_json(k)) == k) ||
            emit_text(parse_complex(emit_text(k))) != emit_text(k)) {
            o.pass = false;
            o.details.push_back("round trip failed for " + entry.path().filename().string());
        }
    }
    std::size_t complexes = 0;
    for (const auto& inst : audit_corpus()) {
        for (const auto* k : {&inst.delta, &inst.sigma}) {
            ++complexes;
            if (!(parse_complex(emit_text(*k)) == *k) || !(parse_complex(emit_json(*k)) == *k)) {
                o.pass = false;
                if (o.details.size() < kMaxDetails) o.details.push_back("round trip failed for " + k->to_string());
            }
        }
    }
    auto audit_bytes = [](const char* workers) {
        ::setenv("SRLC_WORKERS", workers, 1);
        std::ostringstream out;
        std::ostringstream err;
        (void)run_cli({"audit", "--seed", "17", "--vertices", "4..6", "--count", "60", "--fields", "Q,F2,F3"}, out, err);
        return out.str();
    };
    const std::string a = audit_bytes("1");
    const std::string b = audit_bytes("1");
    const std::string c = audit_bytes("2");
    const std::string d = audit_bytes("2");
    ::unsetenv("SRLC_WORKERS");
    if (a != b || c != d) {
        o.pass = false;
        o.details.push_back("audit output differs between identical runs");
    }
    if (a != c) o.details.push_back("note: audit output differs between 1 and 2 workers");
    o.summary = std::to_string(files) + " files and " + std::to_string(complexes) +
                " corpus complexes round-trip, audit reruns byte-identical";
    return o;
}

Outcome run(int criterion) {
    switch (criterion) {
        case 1: return biconditional(2);
        case 2: return biconditional(0);
        case 3: return witness_piece();
        case 4: return engine_ground_truth();
        case 5: return subdivision_invariance();
        case 6: return collapse_realization();
        case 7: return field_independence();
        case 8: return infrastructure();
        default: break;
    }
    return {false, "unknown criterion", {}};
}

constexpr const char* kTitles[] = {"",
                                   "criterion vs vanishing at n=2",
                                   "criterion vs vanishing at every admissible n",
                                   "witness piece in the triangle example",
                                   "cohomology engine ground truth",
                                   "subdivision invariance",
                                   "collapse of Sd(delta - sigma) under the criterion",
                                   "field independence",
                                   "round trip and determinism"};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> criteria;
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        criteria.push_back(std::atoi(argv[2]));
    } else if (argc == 1) {
        for (int c = 1; c <= 8; ++c) criteria.push_back(c);
    } else {
        std::cerr << "usage: acceptance [--criterion N]\n";
        return 2;
    }
    bool all_pass = true;
    for (int c : criteria) {
        if (c < 1 || c > 8) {
            std::cerr << "criterion must be 1..8\n";
            return 2;
        }
        Outcome o;
        try {
            o = run(c);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), {}};
        }
        std::cout << "criterion " << c << " [" << kTitles[c] << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
                  << o.summary << ")\n";
        for (const auto& line : o.details) std::cout << "    " << line << "\n";
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
