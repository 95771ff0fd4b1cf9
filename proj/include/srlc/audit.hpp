#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "srlc/corpus.hpp"
#include "srlc/io.hpp"
#include "srlc/local_cohomology.hpp"

namespace srlc {

inline constexpr const char* kToolName = "srlc";
inline constexpr const char* kToolVersion = "0.1.0";

/// Levels n audited for Krull dimension d: 1..d-1, plus level 2 when d = 2
/// (the second-vanishing statement at its boundary, flagged inadmissible).
[[nodiscard]] inline std::vector<int> audited_levels(int d) {
    std::vector<int> out;
    if (d < 2) return out;
    for (int n = 1; n <= std::max(2, d - 1); ++n) out.push_back(n);
    return out;
}

struct InstanceAudit {
    Instance instance;
    std::vector<AuditReport> reports;  // grouped by level, then field
    /// Cohomology verdicts coincide across fields for every level.
    bool fields_consistent = true;
    /// For level 1: the standalone first-vanishing reading equals the level-1 criterion.
    bool level_one_readings_agree = true;

    [[nodiscard]] bool all_agree() const {
        return std::all_of(reports.begin(), reports.end(), [](const AuditReport& r) { return r.agree; });
    }
};

[[nodiscard]] inline InstanceAudit audit_instance(const Instance& inst, const std::vector<FieldSpec>& fields) {
    InstanceAudit out{inst, {}, true, true};
    const int d = krull_dimension(inst.delta);
    out.reports = audit_levels(inst.delta, inst.sigma, audited_levels(d), fields);
    std::map<int, std::vector<bool>> verdicts;
    for (const auto& r : out.reports) {
        verdicts[r.n].push_back(r.cohomology_verdict);
        if (r.n == 1 && r.criterion_verdict != top_faces_meet_sigma(inst.delta, inst.sigma)) {
            out.level_one_readings_agree = false;
        }
    }
    for (const auto& [n, v] : verdicts) {
        if (std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) != v.end()) out.fields_consistent = false;
    }
    return out;
}

/// Worker count from SRLC_WORKERS, defaulting to 1.
[[nodiscard]] inline unsigned workers_from_env() {
    const char* env = std::getenv("SRLC_WORKERS");
    if (env == nullptr || *env == '\0') return 1;
    try {
        const int w = std::stoi(env);
        if (w >= 1 && w <= 256) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("SRLC_WORKERS must be an integer in 1..256, got '") + env + "'");
}

/// Audits every instance. Results come back in instance order whatever the
/// worker count.
[[nodiscard]] inline std::vector<InstanceAudit> run_audit(const std::vector<Instance>& corpus,
                                                          const std::vector<FieldSpec>& fields, unsigned workers = 1) {
    std::vector<InstanceAudit> results(corpus.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (std::size_t j = next++; j < corpus.size() && !failed; j = next++) {
            try {
                results[j] = audit_instance(corpus[j], fields);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, corpus.size()))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

struct LevelTally {
    std::size_t checked = 0;
    std::size_t agree = 0;
    std::size_t criterion_true = 0;
    std::size_t vanishing_true = 0;
};

struct AuditSummary {
    std::size_t instances = 0;
    std::size_t instances_agreeing = 0;
    std::size_t field_inconsistent = 0;
    std::size_t level_one_mismatch = 0;
    std::map<std::pair<int, std::string>, LevelTally> by_level;  // (n, field)

    [[nodiscard]] bool clean() const {
        return instances_agreeing == instances && field_inconsistent == 0 && level_one_mismatch == 0;
    }
};

[[nodiscard]] inline AuditSummary summarize(const std::vector<InstanceAudit>& results) {
    AuditSummary s;
    s.instances = results.size();
    for (const auto& r : results) {
        if (r.all_agree()) ++s.instances_agreeing;
        if (!r.fields_consistent) ++s.field_inconsistent;
        if (!r.level_one_readings_agree) ++s.level_one_mismatch;
        for (const auto& rep : r.reports) {
            auto& t = s.by_level[{rep.n, rep.query.field.name()}];
            ++t.checked;
            t.agree += rep.agree ? 1 : 0;
            t.criterion_true += rep.criterion_verdict ? 1 : 0;
            t.vanishing_true += rep.cohomology_verdict ? 1 : 0;
        }
    }
    return s;
}

/// Full audit report: summary counts plus every disagreement with enough data
/// to reproduce it.
[[nodiscard]] inline json audit_to_json(const json& corpus_description, const std::vector<FieldSpec>& fields,
                                        const std::vector<InstanceAudit>& results) {
    const AuditSummary s = summarize(results);
    json field_names = json::array();
    for (const auto& f : fields) field_names.push_back(f.name());
    json levels = json::array();
    for (const auto& [key, t] : s.by_level) {
        levels.push_back({{"n", key.first},
                          {"field", key.second},
                          {"checked", t.checked},
                          {"agree", t.agree},
                          {"disagree", t.checked - t.agree},
                          {"criterion_true", t.criterion_true},
                          {"vanishing_true", t.vanishing_true}});
    }
    json disagreements = json::array();
    json field_findings = json::array();
    for (const auto& r : results) {
        for (const auto& rep : r.reports) {
            if (rep.agree) continue;
            json j = report_to_json(rep, false);
            j["instance"] = r.instance.id;
            disagreements.push_back(std::move(j));
        }
        if (!r.fields_consistent || !r.level_one_readings_agree) {
            field_findings.push_back({{"instance", r.instance.id},
                                      {"delta", complex_to_json(r.instance.delta)},
                                      {"sigma", complex_to_json(r.instance.sigma)},
                                      {"fields_consistent", r.fields_consistent},
                                      {"level_one_readings_agree", r.level_one_readings_agree}});
        }
    }
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"corpus", corpus_description},
            {"fields", field_names},
            {"instances", s.instances},
            {"instances_agreeing", s.instances_agreeing},
            {"field_inconsistent", s.field_inconsistent},
            {"level_one_mismatch", s.level_one_mismatch},
            {"by_level", levels},
            {"disagreements", disagreements},
            {"findings", field_findings}};
}

}  // namespace srlc
