#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "srlc/complex.hpp"

namespace srlc {

enum class SubcomplexStrategy { random_facet_subset, vertex_induced, full_skeleton, mixed };

[[nodiscard]] inline std::string to_string(SubcomplexStrategy s) {
    switch (s) {
        case SubcomplexStrategy::random_facet_subset: return "random_facet_subset";
        case SubcomplexStrategy::vertex_induced: return "vertex_induced";
        case SubcomplexStrategy::full_skeleton: return "full_skeleton";
        case SubcomplexStrategy::mixed: return "mixed";
    }
    return "mixed";
}

[[nodiscard]] inline SubcomplexStrategy parse_strategy(const std::string& s) {
    if (s == "random_facet_subset") return SubcomplexStrategy::random_facet_subset;
    if (s == "vertex_induced") return SubcomplexStrategy::vertex_induced;
    if (s == "full_skeleton") return SubcomplexStrategy::full_skeleton;
    if (s == "mixed") return SubcomplexStrategy::mixed;
    throw InputError("unknown subcomplex strategy '" + s + "'");
}

/// Recipe for a seeded random corpus. The same spec always yields the same corpus.
struct CorpusSpec {
    std::uint64_t seed = 0;
    int min_vertices = 4;
    int max_vertices = 4;
    std::size_t count = 0;
    SubcomplexStrategy strategy = SubcomplexStrategy::mixed;
    /// Upper bound on the number of generating facets of Δ.
    int max_facets = 4;
    /// Upper bound on facet cardinality.
    int max_facet_size = 5;

    void validate() const {
        if (min_vertices < 1 || max_vertices > 6 || min_vertices > max_vertices) {
            throw InputError("vertex range must satisfy 1 <= A <= B <= 6");
        }
        if (max_facets < 1 || max_facet_size < 1) throw InputError("facet limits must be positive");
    }
};

struct Instance {
    std::size_t id = 0;
    SimplicialComplex delta;
    SimplicialComplex sigma;
};

namespace detail {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline VertexSet random_subset_of_size(std::mt19937_64& rng, int n, int size) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) labels[static_cast<std::size_t>(v - 1)] = v;
    std::shuffle(labels.begin(), labels.end(), rng);
    VertexSet s;
    for (int j = 0; j < size; ++j) s.insert(labels[static_cast<std::size_t>(j)]);
    return s;
}

inline SimplicialComplex random_subcomplex(std::mt19937_64& rng, const SimplicialComplex& delta,
                                           SubcomplexStrategy strategy) {
    switch (strategy) {
        case SubcomplexStrategy::random_facet_subset: {
            std::vector<VertexSet> gens;
            const int count = uniform(rng, 0, 3);
            for (int j = 0; j < count; ++j) {
                const auto pick = uniform(rng, 0, static_cast<int>(delta.face_count()) - 1);
                gens.push_back(delta.faces()[static_cast<std::size_t>(pick)]);
            }
            return SimplicialComplex::from_facets(delta.ground_size(), gens);
        }
        case SubcomplexStrategy::vertex_induced: {
            VertexSet w;
            for (int v : delta.vertex_set()) {
                if (uniform(rng, 0, 1) == 1) w.insert(v);
            }
            return induced_subcomplex(delta, w);
        }
        case SubcomplexStrategy::full_skeleton:
            return skeleton(delta, uniform(rng, -1, delta.dim()));
        case SubcomplexStrategy::mixed:
            break;
    }
    throw InputError("mixed strategy must be resolved per instance");
}

}  // namespace detail

/// Seeded random (Δ, Σ) pairs. `mixed` cycles the three strategies by instance id.
[[nodiscard]] inline std::vector<Instance> generate_corpus(const CorpusSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::vector<Instance> out;
    out.reserve(spec.count);
    constexpr SubcomplexStrategy kCycle[] = {SubcomplexStrategy::random_facet_subset,
                                             SubcomplexStrategy::vertex_induced, SubcomplexStrategy::full_skeleton};
    for (std::size_t id = 0; id < spec.count; ++id) {
        const int n = detail::uniform(rng, spec.min_vertices, spec.max_vertices);
        const int facets = detail::uniform(rng, 1, spec.max_facets);
        std::vector<VertexSet> gens;
        for (int j = 0; j < facets; ++j) {
            const int size = detail::uniform(rng, 1, std::min(n, spec.max_facet_size));
            gens.push_back(detail::random_subset_of_size(rng, n, size));
        }
        SimplicialComplex delta = SimplicialComplex::from_facets(n, gens);
        const SubcomplexStrategy strategy =
            spec.strategy == SubcomplexStrategy::mixed ? kCycle[id % 3] : spec.strategy;
        SimplicialComplex sigma = detail::random_subcomplex(rng, delta, strategy);
        out.push_back({id, std::move(delta), std::move(sigma)});
    }
    return out;
}

/// Every non-void subcomplex of K (all down-closed subfamilies of its faces),
/// in a deterministic order. Intended for small K.
[[nodiscard]] inline std::vector<SimplicialComplex> all_subcomplexes(const SimplicialComplex& k) {
    if (k.is_void()) return {};
    std::vector<SimplicialComplex> out;
    // Grow down-closed families by adding faces in canonical order; a face may
    // be added once all of its codimension-one faces are present.
    const auto& faces = k.faces();
    std::vector<std::vector<Face>> frontier{{Face{}}};
    std::unordered_set<std::string> seen;
    out.push_back(SimplicialComplex::empty_complex(k.ground_size()));
    seen.insert(out.back().to_string());
    while (!frontier.empty()) {
        std::vector<std::vector<Face>> next;
        for (const auto& family : frontier) {
            const std::unordered_set<VertexSet> members(family.begin(), family.end());
            for (Face f : faces) {
                if (members.contains(f)) continue;
                bool addable = true;
                for (int v : f) {
                    if (!members.contains(f.without(v))) {
                        addable = false;
                        break;
                    }
                }
                if (!addable) continue;
                std::vector<Face> grown = family;
                grown.push_back(f);
                SimplicialComplex c = SimplicialComplex::from_faces(k.ground_size(), grown);
                if (seen.insert(c.to_string()).second) {
                    out.push_back(std::move(c));
                    next.push_back(std::move(grown));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

/// All (Δ, Σ) on the ground set [n]: Δ over every non-void complex, Σ over
/// every non-void subcomplex of Δ. For n = 4 this is 7413 pairs.
[[nodiscard]] inline std::vector<Instance> exhaustive_corpus(int n) {
    if (n < 1 || n > 4) throw InputError("exhaustive corpus supports 1..4 vertices");
    const SimplicialComplex full = SimplicialComplex::full_simplex(n);
    std::vector<Instance> out;
    for (const SimplicialComplex& delta : all_subcomplexes(full)) {
        for (SimplicialComplex& sigma : all_subcomplexes(delta)) {
            out.push_back({out.size(), delta, std::move(sigma)});
        }
    }
    return out;
}

}  // namespace srlc
