#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "srlc/complex.hpp"

namespace srlc {

/// A subcomplex of a barycentric subdivision together with its vertex labels.
///
/// Label j (1-based) is the barycenter of `source[j-1]`, a nonempty face of the
/// labelling complex. Labels follow the canonical order of source faces
/// (cardinality, then lexicographic), so inside any chain the smallest label
/// is the bottom face and the largest label is the top face.
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Face> source;

    [[nodiscard]] Face source_face(int label) const { return source.at(static_cast<std::size_t>(label - 1)); }

    /// 0 when the face is not a labelled barycenter.
    [[nodiscard]] int label_of(Face f) const {
        auto it = std::lower_bound(source.begin(), source.end(), f, CanonicalLess{});
        if (it == source.end() || *it != f) return 0;
        return static_cast<int>(it - source.begin()) + 1;
    }

    /// The chain of original faces spanned by a face of the subdivision, bottom first.
    [[nodiscard]] std::vector<Face> chain(VertexSet sd_face) const {
        std::vector<Face> out;
        for (int label : sd_face) out.push_back(source_face(label));
        return out;
    }
};

namespace detail {

inline std::vector<Face> nonempty_faces(const SimplicialComplex& k) {
    std::vector<Face> out;
    for (Face f : k.faces()) {
        if (!f.empty()) out.push_back(f);
    }
    return out;
}

/// Chains of nonempty faces of `k` whose bottom satisfies `keep_bottom`,
/// encoded over the labels of `labelling`.
template <class KeepBottom>
Subdivision subdivide(const SimplicialComplex& k, const SimplicialComplex& labelling, KeepBottom keep_bottom) {
    if (k.is_void()) throw VoidComplexError("barycentric subdivision of the void complex");
    if (!is_subcomplex(k, labelling)) throw InputError("subdivided complex is not inside the labelling complex");
    Subdivision sd{SimplicialComplex::empty_complex(1), nonempty_faces(labelling)};
    if (sd.source.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw InputError("barycentric subdivision needs " + std::to_string(sd.source.size()) +
                         " vertices; at most " + std::to_string(kMaxVertices) + " are supported");
    }
    std::vector<Face> own;
    std::vector<int> own_label;
    for (Face f : nonempty_faces(k)) {
        own.push_back(f);
        own_label.push_back(sd.label_of(f));
    }
    // Depth-first over strictly increasing chains; `own` is in canonical order,
    // so any proper superset of own[i] appears after it.
    std::vector<VertexSet> chains{VertexSet{}};
    struct Frame {
        std::size_t top;
        VertexSet labels;
    };
    std::vector<Frame> stack;
    for (std::size_t i = 0; i < own.size(); ++i) {
        if (!keep_bottom(own[i])) continue;
        stack.push_back({i, VertexSet{}.with(own_label[i])});
        while (!stack.empty()) {
            const Frame frame = stack.back();
            stack.pop_back();
            chains.push_back(frame.labels);
            const Face top = own[frame.top];
            for (std::size_t j = frame.top + 1; j < own.size(); ++j) {
                if (top.is_subset_of(own[j]) && top != own[j]) {
                    stack.push_back({j, frame.labels.with(own_label[j])});
                }
            }
        }
    }
    const int ground = std::max<int>(1, static_cast<int>(sd.source.size()));
    sd.complex = SimplicialComplex::from_faces(ground, std::move(chains));
    return sd;
}

}  // namespace detail

/// Sd(K): vertices are the nonempty faces of K, faces are chains under strict inclusion.
[[nodiscard]] inline Subdivision barycentric(const SimplicialComplex& k) {
    return detail::subdivide(k, k, [](Face) { return true; });
}

/// Sd(K) labelled by the nonempty faces of a larger complex `labelling` ⊇ K.
[[nodiscard]] inline Subdivision barycentric(const SimplicialComplex& k, const SimplicialComplex& labelling) {
    return detail::subdivide(k, labelling, [](Face) { return true; });
}

/// Sd(D − S): the full subcomplex of Sd(D) on barycenters of faces not in S,
/// labelled by the faces of `labelling` ⊇ D.
[[nodiscard]] inline Subdivision sd_minus(const SimplicialComplex& d, const SimplicialComplex& s,
                                          const SimplicialComplex& labelling) {
    if (!is_subcomplex(s, d)) throw InputError("sd_minus: S is not a subcomplex of D");
    // S is closed under subsets, so a chain avoids S exactly when its bottom does.
    if (s.is_void()) return detail::subdivide(d, labelling, [](Face) { return true; });
    return detail::subdivide(d, labelling, [&](Face bottom) { return !s.contains(bottom); });
}

[[nodiscard]] inline Subdivision sd_minus(const SimplicialComplex& d, const SimplicialComplex& s) {
    return sd_minus(d, s, d);
}

/// One elementary collapse: `free_face` lay in exactly one face of the next
/// dimension, `coface`, and both were removed.
struct CollapsePair {
    Face free_face;
    Face coface;
    bool operator==(const CollapsePair&) const = default;
};

struct CollapseState {
    SimplicialComplex current;
    std::vector<CollapsePair> removed_pairs;
    bool stuck = false;
    /// Target dimension at which the sweep stopped, when stuck.
    std::optional<int> stuck_dimension;
    /// Faces of the stuck dimension left in `current`, lexicographic order.
    std::vector<Face> obstruction;
};

namespace detail {

inline std::vector<int> normalize_targets(std::vector<int> target_dims) {
    if (target_dims.empty()) throw InputError("collapse_sweep needs at least one target dimension");
    std::sort(target_dims.begin(), target_dims.end(), std::greater<>());
    target_dims.erase(std::unique(target_dims.begin(), target_dims.end()), target_dims.end());
    if (target_dims.back() < 1) throw InputError("collapse target dimensions must be at least 1");
    return target_dims;
}

}  // namespace detail

/// Greedy elementary-collapse sweep.
///
/// Target dimensions are processed from the largest down. For each target D
/// the lexicographically first (D-1)-face lying in exactly one D-face is
/// removed together with that D-face, until no D-face is left or none is free.
[[nodiscard]] inline CollapseState collapse_sweep(const SimplicialComplex& x, std::vector<int> target_dims) {
    if (x.is_void()) throw VoidComplexError("collapse of the void complex");
    target_dims = detail::normalize_targets(std::move(target_dims));
    std::set<Face, CanonicalLess> alive(x.faces().begin(), x.faces().end());
    const VertexSet ground = VertexSet::range(x.ground_size());
    CollapseState state{x, {}, false, std::nullopt, {}};

    for (int d : target_dims) {
        std::map<Face, int, LexLess> cofaces;  // (d-1)-face -> number of alive d-faces above it
        std::size_t top_faces = 0;
        for (Face f : alive) {
            if (f.dimension() == d - 1) cofaces.emplace(f, 0);
            if (f.dimension() == d) {
                ++top_faces;
                for (int v : f) ++cofaces[f.without(v)];
            }
        }
        std::set<Face, LexLess> free;
        for (auto [f, c] : cofaces) {
            if (c == 1) free.insert(f);
        }
        while (top_faces > 0 && !free.empty()) {
            const Face sigma = *free.begin();
            Face tau;
            for (int v : ground - sigma) {
                if (alive.contains(sigma.with(v))) {
                    tau = sigma.with(v);
                    break;
                }
            }
            state.removed_pairs.push_back({sigma, tau});
            alive.erase(tau);
            alive.erase(sigma);
            free.erase(sigma);
            cofaces.erase(sigma);
            --top_faces;
            for (int v : tau) {
                const Face other = tau.without(v);
                if (other == sigma) continue;
                const int c = --cofaces[other];
                if (c == 1) free.insert(other);
                if (c == 0) free.erase(other);
            }
        }
        if (top_faces > 0) {
            state.stuck = true;
            state.stuck_dimension = d;
            for (Face f : alive) {
                if (f.dimension() == d) state.obstruction.push_back(f);
            }
            std::sort(state.obstruction.begin(), state.obstruction.end(), LexLess{});
            break;
        }
    }
    state.current = SimplicialComplex::from_faces(x.ground_size(), {alive.begin(), alive.end()});
    return state;
}

/// True iff no face of dimension ≥ q remains.
[[nodiscard]] inline bool collapsed_below(const CollapseState& state, int q) {
    if (state.current.is_void()) return true;
    return state.current.dim() < q;
}

/// Replays a collapse log on `x`, checking that every pair was an elementary
/// collapse at its turn. Returns the complex left at the end, or nullopt on the
/// first invalid step.
[[nodiscard]] inline std::optional<SimplicialComplex> replay_collapse(const SimplicialComplex& x,
                                                                      const std::vector<CollapsePair>& log) {
    std::set<Face, CanonicalLess> alive(x.faces().begin(), x.faces().end());
    const VertexSet ground = VertexSet::range(x.ground_size());
    for (const auto& [sigma, tau] : log) {
        if (!alive.contains(sigma) || !alive.contains(tau)) return std::nullopt;
        if (!sigma.is_subset_of(tau) || tau.size() != sigma.size() + 1) return std::nullopt;
        int above = 0;
        for (int v : ground - sigma) above += alive.contains(sigma.with(v)) ? 1 : 0;
        if (above != 1) return std::nullopt;
        alive.erase(tau);
        alive.erase(sigma);
    }
    return SimplicialComplex::from_faces(x.ground_size(), {alive.begin(), alive.end()});
}

}  // namespace srlc
