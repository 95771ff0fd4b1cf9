#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "srlc/errors.hpp"
#include "srlc/vertex_set.hpp"

namespace srlc {

/// A finite abstract simplicial complex on the ground set {1..n}.
///
/// Values are immutable once built. The complex keeps both its facets (in
/// lexicographic order) and the full face list (in canonical order: by
/// cardinality, then lexicographic), so membership is a binary search.
///
/// The void complex (no faces at all) and the empty complex {∅} are distinct
/// values; reduced cohomology tells them apart.
class SimplicialComplex {
public:
    /// The empty complex {∅} on a one-vertex ground set.
    SimplicialComplex() : SimplicialComplex(1, false) {}

    /// Smallest complex containing every listed set. An empty list gives {∅}.
    static SimplicialComplex from_facets(int ground_size, const std::vector<VertexSet>& generators) {
        check_ground_size(ground_size);
        const VertexSet ground = VertexSet::range(ground_size);
        std::unordered_set<VertexSet> faces;
        faces.insert(VertexSet{});
        for (VertexSet g : generators) {
            if (!g.is_subset_of(ground)) {
                throw InputError("face " + g.to_string() + " has a vertex outside 1.." +
                                 std::to_string(ground_size));
            }
            if (g.size() > kMaxMaterializedFacet) {
                throw InputError("facet " + g.to_string() + " too large to materialize");
            }
            if (faces.contains(g)) continue;
            const std::uint64_t mask = g.bits();
            std::uint64_t sub = mask;
            while (true) {
                faces.insert(VertexSet(sub));
                if (sub == 0) break;
                sub = (sub - 1) & mask;
            }
        }
        return SimplicialComplex(ground_size, {faces.begin(), faces.end()});
    }

    static SimplicialComplex from_facets(int ground_size, const std::vector<std::vector<int>>& generators) {
        check_ground_size(ground_size);
        std::vector<VertexSet> sets;
        sets.reserve(generators.size());
        for (const auto& labels : generators) {
            VertexSet s;
            for (int v : labels) {
                if (v < 1 || v > ground_size) {
                    throw InputError("vertex label " + std::to_string(v) + " outside 1.." +
                                     std::to_string(ground_size));
                }
                s.insert(v);
            }
            sets.push_back(s);
        }
        return from_facets(ground_size, sets);
    }

    /// Builds from an explicit face family, which must be closed under subsets.
    static SimplicialComplex from_faces(int ground_size, std::vector<VertexSet> faces) {
        check_ground_size(ground_size);
        if (faces.empty()) return void_complex(ground_size);
        std::unordered_set<VertexSet> set(faces.begin(), faces.end());
        const VertexSet ground = VertexSet::range(ground_size);
        for (VertexSet f : set) {
            if (!f.is_subset_of(ground)) {
                throw InputError("face " + f.to_string() + " outside ground set");
            }
            for (int v : f) {
                if (!set.contains(f.without(v))) {
                    throw InputError("face family not closed under subsets at " + f.to_string());
                }
            }
        }
        return SimplicialComplex(ground_size, {set.begin(), set.end()});
    }

    static SimplicialComplex void_complex(int ground_size) {
        check_ground_size(ground_size);
        return SimplicialComplex(ground_size, true);
    }

    static SimplicialComplex empty_complex(int ground_size) {
        check_ground_size(ground_size);
        return SimplicialComplex(ground_size, false);
    }

    /// All subsets of {1..n}.
    static SimplicialComplex full_simplex(int n) { return from_facets(n, {VertexSet::range(n)}); }

    /// All proper subsets of {1..n}.
    static SimplicialComplex simplex_boundary(int n) {
        check_ground_size(n);
        std::vector<VertexSet> facets;
        const VertexSet all = VertexSet::range(n);
        for (int v = 1; v <= n; ++v) facets.push_back(all.without(v));
        return from_facets(n, facets);
    }

    [[nodiscard]] int ground_size() const { return ground_size_; }
    [[nodiscard]] bool is_void() const { return void_; }
    /// Inclusion-maximal faces, lexicographic order. {∅} has the single facet ∅.
    [[nodiscard]] const std::vector<VertexSet>& facets() const { return facets_; }
    /// Every face, canonical order (∅ first when present).
    [[nodiscard]] const std::vector<VertexSet>& faces() const { return faces_; }
    [[nodiscard]] std::size_t face_count() const { return faces_.size(); }

    [[nodiscard]] bool contains(VertexSet f) const {
        return std::binary_search(faces_.begin(), faces_.end(), f, CanonicalLess{});
    }

    /// Union of the 0-faces.
    [[nodiscard]] VertexSet vertex_set() const {
        VertexSet out;
        for (VertexSet f : faces_) {
            if (f.size() > 1) break;
            out = out | f;
        }
        return out;
    }

    /// Largest face dimension; -1 for {∅}.
    [[nodiscard]] int dim() const {
        if (void_) throw VoidComplexError("the void complex has no dimension");
        return faces_.back().dimension();
    }

    bool operator==(const SimplicialComplex& other) const {
        return ground_size_ == other.ground_size_ && void_ == other.void_ && faces_ == other.faces_;
    }

    [[nodiscard]] std::string to_string() const {
        if (void_) return "void";
        std::string s = "[";
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (i) s += ' ';
            s += facets_[i].to_string();
        }
        return s + "]";
    }

private:
    static constexpr int kMaxMaterializedFacet = 24;

    static void check_ground_size(int n) {
        if (n < 1 || n > kMaxVertices) {
            throw InputError("ground size " + std::to_string(n) + " outside 1.." +
                             std::to_string(kMaxVertices));
        }
    }

    SimplicialComplex(int ground_size, bool is_void) : ground_size_(ground_size), void_(is_void) {
        if (!is_void) {
            faces_.push_back(VertexSet{});
            facets_.push_back(VertexSet{});
        }
    }

    SimplicialComplex(int ground_size, std::vector<VertexSet> faces)
        : ground_size_(ground_size), void_(false), faces_(std::move(faces)) {
        std::sort(faces_.begin(), faces_.end(), CanonicalLess{});
        const VertexSet ground = VertexSet::range(ground_size_);
        for (VertexSet f : faces_) {
            bool maximal = true;
            for (int v : ground - f) {
                if (contains(f.with(v))) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) facets_.push_back(f);
        }
        std::sort(facets_.begin(), facets_.end(), LexLess{});
    }

    int ground_size_ = 1;
    bool void_ = false;
    std::vector<VertexSet> facets_;
    std::vector<VertexSet> faces_;
};

/// Faces with exactly q+1 vertices, lexicographic order. q = -1 gives [∅].
[[nodiscard]] inline std::vector<Face> faces_of_dim(const SimplicialComplex& k, int q) {
    std::vector<Face> out;
    for (Face f : k.faces()) {
        if (f.dimension() == q) out.push_back(f);
    }
    return out;
}

[[nodiscard]] inline int dim(const SimplicialComplex& k) { return k.dim(); }

/// f-vector indexed from dimension -1: entry q+1 counts the q-faces.
[[nodiscard]] inline std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
    std::vector<std::size_t> out;
    for (Face f : k.faces()) {
        const auto slot = static_cast<std::size_t>(f.size());
        if (out.size() <= slot) out.resize(slot + 1, 0);
        ++out[slot];
    }
    return out;
}

namespace detail {

template <class Pred>
SimplicialComplex filter_faces(const SimplicialComplex& k, Pred keep) {
    std::vector<VertexSet> kept;
    for (Face g : k.faces()) {
        if (keep(g)) kept.push_back(g);
    }
    if (kept.empty()) return SimplicialComplex::void_complex(k.ground_size());
    return SimplicialComplex::from_faces(k.ground_size(), std::move(kept));
}

inline void require_same_ground(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground_size() != b.ground_size()) {
        throw InputError("ground size mismatch: " + std::to_string(a.ground_size()) + " vs " +
                         std::to_string(b.ground_size()));
    }
}

}  // namespace detail

/// {G ∈ K : G ∪ F ∈ K}. Void when F is not a face.
[[nodiscard]] inline SimplicialComplex star(const SimplicialComplex& k, Face f) {
    if (k.is_void() || !k.contains(f)) return SimplicialComplex::void_complex(k.ground_size());
    return detail::filter_faces(k, [&](Face g) { return k.contains(g | f); });
}

/// {G ∈ K : F ⊄ G}. Deleting ∅ gives the void complex.
[[nodiscard]] inline SimplicialComplex deletion(const SimplicialComplex& k, Face f) {
    if (k.is_void()) return k;
    return detail::filter_faces(k, [&](Face g) { return !f.is_subset_of(g); });
}

/// {G ∈ K : G ∩ F = ∅, G ∪ F ∈ K}.
[[nodiscard]] inline SimplicialComplex link(const SimplicialComplex& k, Face f) {
    if (k.is_void() || !k.contains(f)) return SimplicialComplex::void_complex(k.ground_size());
    return detail::filter_faces(k, [&](Face g) { return !g.intersects(f) && k.contains(g | f); });
}

/// Faces of K not contained in F, read literally as a face family.
///
/// This family is generally not closed under subsets, so it is returned as a
/// plain list for comparison against `deletion` rather than as a complex.
[[nodiscard]] inline std::vector<Face> faces_not_contained_in(const SimplicialComplex& k, Face f) {
    std::vector<Face> out;
    for (Face g : k.faces()) {
        if (!g.is_subset_of(f)) out.push_back(g);
    }
    return out;
}

/// True iff every facet of S is a face of K. The void complex is a subcomplex of everything.
[[nodiscard]] inline bool is_subcomplex(const SimplicialComplex& s, const SimplicialComplex& k) {
    detail::require_same_ground(s, k);
    if (s.is_void()) return true;
    if (k.is_void()) return false;
    return std::all_of(s.facets().begin(), s.facets().end(), [&](Face f) { return k.contains(f); });
}

[[nodiscard]] inline SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    detail::require_same_ground(a, b);
    if (a.is_void()) return a;
    if (b.is_void()) return b;
    return detail::filter_faces(a, [&](Face g) { return b.contains(g); });
}

/// Faces of dimension at most q.
[[nodiscard]] inline SimplicialComplex skeleton(const SimplicialComplex& k, int q) {
    if (k.is_void()) return k;
    return detail::filter_faces(k, [&](Face g) { return g.dimension() <= q; });
}

/// Faces of K whose vertices all lie in W.
[[nodiscard]] inline SimplicialComplex induced_subcomplex(const SimplicialComplex& k, VertexSet w) {
    if (k.is_void()) return k;
    return detail::filter_faces(k, [&](Face g) { return g.is_subset_of(w); });
}

}  // namespace srlc
