#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "srlc/complex.hpp"

namespace srlc {

/// Support class (supp₊ a, supp₋ a) of a multidegree a ∈ ℤⁿ.
///
/// The graded pieces of local cohomology of k[Δ] depend on a only through
/// this pair, so multidegrees are never materialized as integer vectors.
struct SupportPair {
    VertexSet plus;
    VertexSet minus;

    SupportPair() = default;
    SupportPair(VertexSet f_plus, VertexSet f_minus) : plus(f_plus), minus(f_minus) {
        if (plus.intersects(minus)) {
            throw InputError("support pair " + plus.to_string() + "," + minus.to_string() +
                             " is not disjoint");
        }
    }

    /// supp a = F₊ ∪ F₋
    [[nodiscard]] VertexSet support() const { return plus | minus; }

    bool operator==(const SupportPair&) const = default;

    [[nodiscard]] std::string to_string() const {
        return "(" + plus.to_string() + "," + minus.to_string() + ")";
    }
};

/// Enumeration order: canonical order of the support, then lexicographic on F₊.
[[nodiscard]] inline bool support_pair_less(const SupportPair& a, const SupportPair& b) {
    const VertexSet sa = a.support();
    const VertexSet sb = b.support();
    if (sa != sb) return canonical_less(sa, sb);
    return canonical_less(a.plus, b.plus);
}

/// Minimal generators of a square-free monomial ideal, one vertex set per monomial.
struct MonomialIdealGens {
    std::vector<VertexSet> generators;  // canonical order

    /// True iff the monomial x^S lies in the ideal.
    [[nodiscard]] bool contains_monomial(VertexSet s) const {
        return std::any_of(generators.begin(), generators.end(),
                           [&](VertexSet g) { return g.is_subset_of(s); });
    }
};

/// Minimal non-faces of K, i.e. the generators of its Stanley–Reisner ideal.
[[nodiscard]] inline MonomialIdealGens minimal_nonfaces(const SimplicialComplex& k) {
    if (k.is_void()) throw VoidComplexError("Stanley–Reisner ideal of the void complex");
    const VertexSet ground = VertexSet::range(k.ground_size());
    MonomialIdealGens out;
    // A minimal non-face S has every S∖{v} a face, so S = G ∪ {v} for some face G.
    for (Face g : k.faces()) {
        for (int v : ground - g) {
            if (g.min_label() != 0 && v < g.max_label()) continue;  // visit each S once, via its largest vertex
            const VertexSet s = g.with(v);
            if (k.contains(s)) continue;
            bool minimal = true;
            for (int w : s) {
                if (!k.contains(s.without(w))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.generators.push_back(s);
        }
    }
    std::sort(out.generators.begin(), out.generators.end(), CanonicalLess{});
    out.generators.erase(std::unique(out.generators.begin(), out.generators.end()), out.generators.end());
    return out;
}

/// Every disjoint pair (F₊, F₋) with F₊ ∪ F₋ ∈ K: each face split in all 2^|G| ways.
[[nodiscard]] inline std::vector<SupportPair> support_pair_classes(const SimplicialComplex& k) {
    if (k.is_void()) throw VoidComplexError("support classes of the void complex");
    std::vector<SupportPair> out;
    for (Face g : k.faces()) {
        // Splits of g in increasing canonical order of F₊.
        std::vector<VertexSet> subsets;
        const std::uint64_t mask = g.bits();
        std::uint64_t sub = mask;
        while (true) {
            subsets.emplace_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        std::sort(subsets.begin(), subsets.end(), CanonicalLess{});
        for (VertexSet plus : subsets) out.emplace_back(plus, g - plus);
    }
    return out;
}

/// dim k[K] = dim K + 1.
[[nodiscard]] inline int krull_dimension(const SimplicialComplex& k) {
    if (k.is_void()) throw VoidComplexError("Krull dimension of the void complex");
    return k.dim() + 1;
}

}  // namespace srlc
