#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "srlc/complex.hpp"
#include "srlc/field.hpp"
#include "srlc/linalg.hpp"

namespace srlc {

/// Oriented simplicial chain complex of a pair (K, A) over an exact field.
///
/// The basis in dimension q consists of the q-faces of K not in A, each
/// oriented by increasing vertex label; q starts at -1, where the basis is
/// {∅} whenever ∅ ∈ K∖A. With A void this is the augmented complex of K.
/// Boundary entries are the integers ±1 and are interpreted in the field
/// when ranks are taken.
struct ChainComplexData {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::vector<Face>> bases;  // bases[q + 1]
    std::vector<SparseMatrix> boundaries;  // boundaries[q + 1] : C_q -> C_{q-1}

    [[nodiscard]] int top_dim() const { return static_cast<int>(bases.size()) - 2; }

    [[nodiscard]] const std::vector<Face>& basis(int q) const {
        static const std::vector<Face> kNone;
        const int slot = q + 1;
        return slot >= 0 && slot < static_cast<int>(bases.size()) ? bases[static_cast<std::size_t>(slot)] : kNone;
    }

    /// ∂_q; an empty matrix outside the stored range.
    [[nodiscard]] SparseMatrix boundary(int q) const {
        const int slot = q + 1;
        if (slot >= 0 && slot < static_cast<int>(boundaries.size())) return boundaries[static_cast<std::size_t>(slot)];
        return SparseMatrix(basis(q - 1).size(), basis(q).size());
    }
};

namespace detail {

inline ChainComplexData build_chain_complex(const std::vector<Face>& faces, const FieldSpec& field) {
    ChainComplexData data;
    data.field = field;
    int top = -1;
    for (Face f : faces) top = std::max(top, f.dimension());
    if (faces.empty()) {
        data.bases.resize(1);
        data.boundaries.emplace_back(0, 0);
        return data;
    }
    data.bases.resize(static_cast<std::size_t>(top + 2));
    for (Face f : faces) data.bases[static_cast<std::size_t>(f.size())].push_back(f);

    std::vector<std::unordered_map<VertexSet, std::uint32_t>> index(data.bases.size());
    for (std::size_t s = 0; s < data.bases.size(); ++s) {
        std::sort(data.bases[s].begin(), data.bases[s].end(), LexLess{});
        for (std::size_t j = 0; j < data.bases[s].size(); ++j) {
            index[s].emplace(data.bases[s][j], static_cast<std::uint32_t>(j));
        }
    }
    data.boundaries.emplace_back(0, data.bases[0].size());
    for (std::size_t s = 1; s < data.bases.size(); ++s) {
        SparseMatrix m(data.bases[s - 1].size(), data.bases[s].size());
        for (std::size_t j = 0; j < data.bases[s].size(); ++j) {
            const Face f = data.bases[s][j];
            std::int64_t sign = 1;
            auto& col = m.columns[j];
            for (int v : f) {
                auto it = index[s - 1].find(f.without(v));
                if (it != index[s - 1].end()) col.emplace_back(it->second, sign);
                sign = -sign;
            }
            std::sort(col.begin(), col.end());
        }
        data.boundaries.push_back(std::move(m));
    }
    return data;
}

}  // namespace detail

/// Chain complex of the pair (K, A); A must be a subcomplex of K (void allowed).
[[nodiscard]] inline ChainComplexData relative_chain_complex(const SimplicialComplex& k, const SimplicialComplex& a,
                                                             const FieldSpec& field) {
    if (!is_subcomplex(a, k)) throw InputError("relative pair: A is not a subcomplex of K");
    std::vector<Face> faces;
    for (Face f : k.faces()) {
        if (a.is_void() || !a.contains(f)) faces.push_back(f);
    }
    return detail::build_chain_complex(faces, field);
}

/// Chain complex of K. Reduced mode keeps the augmentation onto {∅}.
[[nodiscard]] inline ChainComplexData chain_complex(const SimplicialComplex& k, const FieldSpec& field, bool reduced) {
    if (reduced || k.is_void()) return relative_chain_complex(k, SimplicialComplex::void_complex(k.ground_size()), field);
    return relative_chain_complex(k, SimplicialComplex::empty_complex(k.ground_size()), field);
}

/// Homology dimensions indexed from q = -1; over a field they equal the
/// cohomology dimensions.
[[nodiscard]] inline std::vector<std::size_t> homology_dims(const ChainComplexData& c) {
    const std::size_t slots = c.bases.size();
    std::vector<std::size_t> ranks(slots + 1, 0);  // ranks[s] = rank ∂ at slot s
    for (std::size_t s = 1; s < slots; ++s) ranks[s] = rank(c.boundaries[s], c.field);
    std::vector<std::size_t> out(slots, 0);
    for (std::size_t s = 0; s < slots; ++s) out[s] = c.bases[s].size() - ranks[s] - ranks[s + 1];
    return out;
}

/// dim H̃^q(K; k) for q = -1..dim K. Void → [0]; {∅} → [1].
[[nodiscard]] inline std::vector<std::size_t> reduced_cohomology_dims(const SimplicialComplex& k,
                                                                      const FieldSpec& field) {
    return homology_dims(chain_complex(k, field, true));
}

/// dim H^q(K, A; k) for q = -1.., computed on the quotient of augmented chain
/// complexes. A void gives the reduced cohomology of K; A = {∅} gives the
/// unreduced cohomology of K; otherwise relative reduced and unreduced agree.
[[nodiscard]] inline std::vector<std::size_t> relative_cohomology_dims(const SimplicialComplex& k,
                                                                       const SimplicialComplex& a,
                                                                       const FieldSpec& field) {
    return homology_dims(relative_chain_complex(k, a, field));
}

[[nodiscard]] inline std::size_t relative_cohomology_dim(const SimplicialComplex& k, const SimplicialComplex& a, int q,
                                                         const FieldSpec& field) {
    const auto dims = relative_cohomology_dims(k, a, field);
    const int slot = q + 1;
    return slot >= 0 && slot < static_cast<int>(dims.size()) ? dims[static_cast<std::size_t>(slot)] : 0;
}

/// Σ_q (-1)^q dim H̃^q(K), q ≥ -1.
[[nodiscard]] inline long reduced_euler_characteristic(const std::vector<std::size_t>& dims_from_minus_one) {
    long chi = 0;
    for (std::size_t s = 0; s < dims_from_minus_one.size(); ++s) {
        const long term = static_cast<long>(dims_from_minus_one[s]);
        chi += (s % 2 == 1) ? term : -term;  // slot s is degree s-1
    }
    return chi;
}

}  // namespace srlc
