#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <string>
#include <vector>

#include "srlc/cohomology.hpp"
#include "srlc/complex.hpp"
#include "srlc/field.hpp"
#include "srlc/linalg.hpp"
#include "srlc/stanley_reisner.hpp"
#include "srlc/subdivision.hpp"

namespace srlc {

/// Index bookkeeping for the vanishing criteria, in one place.
///
/// d is the Krull dimension of k[Δ]. The level-n criterion quantifies over
/// faces of dimension d-i for i = 1..n, asks each to carry n-i+1 vertices of
/// Σ, and is compared against vanishing of H^{d-n+1}_J. Level 2 is the
/// second-vanishing form, level 1 the first-vanishing form.
struct IndexMap {
    int d = 0;

    static IndexMap of(const SimplicialComplex& delta) { return IndexMap{krull_dimension(delta)}; }

    [[nodiscard]] int vanishing_index(int n) const { return d - n + 1; }
    [[nodiscard]] int face_dimension(int i) const { return d - i; }
    [[nodiscard]] int required_sigma_vertices(int n, int i) const { return n - i + 1; }
    /// 1 ≤ n ≤ d-1
    [[nodiscard]] bool admissible(int n) const { return n >= 1 && n <= d - 1; }
    /// Collapse targets d-1, ..., d-n.
    [[nodiscard]] std::vector<int> collapse_targets(int n) const {
        std::vector<int> out;
        for (int i = 1; i <= n; ++i) out.push_back(face_dimension(i));
        return out;
    }
};

/// H^i_J(k[Δ]) over `field`, where J is the image of I_Σ in k[Δ].
struct VanishingQuery {
    SimplicialComplex delta;
    SimplicialComplex sigma;
    int index = 0;
    FieldSpec field = FieldSpec::rationals();

    void validate() const {
        if (delta.is_void()) throw VoidComplexError("Δ must not be void");
        if (!is_subcomplex(sigma, delta)) throw InputError("Σ is not a subcomplex of Δ");
        const int d = krull_dimension(delta);
        if (index < 0 || index > d) {
            throw InputError("cohomological index " + std::to_string(index) + " outside 0.." + std::to_string(d));
        }
    }
};

/// dim_k H^i_J(k[Δ])_a for a multidegree a of support class `pair`, following
/// the operational route: X = Sd(star_Δ(F₊) − Σ), A = Sd(del_{star}(F₋) − Σ),
/// answer dim H̃^{i-1}(X, A). Zero when F₊ is not a face.
[[nodiscard]] inline std::size_t graded_piece_dim(const SimplicialComplex& delta, const SimplicialComplex& sigma, int i,
                                                  const SupportPair& pair, const FieldSpec& field) {
    if (!is_subcomplex(sigma, delta)) throw InputError("Σ is not a subcomplex of Δ");
    const SimplicialComplex st = star(delta, pair.plus);
    if (st.is_void()) return 0;
    const SimplicialComplex del = deletion(st, pair.minus);
    const Subdivision x = sd_minus(st, intersection(sigma, st), st);
    const SimplicialComplex a = del.is_void() ? SimplicialComplex::void_complex(x.complex.ground_size())
                                              : sd_minus(del, intersection(sigma, del), st).complex;
    return relative_cohomology_dim(x.complex, a, i - 1, field);
}

/// Evaluates every graded piece of one (Δ, Σ) from a single subdivision.
///
/// Both spaces of each pair are subcomplexes of Sd(Δ − Σ): a chain lies in X
/// iff its top face is in star_Δ(F₊), and in A iff additionally its top face
/// misses F₋. The relative complex is therefore the set of chains of
/// Sd(Δ − Σ) whose top face T has T ∪ F₊ ∈ Δ and F₋ ⊆ T, plus the empty
/// chain when F₋ = ∅.
class PieceEvaluator {
public:
    PieceEvaluator(const SimplicialComplex& delta, const SimplicialComplex& sigma) : delta_(delta) {
        if (delta.is_void()) throw VoidComplexError("Δ must not be void");
        const Subdivision sd = sd_minus(delta, sigma);
        const auto& faces = sd.complex.faces();  // canonical: ∅ first, then by size
        std::unordered_map<VertexSet, std::uint32_t> position;
        chains_.reserve(faces.size());
        for (std::size_t j = 0; j < faces.size(); ++j) {
            position.emplace(faces[j], static_cast<std::uint32_t>(j));
            Chain c;
            c.size = faces[j].size();
            c.top = faces[j].empty() ? Face{} : sd.source_face(faces[j].max_label());
            chains_.push_back(c);
        }
        for (std::size_t j = 0; j < faces.size(); ++j) {
            std::int64_t sign = 1;
            for (int v : faces[j]) {
                chains_[j].boundary.emplace_back(position.at(faces[j].without(v)), sign);
                sign = -sign;
            }
        }
        top_size_ = faces.back().size();
    }

    /// dim H̃^q(X, A) for q = -1..dim Δ, one vector per field.
    [[nodiscard]] std::vector<std::vector<std::size_t>> relative_dims(const SupportPair& pair,
                                                                      std::span<const FieldSpec> fields) const {
        const std::size_t slots = static_cast<std::size_t>(top_size_) + 1;
        std::vector<std::vector<std::size_t>> out(fields.size(), std::vector<std::size_t>(slots, 0));
        if (!delta_.contains(pair.plus)) return out;

        constexpr std::uint32_t kOut = UINT32_MAX;
        std::vector<std::uint32_t> local(chains_.size(), kOut);
        std::vector<std::size_t> basis_size(slots, 0);
        for (std::size_t j = 0; j < chains_.size(); ++j) {
            const Chain& c = chains_[j];
            const bool selected = c.size == 0 ? pair.minus.empty()
                                              : pair.minus.is_subset_of(c.top) && delta_.contains(c.top | pair.plus);
            if (selected) local[j] = static_cast<std::uint32_t>(basis_size[static_cast<std::size_t>(c.size)]++);
        }
        std::vector<SparseMatrix> boundary(slots);
        for (std::size_t s = 1; s < slots; ++s) boundary[s] = SparseMatrix(basis_size[s - 1], basis_size[s]);
        for (std::size_t j = 0; j < chains_.size(); ++j) {
            if (local[j] == kOut || chains_[j].size == 0) continue;
            auto& col = boundary[static_cast<std::size_t>(chains_[j].size)].columns[local[j]];
            for (auto [face, sign] : chains_[j].boundary) {
                if (local[face] != kOut) col.emplace_back(local[face], sign);
            }
            std::sort(col.begin(), col.end());
        }
        for (std::size_t f = 0; f < fields.size(); ++f) {
            std::vector<std::size_t> ranks(slots + 1, 0);
            for (std::size_t s = 1; s < slots; ++s) ranks[s] = rank(boundary[s], fields[f]);
            for (std::size_t s = 0; s < slots; ++s) out[f][s] = basis_size[s] - ranks[s] - ranks[s + 1];
        }
        return out;
    }

    [[nodiscard]] std::size_t piece_dim(int i, const SupportPair& pair, const FieldSpec& field) const {
        const auto dims = relative_dims(pair, std::span<const FieldSpec>(&field, 1)).front();
        const auto slot = static_cast<std::size_t>(i);  // degree i-1 sits at slot i
        return i >= 0 && slot < dims.size() ? dims[slot] : 0;
    }

private:
    struct Chain {
        int size = 0;
        Face top;
        std::vector<std::pair<std::uint32_t, std::int64_t>> boundary;
    };

    SimplicialComplex delta_;
    std::vector<Chain> chains_;
    int top_size_ = 0;
};

/// Graded-piece dimensions of every support class of Δ, in every cohomological
/// index 0..d and every field. Entry [field][pair][i] = dim H^i_J(k[Δ])_a.
struct PieceTable {
    std::vector<FieldSpec> fields;
    std::vector<SupportPair> pairs;  // support_pair_classes(Δ) order
    std::vector<std::vector<std::vector<std::size_t>>> dims;

    static PieceTable compute(const SimplicialComplex& delta, const SimplicialComplex& sigma,
                              std::vector<FieldSpec> fields) {
        PieceTable t;
        t.fields = std::move(fields);
        t.pairs = support_pair_classes(delta);
        const PieceEvaluator eval(delta, sigma);
        t.dims.assign(t.fields.size(), std::vector<std::vector<std::size_t>>(t.pairs.size()));
        for (std::size_t p = 0; p < t.pairs.size(); ++p) {
            auto per_field = eval.relative_dims(t.pairs[p], t.fields);
            for (std::size_t f = 0; f < t.fields.size(); ++f) t.dims[f][p] = std::move(per_field[f]);
        }
        return t;
    }

    [[nodiscard]] std::size_t at(std::size_t field, std::size_t pair, int index) const {
        const auto& v = dims[field][pair];
        return index >= 0 && static_cast<std::size_t>(index) < v.size() ? v[static_cast<std::size_t>(index)] : 0;
    }
};

struct VanishingResult {
    bool vanishes = true;
    /// First support class (enumeration order) with a nonzero piece.
    std::optional<SupportPair> witness;
    std::vector<std::pair<SupportPair, std::size_t>> per_pair;
    /// Exhaustive mode only: classes with F₊ ∪ F₋ ∉ Δ that evaluated nonzero.
    std::vector<SupportPair> excluded_nonzero;
    std::size_t excluded_checked = 0;
};

namespace detail {

inline VanishingResult vanishing_from_table(const PieceTable& table, std::size_t field, int index) {
    VanishingResult r;
    for (std::size_t p = 0; p < table.pairs.size(); ++p) {
        const std::size_t dim = table.at(field, p, index);
        r.per_pair.emplace_back(table.pairs[p], dim);
        if (dim != 0 && !r.witness) {
            r.vanishes = false;
            r.witness = table.pairs[p];
        }
    }
    return r;
}

/// All disjoint pairs on the ground set whose union is not a face of Δ.
inline std::vector<SupportPair> excluded_pairs(const SimplicialComplex& delta) {
    std::vector<SupportPair> out;
    const int n = delta.ground_size();
    if (n > 12) throw InputError("exhaustive pair enumeration is limited to ground sets of size 12");
    std::size_t total = 1;
    for (int v = 0; v < n; ++v) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        VertexSet plus;
        VertexSet minus;
        std::size_t c = code;
        for (int v = 1; v <= n; ++v, c /= 3) {
            if (c % 3 == 1) plus.insert(v);
            if (c % 3 == 2) minus.insert(v);
        }
        if (!delta.contains(plus | minus)) out.emplace_back(plus, minus);
    }
    return out;
}

}  // namespace detail

/// H^i_J(k[Δ]) = 0 iff every support class has a zero graded piece.
///
/// With `exhaustive`, classes whose support is not a face of Δ are also
/// evaluated (through the operational route) and any nonzero one is recorded.
[[nodiscard]] inline VanishingResult local_cohomology_vanishes(const VanishingQuery& q, bool exhaustive = false) {
    q.validate();
    const PieceTable table = PieceTable::compute(q.delta, q.sigma, {q.field});
    VanishingResult r = detail::vanishing_from_table(table, 0, q.index);
    if (exhaustive) {
        for (const SupportPair& pair : detail::excluded_pairs(q.delta)) {
            ++r.excluded_checked;
            if (graded_piece_dim(q.delta, q.sigma, q.index, pair, q.field) != 0) r.excluded_nonzero.push_back(pair);
        }
    }
    return r;
}

/// A face of Δ that carries fewer Σ-vertices than the criterion asks for.
struct CriterionViolation {
    Face face;
    int level = 0;  // i in 1..n
    int sigma_vertices = 0;
    int required = 0;
};

struct CriterionResult {
    bool holds = true;
    /// False when n lies outside 1..d-1; the quantifiers are still evaluated literally.
    bool admissible = true;
    std::vector<CriterionViolation> violations;
};

/// For i = 1..n: every (d-i)-face of Δ contains at least n-i+1 vertices of Σ.
/// "Vertices of Σ" are the 0-faces of Σ.
[[nodiscard]] inline CriterionResult evaluate_criterion(const SimplicialComplex& delta, const SimplicialComplex& sigma,
                                                        int n) {
    if (!is_subcomplex(sigma, delta)) throw InputError("Σ is not a subcomplex of Δ");
    const IndexMap idx = IndexMap::of(delta);
    const VertexSet sigma_vertices = sigma.is_void() ? VertexSet{} : sigma.vertex_set();
    CriterionResult r;
    r.admissible = idx.admissible(n);
    for (int i = 1; i <= n; ++i) {
        const int face_dim = idx.face_dimension(i);
        if (face_dim < -1) break;
        const int required = idx.required_sigma_vertices(n, i);
        for (Face f : faces_of_dim(delta, face_dim)) {
            const int count = (f & sigma_vertices).size();
            if (count < required) r.violations.push_back({f, i, count, required});
        }
    }
    r.holds = r.violations.empty();
    return r;
}

[[nodiscard]] inline bool vanishing_criterion(const SimplicialComplex& delta, const SimplicialComplex& sigma, int n) {
    return evaluate_criterion(delta, sigma, n).holds;
}

/// First-vanishing reading, written out on its own: every facet-dimensional
/// face (dimension d-1) of Δ meets the vertex set of Σ.
[[nodiscard]] inline bool top_faces_meet_sigma(const SimplicialComplex& delta, const SimplicialComplex& sigma) {
    const int top = delta.dim();
    for (Face f : delta.faces()) {
        if (f.dimension() != top) continue;
        bool meets = false;
        for (int v : f) {
            if (!sigma.is_void() && sigma.contains(VertexSet{v})) {
                meets = true;
                break;
            }
        }
        if (!meets) return false;
    }
    return true;
}

/// One criterion-vs-cohomology comparison at level n over one field.
struct AuditReport {
    VanishingQuery query;
    int n = 0;
    bool admissible = true;
    bool criterion_verdict = false;
    bool cohomology_verdict = false;
    bool agree = false;
    std::optional<SupportPair> witness;
    std::vector<std::pair<SupportPair, std::size_t>> per_pair_dims;
};

/// Audits every requested level n against one precomputed piece table.
/// Levels whose vanishing index falls outside 0..d are skipped.
[[nodiscard]] inline std::vector<AuditReport> audit_levels(const SimplicialComplex& delta,
                                                           const SimplicialComplex& sigma,
                                                           const std::vector<int>& levels,
                                                           const std::vector<FieldSpec>& fields) {
    if (!is_subcomplex(sigma, delta)) throw InputError("Σ is not a subcomplex of Δ");
    const IndexMap idx = IndexMap::of(delta);
    const PieceTable table = PieceTable::compute(delta, sigma, fields);
    std::vector<AuditReport> out;
    for (int n : levels) {
        const int index = idx.vanishing_index(n);
        if (index < 0 || index > idx.d) continue;
        const bool criterion = vanishing_criterion(delta, sigma, n);
        for (std::size_t f = 0; f < fields.size(); ++f) {
            VanishingResult v = detail::vanishing_from_table(table, f, index);
            AuditReport r{VanishingQuery{delta, sigma, index, fields[f]}, n, idx.admissible(n), criterion,
                          v.vanishes, false, v.witness, std::move(v.per_pair)};
            r.agree = r.criterion_verdict == r.cohomology_verdict;
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Criterion at level n against vanishing of H^{d-n+1}_J, once per field.
[[nodiscard]] inline std::vector<AuditReport> audit_equivalence(const SimplicialComplex& delta,
                                                                const SimplicialComplex& sigma, int n,
                                                                const std::vector<FieldSpec>& fields) {
    return audit_levels(delta, sigma, {n}, fields);
}

}  // namespace srlc
