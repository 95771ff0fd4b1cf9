#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "srlc/errors.hpp"

namespace srlc {

/// Largest supported ground set. Vertex v is stored in bit v-1.
inline constexpr int kMaxVertices = 64;

/// A finite set of vertex labels drawn from {1..64}, stored as a bitmask.
///
/// Iteration visits labels in increasing order. Two orders are provided:
/// `lex_less` compares the sorted label sequences lexicographically, and
/// `canonical_less` sorts by cardinality first and lexicographically within a
/// cardinality. The canonical order is the one used for face lists.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<int> labels) {
        for (int v : labels) insert(v);
    }

    static VertexSet from_labels(const std::vector<int>& labels) {
        VertexSet s;
        for (int v : labels) s.insert(v);
        return s;
    }

    /// {1..n}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    void insert(int v) {
        check_label(v);
        bits_ |= std::uint64_t{1} << (v - 1);
    }
    void erase(int v) {
        check_label(v);
        bits_ &= ~(std::uint64_t{1} << (v - 1));
    }

    [[nodiscard]] constexpr bool contains(int v) const {
        return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U) != 0;
    }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    /// Simplex dimension: a set of q+1 vertices has dimension q.
    [[nodiscard]] constexpr int dimension() const { return size() - 1; }
    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }

    /// Smallest / largest label; 0 when empty.
    [[nodiscard]] constexpr int min_label() const {
        return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
    }
    [[nodiscard]] constexpr int max_label() const {
        return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
    }

    [[nodiscard]] constexpr bool is_subset_of(VertexSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    [[nodiscard]] constexpr bool intersects(VertexSet other) const {
        return (bits_ & other.bits_) != 0;
    }

    [[nodiscard]] constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    [[nodiscard]] constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    [[nodiscard]] constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    [[nodiscard]] VertexSet with(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }
    [[nodiscard]] VertexSet without(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    constexpr bool operator==(const VertexSet&) const = default;

    [[nodiscard]] std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        }
        s += '}';
        return s;
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    [[nodiscard]] constexpr iterator begin() const { return iterator(bits_); }
    [[nodiscard]] constexpr iterator end() const { return iterator(0); }

private:
    static void check_label(int v) {
        if (v < 1 || v > kMaxVertices) {
            throw InputError("vertex label " + std::to_string(v) + " outside 1.." +
                             std::to_string(kMaxVertices));
        }
    }

    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted label sequences; a proper prefix sorts first.
[[nodiscard]] constexpr bool lex_less(VertexSet a, VertexSet b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
}

/// Cardinality first, then lexicographic.
[[nodiscard]] constexpr bool canonical_less(VertexSet a, VertexSet b) {
    const int sa = a.size();
    const int sb = b.size();
    if (sa != sb) return sa < sb;
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    // Equal cardinality: the first differing position holds the lowest
    // differing label, and the set owning it is lexicographically smaller.
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return canonical_less(a, b); }
};

struct LexLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

using Face = VertexSet;

}  // namespace srlc

template <>
struct std::hash<srlc::VertexSet> {
    std::size_t operator()(srlc::VertexSet s) const noexcept {
        // splitmix64 finalizer
        std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};
