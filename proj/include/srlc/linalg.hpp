#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srlc/field.hpp"

namespace srlc {

/// Column-major sparse integer matrix. Each column holds (row, value) entries
/// sorted by row with no explicit zeros.
struct SparseMatrix {
    using Entry = std::pair<std::uint32_t, std::int64_t>;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
        SparseMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
        for (std::size_t j = 0; j < m.cols; ++j) {
            for (std::size_t i = 0; i < m.rows; ++i) {
                if (dense[i][j] != 0) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), dense[i][j]);
            }
        }
        return m;
    }

    [[nodiscard]] std::vector<std::vector<std::int64_t>> to_dense() const {
        std::vector<std::vector<std::int64_t>> d(rows, std::vector<std::int64_t>(cols, 0));
        for (std::size_t j = 0; j < cols; ++j) {
            for (auto [i, v] : columns[j]) d[i][j] = v;
        }
        return d;
    }

    [[nodiscard]] std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns) n += c.size();
        return n;
    }
};

/// Exact integer product A·B (used for ∂∘∂ checks).
[[nodiscard]] inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows, b.cols);
    std::vector<std::int64_t> acc(a.rows, 0);
    for (std::size_t j = 0; j < b.cols; ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        for (auto [k, bv] : b.columns[j]) {
            for (auto [i, av] : a.columns[k]) acc[i] += av * bv;
        }
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (acc[i] != 0) out.columns[j].emplace_back(static_cast<std::uint32_t>(i), acc[i]);
        }
    }
    return out;
}

namespace detail {

/// Column echelon reduction keyed on each column's first (lowest-row) entry.
/// `Reduce(col, pivot)` must cancel the leading entry of `col` against `pivot`.
template <class Value, class Reduce>
std::size_t echelon_rank(std::vector<std::vector<std::pair<std::uint32_t, Value>>> columns, std::size_t rows,
                         Reduce reduce) {
    constexpr std::uint32_t kNone = UINT32_MAX;
    std::vector<std::uint32_t> pivot_for_row(rows, kNone);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        while (!col.empty()) {
            const std::uint32_t lead = col.front().first;
            const std::uint32_t p = pivot_for_row[lead];
            if (p == kNone) {
                pivot_for_row[lead] = static_cast<std::uint32_t>(j);
                ++rank;
                break;
            }
            col = reduce(col, columns[p]);
        }
    }
    return rank;
}

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2) mod p
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

struct IntegerOverflow {};

/// int64 arithmetic that reports overflow instead of wrapping.
struct CheckedInt64 {
    using value_type = std::int64_t;
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow{};
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw IntegerOverflow{};
        return r;
    }
    static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
    static bool negative(std::int64_t a) { return a < 0; }
};

struct BigInt {
    using value_type = boost::multiprecision::cpp_int;
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type sub(const value_type& a, const value_type& b) { return a - b; }
    static value_type gcd(const value_type& a, const value_type& b) { return boost::multiprecision::gcd(a, b); }
    static bool negative(const value_type& a) { return a < 0; }
};

/// Fraction-free rank over ℚ: col ← p_lead·col − c_lead·pivot, then divide
/// out the content so entries stay primitive.
template <class Arith>
std::size_t rational_rank_with(const SparseMatrix& m) {
    using Int = typename Arith::value_type;
    using Column = std::vector<std::pair<std::uint32_t, Int>>;
    std::vector<Column> columns(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        for (auto [i, v] : m.columns[j]) columns[j].emplace_back(i, Int(v));
    }
    auto reduce = [](const Column& col, const Column& pivot) {
        const Int c = col.front().second;
        const Int p = pivot.front().second;
        Column out;
        out.reserve(col.size() + pivot.size());
        std::size_t a = 1;
        std::size_t b = 1;
        Int content = 0;
        auto push = [&](std::uint32_t row, Int value) {
            if (value != 0) {
                content = Arith::gcd(content, value);
                out.emplace_back(row, std::move(value));
            }
        };
        while (a < col.size() || b < pivot.size()) {
            if (b == pivot.size() || (a < col.size() && col[a].first < pivot[b].first)) {
                push(col[a].first, Arith::mul(p, col[a].second));
                ++a;
            } else if (a == col.size() || pivot[b].first < col[a].first) {
                push(pivot[b].first, Arith::sub(Int(0), Arith::mul(c, pivot[b].second)));
                ++b;
            } else {
                push(col[a].first, Arith::sub(Arith::mul(p, col[a].second), Arith::mul(c, pivot[b].second)));
                ++a;
                ++b;
            }
        }
        if (Arith::negative(content)) content = Int(0) - content;
        if (content > 1) {
            for (auto& e : out) e.second /= content;
        }
        return out;
    };
    return echelon_rank(std::move(columns), m.rows, reduce);
}

}  // namespace detail

/// Rank over F_p by modular elimination.
[[nodiscard]] inline std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
    using Column = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
    std::vector<Column> columns(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        for (auto [i, v] : m.columns[j]) {
            std::int64_t r = v % static_cast<std::int64_t>(p);
            if (r < 0) r += p;
            if (r != 0) columns[j].emplace_back(i, static_cast<std::uint32_t>(r));
        }
    }
    auto reduce = [p](const Column& col, const Column& pivot) {
        // col ← col − (c / piv) · pivot
        const std::uint64_t factor =
            std::uint64_t{col.front().second} * detail::mod_inverse(pivot.front().second, p) % p;
        Column out;
        out.reserve(col.size() + pivot.size());
        std::size_t a = 1;
        std::size_t b = 1;
        while (a < col.size() || b < pivot.size()) {
            if (b == pivot.size() || (a < col.size() && col[a].first < pivot[b].first)) {
                out.push_back(col[a++]);
            } else {
                const std::uint64_t sub = factor * pivot[b].second % p;
                std::uint64_t value = p - sub;
                std::uint32_t row = pivot[b].first;
                if (a < col.size() && col[a].first == row) {
                    value += col[a].second;
                    ++a;
                }
                ++b;
                value %= p;
                if (value != 0) out.emplace_back(row, static_cast<std::uint32_t>(value));
            }
        }
        return out;
    };
    return detail::echelon_rank(std::move(columns), m.rows, reduce);
}

/// Exact rank over ℚ. Runs in checked int64 and reruns with arbitrary
/// precision if any intermediate value would overflow.
[[nodiscard]] inline std::size_t rank_rational(const SparseMatrix& m) {
    try {
        return detail::rational_rank_with<detail::CheckedInt64>(m);
    } catch (const detail::IntegerOverflow&) {
        return detail::rational_rank_with<detail::BigInt>(m);
    }
}

[[nodiscard]] inline std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
    return field.is_rationals() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

}  // namespace srlc
