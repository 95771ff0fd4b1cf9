#pragma once

#include <cstdint>
#include <string>

#include "srlc/errors.hpp"

namespace srlc {

/// Exact coefficient field: the rationals, or F_p for a prime p < 2^31.
class FieldSpec {
public:
    enum class Kind { rationals, prime_field };

    static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

    static FieldSpec prime(std::uint32_t p) {
        if (!is_prime(p) || p >= (1U << 31)) {
            throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
        }
        return FieldSpec(Kind::prime_field, p);
    }

    /// Accepts Q, F2, F3, Fp:<p> (also F<p> for any prime).
    static FieldSpec parse(const std::string& text) {
        if (text == "Q" || text == "QQ") return rationals();
        std::string digits;
        if (text.rfind("Fp:", 0) == 0) {
            digits = text.substr(3);
        } else if (text.size() > 1 && text[0] == 'F') {
            digits = text.substr(1);
        } else {
            throw InputError("unknown field '" + text + "'");
        }
        if (digits.empty() || digits.size() > 10 ||
            digits.find_first_not_of("0123456789") != std::string::npos) {
            throw InputError("unknown field '" + text + "'");
        }
        const auto p = std::stoull(digits);
        if (p > UINT32_MAX) throw InputError("field characteristic too large: " + digits);
        return prime(static_cast<std::uint32_t>(p));
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::uint32_t characteristic() const { return characteristic_; }
    [[nodiscard]] bool is_rationals() const { return kind_ == Kind::rationals; }

    /// Q, F2, F3, ...
    [[nodiscard]] std::string name() const {
        return is_rationals() ? "Q" : "F" + std::to_string(characteristic_);
    }

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), characteristic_(p) {}

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) return false;
        }
        return true;
    }

    Kind kind_;
    std::uint32_t characteristic_;
};

}  // namespace srlc
