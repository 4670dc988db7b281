#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lrc/error.hpp"

namespace lrc {

/// Field elements are canonical integers in [0, q). Elements of GF(2^m) use
/// the polynomial-coefficient encoding: bit j holds the coefficient of x^j.
using Elem = std::uint32_t;

/// GF(p) for prime p < 2^31, or GF(2^m) for 2 <= m <= 16.
///
/// A Field is a cheap value type; extension-field log/exp tables are shared
/// between copies and never mutated after construction.
class Field {
public:
    /// Builds GF(q). `modulus` lists the coefficients of the reducing
    /// polynomial from x^0 up to x^m and must be empty for prime q. For
    /// q = 2^m an empty modulus selects the default (lexicographically
    /// smallest irreducible) polynomial of degree m.
    static Field make(std::uint64_t q, const std::vector<int>& modulus = {});

    /// Lexicographically smallest irreducible polynomial of degree m over
    /// GF(2), as a bitmask including the x^m term. Valid for 2 <= m <= 16.
    static std::uint32_t default_modulus(int m);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    int degree() const noexcept { return m_; }
    bool is_prime() const noexcept { return m_ == 1; }

    /// Coefficients x^0..x^m of the reducing polynomial; empty for prime fields.
    std::vector<int> modulus() const;
    std::uint32_t modulus_mask() const noexcept { return poly_; }

    /// Smallest generator of the multiplicative group.
    Elem primitive_element() const noexcept { return generator_; }

    bool contains(std::uint64_t a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (m_ > 1) return a ^ b;
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Elem sub(Elem a, Elem b) const noexcept {
        if (m_ > 1) return a ^ b;
        return a >= b ? a - b : a + (q_ - b);
    }
    Elem neg(Elem a) const noexcept {
        if (m_ > 1 || a == 0) return a;
        return q_ - a;
    }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (m_ == 1) {
            return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % q_);
        }
        return tables_->exp[tables_->log[a] + tables_->log[b]];
    }
    /// Multiplicative inverse; throws InvalidArgument for zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Reduces a signed integer into the prime field. Binary extension fields
    /// only accept values already in range.
    Elem from_int(std::int64_t v) const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.q_ == b.q_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return !(a == b); }

private:
    struct Tables {
        std::vector<Elem> exp;  // length 2(q-1)
        std::vector<std::uint32_t> log;
    };

    Field() = default;

    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    int m_ = 0;
    std::uint32_t poly_ = 0;
    Elem generator_ = 0;
    std::shared_ptr<const Tables> tables_;
};

/// True when poly (bitmask, degree = highest set bit) is irreducible over GF(2).
bool is_irreducible_gf2(std::uint32_t poly);

bool is_prime(std::uint64_t n);

}  // namespace lrc
