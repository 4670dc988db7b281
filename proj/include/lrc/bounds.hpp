#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace lrc {

/// Exact rational number in lowest terms with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    std::string str() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator-(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);

std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Upper bound for codes whose information symbols have locality r:
/// d <= n - k - ceil(k/r) + 2.
std::int64_t gopalan_bound(std::int64_t n, std::int64_t k, std::int64_t r);

/// Upper bound for (r, delta) information locality:
/// d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1). Rejects delta < 2.
std::int64_t locality_bound(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t delta);

/// Locality bound specialised to the serial concatenation of an inner
/// [n1, k1, d1] code with an outer [n2, k2] code (r = n1 - d1 + 1, delta = d1).
std::int64_t concat_bound(std::int64_t n1, std::int64_t k1, std::int64_t d1, std::int64_t n2, std::int64_t k2);

/// Classical (d1 d2, n1 d2) bracket for concatenated codes.
std::pair<std::int64_t, std::int64_t> concat_classical_bounds(std::int64_t n1, std::int64_t d1, std::int64_t d2);

/// Relative-distance ceiling 1 - R / R1 for concatenations of MDS components.
Rational asymptotic_concat_bound(const Rational& rate, const Rational& inner_rate);

struct BoundReport {
    std::string name;
    std::optional<std::int64_t> value;
    std::optional<Rational> ratio;
    std::optional<std::pair<std::int64_t, std::int64_t>> range;
    std::map<std::string, std::string> inputs;
    std::optional<bool> tight;
};

}  // namespace lrc
