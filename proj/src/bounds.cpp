#include "lrc/bounds.hpp"

#include <numeric>

#include "lrc/error.hpp"

namespace lrc {

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) fail(ErrorCode::InvalidParams, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::make(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) fail(ErrorCode::InvalidParams, "division by zero");
    return Rational::make(a.num * b.den, a.den * b.num);
}

bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

namespace {

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InvalidParams, what);
}

}  // namespace

std::int64_t gopalan_bound(std::int64_t n, std::int64_t k, std::int64_t r) {
    require(1 <= r && r <= k && k <= n, "need 1 <= r <= k <= n");
    return n - k - ceil_div(k, r) + 2;
}

std::int64_t locality_bound(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t delta) {
    require(1 <= r && r <= k && k <= n, "need 1 <= r <= k <= n");
    require(delta >= 2, "need delta >= 2");
    return n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1);
}

std::int64_t concat_bound(std::int64_t n1, std::int64_t k1, std::int64_t d1, std::int64_t n2, std::int64_t k2) {
    require(1 <= k1 && k1 <= n1, "need 1 <= k1 <= n1");
    require(1 <= d1 && d1 <= n1, "need 1 <= d1 <= n1");
    require(1 <= k2 && k2 <= n2, "need 1 <= k2 <= n2");
    const std::int64_t r = n1 - d1 + 1;
    return n1 * n2 - k1 * k2 + 1 - (ceil_div(k1 * k2, r) - 1) * (d1 - 1);
}

std::pair<std::int64_t, std::int64_t> concat_classical_bounds(std::int64_t n1, std::int64_t d1, std::int64_t d2) {
    require(n1 > 0 && d1 > 0 && d2 > 0, "inputs must be positive");
    return {d1 * d2, n1 * d2};
}

Rational asymptotic_concat_bound(const Rational& rate, const Rational& inner_rate) {
    const Rational zero{0, 1};
    const Rational one{1, 1};
    require(zero < rate && rate <= inner_rate && inner_rate <= one, "need 0 < R <= R1 <= 1");
    return one - rate / inner_rate;
}

}  // namespace lrc
