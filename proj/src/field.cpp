#include "lrc/field.hpp"

#include <array>
#include <bit>

namespace lrc {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::EmptySupport: return "EmptySupport";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DeltaExceedsD: return "DeltaExceedsD";
        case ErrorCode::InfeasibleDelta: return "InfeasibleDelta";
        case ErrorCode::InfeasibleParams: return "InfeasibleParams";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
        case ErrorCode::TooManyLocalErasures: return "TooManyLocalErasures";
        case ErrorCode::NoGroup: return "NoGroup";
        case ErrorCode::InvalidProfile: return "InvalidProfile";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

// Smallest irreducible polynomial of each degree, indexed by degree.
constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,      0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,   0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

int poly_degree(std::uint32_t p) { return 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = poly_degree(b);
    while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t gf2_mul_slow(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int m) {
    std::uint32_t r = 0;
    while (b != 0) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << m)) a ^= poly;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

bool is_irreducible_gf2(std::uint32_t poly) {
    const int d = poly_degree(poly);
    if (d < 1) return false;
    for (std::uint32_t f = 2; poly_degree(f) <= d / 2; ++f) {
        if (poly_mod(poly, f) == 0) return false;
    }
    return true;
}

std::uint32_t Field::default_modulus(int m) {
    if (m < 2 || m > 16) fail(ErrorCode::NotPrimePower, "no default modulus for degree " + std::to_string(m));
    return kDefaultModuli[static_cast<std::size_t>(m)];
}

Field Field::make(std::uint64_t q, const std::vector<int>& modulus) {
    Field f;
    if (lrc::is_prime(q)) {
        if (q >= (1ull << 31)) fail(ErrorCode::NotPrimePower, "prime fields are limited to p < 2^31");
        if (!modulus.empty()) fail(ErrorCode::InvalidArgument, "prime fields take no modulus");
        f.q_ = static_cast<std::uint32_t>(q);
        f.p_ = f.q_;
        f.m_ = 1;
        const auto factors = prime_factors(q - 1);
        for (Elem g = 1; g < f.q_; ++g) {
            bool generates = true;
            for (auto pf : factors) {
                if (f.pow(g, (q - 1) / pf) == 1) {
                    generates = false;
                    break;
                }
            }
            if (generates) {
                f.generator_ = g;
                break;
            }
        }
        return f;
    }

    if (q < 4 || !std::has_single_bit(q) || q > (1ull << 16)) {
        fail(ErrorCode::NotPrimePower, "field order " + std::to_string(q) + " is not a supported prime power");
    }
    const int m = std::countr_zero(q);
    std::uint32_t poly = 0;
    if (modulus.empty()) {
        poly = default_modulus(m);
    } else {
        if (static_cast<int>(modulus.size()) != m + 1 || modulus.back() != 1) {
            fail(ErrorCode::InvalidArgument, "modulus must list " + std::to_string(m + 1) +
                                                 " coefficients with leading 1");
        }
        for (std::size_t i = 0; i < modulus.size(); ++i) {
            if (modulus[i] != 0 && modulus[i] != 1) fail(ErrorCode::InvalidArgument, "modulus coefficients must be 0 or 1");
            if (modulus[i]) poly |= 1u << i;
        }
    }
    if (!is_irreducible_gf2(poly)) fail(ErrorCode::ReducibleModulus, "modulus is reducible over GF(2)");

    f.q_ = static_cast<std::uint32_t>(q);
    f.p_ = 2;
    f.m_ = m;
    f.poly_ = poly;

    // The modulus need not be primitive, so search for a generator first.
    const auto factors = prime_factors(q - 1);
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = gf2_mul_slow(r, a, poly, m);
            a = gf2_mul_slow(a, a, poly, m);
            e >>= 1;
        }
        return r;
    };
    for (Elem g = 2; g < q; ++g) {
        bool generates = true;
        for (auto pf : factors) {
            if (slow_pow(g, (q - 1) / pf) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) {
            f.generator_ = g;
            break;
        }
    }

    auto tables = std::make_shared<Tables>();
    const std::uint32_t order = f.q_ - 1;
    tables->exp.resize(2 * static_cast<std::size_t>(order));
    tables->log.assign(f.q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        tables->exp[i] = x;
        tables->exp[i + order] = x;
        tables->log[x] = i;
        x = gf2_mul_slow(x, f.generator_, poly, m);
    }
    f.tables_ = std::move(tables);
    return f;
}

std::vector<int> Field::modulus() const {
    std::vector<int> out;
    if (m_ == 1) return out;
    for (int i = 0; i <= m_; ++i) out.push_back((poly_ >> i) & 1u);
    return out;
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail(ErrorCode::InvalidArgument, "zero has no inverse");
    if (m_ > 1) {
        const std::uint32_t order = q_ - 1;
        return tables_->exp[(order - tables_->log[a]) % order];
    }
    return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::from_int(std::int64_t v) const {
    if (m_ == 1) {
        std::int64_t r = v % static_cast<std::int64_t>(q_);
        if (r < 0) r += q_;
        return static_cast<Elem>(r);
    }
    if (v < 0 || v >= static_cast<std::int64_t>(q_)) {
        fail(ErrorCode::InvalidArgument, "value " + std::to_string(v) + " outside GF(" + std::to_string(q_) + ")");
    }
    return static_cast<Elem>(v);
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

}  // namespace lrc
