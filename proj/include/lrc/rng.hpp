#pragma once

#include <cstdint>

namespace lrc {

/// PCG32 (XSH-RR output over a 64-bit LCG).
///
/// Constants: multiplier 6364136223846793005, stream selector
/// 0xda3e39cb94b95bdb (increment = (stream << 1) | 1). Seeding follows the
/// reference pcg32_srandom_r: state = 0, step, state += seed, step.
class Pcg32 {
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ull;
    static constexpr std::uint64_t kDefaultStream = 0xda3e39cb94b95bdbull;

    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = kDefaultStream) : inc_((stream << 1u) | 1u) {
        next();
        state_ += seed;
        next();
    }

    std::uint32_t next() {
        const std::uint64_t old = state_;
        state_ = old * kMultiplier + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
    }

    /// Uniform in [0, bound) by rejection; bound must be nonzero.
    std::uint32_t below(std::uint32_t bound) {
        const std::uint32_t threshold = (0u - bound) % bound;
        while (true) {
            const std::uint32_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_;
};

}  // namespace lrc
