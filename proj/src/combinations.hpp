#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "lrc/matrix.hpp"

namespace lrc::detail {

/// C(n, r), saturating.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

/// Visits every r-subset of {0..n-1} in lexicographic order until fn
/// returns false. Returns false when stopped early.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
    if (r > n) return true;
    Coords idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        if (!fn(static_cast<const Coords&>(idx))) return false;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace lrc::detail
