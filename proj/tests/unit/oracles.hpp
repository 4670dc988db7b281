#pragma once

// Slow, obviously-correct reference computations used as test oracles.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/rng.hpp"

namespace oracle {

using lrc::Coords;
using lrc::Elem;
using lrc::Field;
using lrc::LinearCode;
using lrc::Matrix;
using lrc::Vector;

/// Schoolbook carry-less product reduced by the modulus.
inline Elem gf2m_mul(Elem a, Elem b, std::uint32_t poly, int m) {
    std::uint64_t acc = 0;
    for (int i = 0; i < m; ++i)
        if ((b >> i) & 1u) acc ^= static_cast<std::uint64_t>(a) << i;
    for (int bit = 2 * m - 2; bit >= m; --bit)
        if ((acc >> bit) & 1u) acc ^= static_cast<std::uint64_t>(poly) << (bit - m);
    return static_cast<Elem>(acc);
}

inline void for_each_vector(std::size_t len, Elem q, const std::function<void(const Vector&)>& fn) {
    Vector v(len, 0);
    while (true) {
        fn(v);
        std::size_t i = 0;
        while (i < len && ++v[i] == q) v[i++] = 0;
        if (i == len) return;
    }
}

inline std::vector<Vector> codewords(const LinearCode& c) {
    std::vector<Vector> out;
    for_each_vector(c.k(), c.field().order(), [&](const Vector& m) { out.push_back(c.encode(m)); });
    return out;
}

inline std::size_t min_distance(const LinearCode& c) {
    std::size_t best = c.n() + 1;
    for (const auto& w : codewords(c)) {
        const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return x != 0; }));
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

/// Rank as log_q of the number of distinct vectors in the row span.
inline std::size_t span_rank(const Matrix& m, const Field& f) {
    std::set<Vector> span;
    for_each_vector(m.rows(), f.order(), [&](const Vector& coeffs) {
        Vector v(m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = f.add(v[j], f.mul(coeffs[i], m(i, j)));
        span.insert(v);
    });
    std::size_t r = 0;
    for (std::size_t s = 1; s < span.size(); s *= f.order()) ++r;
    return r;
}

inline void for_each_subset(std::size_t n, const std::function<void(const Coords&)>& fn) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Coords s;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) s.push_back(i);
        fn(s);
    }
}

/// d_i = min{|T| : the codewords supported inside T form a space of dimension >= i};
/// that dimension is k - rank(G restricted to the complement of T).
inline std::vector<std::size_t> weight_hierarchy(const LinearCode& c) {
    std::vector<std::size_t> dims(c.k(), c.n() + 1);
    for_each_subset(c.n(), [&](const Coords& t) {
        const auto outside = lrc::complement(t, c.n());
        const std::size_t sub = c.k() - lrc::rank(c.generator().select_columns(outside), c.field());
        for (std::size_t i = 1; i <= sub; ++i) dims[i - 1] = std::min(dims[i - 1], t.size());
    });
    return dims;
}

inline Matrix random_matrix(lrc::Pcg32& rng, std::size_t rows, std::size_t cols, const Field& f) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.below(f.order());
    return m;
}

inline LinearCode random_code(lrc::Pcg32& rng, std::size_t n, std::size_t k, const Field& f) {
    while (true) {
        Matrix g = random_matrix(rng, k, n, f);
        if (lrc::rank(g, f) == k) return LinearCode::from_generator(g, f);
    }
}

}  // namespace oracle
