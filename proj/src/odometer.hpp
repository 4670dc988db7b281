#pragma once

// Internal: incremental enumeration of all F-linear combinations of a set of
// direction vectors. Each message digit walks through the q field values in an
// order where consecutive values differ by a fixed small set of steps (always +1
// in GF(p); a single-bit flip in GF(2^m), i.e. a reflected Gray code), so every
// visit costs one vector addition amortized.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "lrc/field.hpp"

namespace lrc::detail {

class DigitWalk {
public:
    explicit DigitWalk(const Field& f) : q_(f.order()), m_(f.degree()) {}

    std::uint64_t order() const noexcept { return q_; }
    std::size_t step_count() const noexcept { return m_ == 1 ? 1 : static_cast<std::size_t>(m_); }
    Elem step_value(std::size_t s) const noexcept { return m_ == 1 ? 1 : (Elem{1} << s); }

    /// Field value at position t of the walk.
    Elem value_at(std::uint64_t t) const noexcept {
        return m_ == 1 ? static_cast<Elem>(t) : static_cast<Elem>(t ^ (t >> 1));
    }
    /// Index of the step moving position t to t + 1 (mod q).
    std::size_t step_from(std::uint64_t t) const noexcept {
        if (m_ == 1) return 0;
        if (t + 1 == q_) return static_cast<std::size_t>(m_ - 1);
        return static_cast<std::size_t>(std::countr_zero(t + 1));
    }

private:
    std::uint64_t q_;
    int m_;
};

/// Enumerates base + sum_d value(t_d) * dir_d over all digit positions, where
/// each digit feeds one of several accumulators. Support masks require n <= 64.
class Odometer {
public:
    using Vector = std::vector<Elem>;

    Odometer(const Field& f, std::size_t length, std::size_t accumulators)
        : field_(f), walk_(f), n_(length), acc_(accumulators, Vector(length, 0)), mask_(accumulators, 0) {}

    void set_base(std::size_t acc, std::span<const Elem> v) {
        acc_[acc].assign(v.begin(), v.end());
        mask_[acc] = support_of(acc_[acc]);
    }

    void add_digit(std::size_t acc, std::span<const Elem> direction) {
        Digit d{acc, 0, {}};
        for (std::size_t s = 0; s < walk_.step_count(); ++s) {
            Vector step(n_);
            const Elem c = walk_.step_value(s);
            for (std::size_t j = 0; j < n_; ++j) step[j] = field_.mul(c, direction[j]);
            d.steps.push_back(std::move(step));
        }
        digits_.push_back(std::move(d));
    }

    std::span<const Elem> value(std::size_t acc) const noexcept { return acc_[acc]; }
    std::uint64_t support(std::size_t acc) const noexcept { return mask_[acc]; }
    std::size_t accumulators() const noexcept { return acc_.size(); }

    /// Calls visit() once per digit assignment, starting from all digits at
    /// position zero. State returns to the base afterwards.
    template <class Visit>
    void run(Visit&& visit) {
        for (auto& d : digits_) d.position = 0;
        while (true) {
            visit();
            std::size_t i = 0;
            for (; i < digits_.size(); ++i) {
                Digit& d = digits_[i];
                const auto& step = d.steps[walk_.step_from(d.position)];
                Vector& a = acc_[d.acc];
                for (std::size_t j = 0; j < n_; ++j) a[j] = field_.add(a[j], step[j]);
                if (track_masks_) mask_[d.acc] = support_of(a);
                if (++d.position < walk_.order()) break;
                d.position = 0;
            }
            if (i == digits_.size()) return;
        }
    }

    void track_masks(bool on) noexcept { track_masks_ = on; }

private:
    struct Digit {
        std::size_t acc;
        std::uint64_t position;
        std::vector<Vector> steps;
    };

    std::uint64_t support_of(const Vector& v) const noexcept {
        std::uint64_t m = 0;
        for (std::size_t j = 0; j < v.size() && j < 64; ++j)
            if (v[j] != 0) m |= std::uint64_t{1} << j;
        return m;
    }

    const Field& field_;
    DigitWalk walk_;
    std::size_t n_;
    std::vector<Vector> acc_;
    std::vector<std::uint64_t> mask_;
    std::vector<Digit> digits_;
    bool track_masks_ = false;
};

/// q^e saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / q) return UINT64_MAX;
        r *= q;
    }
    return r;
}

}  // namespace lrc::detail
