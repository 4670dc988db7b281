#include "lrc/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "combinations.hpp"
#include "odometer.hpp"

namespace lrc {

using detail::DigitWalk;
using detail::Odometer;

LinearCode LinearCode::from_generator(Matrix g, const Field& f, std::optional<Coords> systematic) {
    if (!g.fits(f)) fail(ErrorCode::InvalidArgument, "generator has entries outside " + f.name());
    if (g.rows() > g.cols()) fail(ErrorCode::RankDeficient, "generator has more rows than columns");

    // Report rows that do not raise the rank of the rows before them.
    Matrix prefix(0, g.cols());
    std::string dependent;
    std::size_t current = 0;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        prefix.append_row(g.row(r));
        const std::size_t next = rank(prefix, f);
        if (next == current) dependent += (dependent.empty() ? "" : ",") + std::to_string(r);
        current = next;
    }
    if (!dependent.empty()) fail(ErrorCode::RankDeficient, "generator rows [" + dependent + "] are linearly dependent");

    Coords sys;
    const std::size_t k = g.rows();
    if (systematic) {
        if (systematic->size() != k) fail(ErrorCode::InvalidArgument, "systematic column count differs from k");
        for (std::size_t i = 0; i < k; ++i) {
            if ((*systematic)[i] >= g.cols()) fail(ErrorCode::InvalidArgument, "systematic column out of range");
            for (std::size_t r = 0; r < k; ++r) {
                if (g(r, (*systematic)[i]) != (r == i ? 1u : 0u)) {
                    fail(ErrorCode::InvalidArgument, "declared systematic columns do not form an identity");
                }
            }
        }
        sys = *systematic;
    } else if (k > 0) {
        bool leading = true;
        for (std::size_t r = 0; r < k && leading; ++r)
            for (std::size_t c = 0; c < k && leading; ++c) leading = g(r, c) == (r == c ? 1u : 0u);
        if (leading) {
            sys.resize(k);
            for (std::size_t i = 0; i < k; ++i) sys[i] = i;
        }
    }
    return LinearCode(std::move(g), f, std::move(sys));
}

LinearCode LinearCode::zero(std::size_t n, const Field& f) { return LinearCode(Matrix(0, n), f, {}); }

Vector LinearCode::encode(std::span<const Elem> message) const {
    if (message.size() != k()) {
        fail(ErrorCode::LengthMismatch, "message has length " + std::to_string(message.size()) + ", expected " +
                                            std::to_string(k()));
    }
    for (Elem e : message)
        if (!field_.contains(e)) fail(ErrorCode::InvalidArgument, "message symbol outside " + field_.name());
    return vec_mat(message, generator_, field_);
}

bool LinearCode::contains(std::span<const Elem> word) const {
    if (word.size() != n()) return false;
    const Matrix h = check_matrix();
    const Vector s = mat_vec(h, word, field_);
    return std::all_of(s.begin(), s.end(), [](Elem e) { return e == 0; });
}

std::vector<std::size_t> complement(const Coords& s, std::size_t n) {
    std::vector<bool> in(n, false);
    for (auto i : s) {
        if (i >= n) fail(ErrorCode::InvalidArgument, "coordinate " + std::to_string(i) + " out of range");
        in[i] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

LinearCode dual_code(const LinearCode& c) {
    Matrix h = c.check_matrix();
    if (h.rows() == 0) return LinearCode::zero(c.n(), c.field());
    return LinearCode::from_generator(std::move(h), c.field());
}

namespace {

void check_support(const Coords& s, std::size_t n) {
    if (s.empty()) fail(ErrorCode::EmptySupport, "coordinate set is empty");
    std::vector<bool> seen(n, false);
    for (auto i : s) {
        if (i >= n) fail(ErrorCode::InvalidArgument, "coordinate " + std::to_string(i) + " out of range");
        if (seen[i]) fail(ErrorCode::InvalidArgument, "coordinate " + std::to_string(i) + " repeated");
        seen[i] = true;
    }
}

LinearCode from_rows_basis(const Matrix& rows, const Field& f, std::size_t n) {
    Matrix b = row_basis(rows, f);
    if (b.rows() == 0) return LinearCode::zero(n, f);
    return LinearCode::from_generator(std::move(b), f);
}

}  // namespace

LinearCode puncture(const LinearCode& c, const Coords& s) {
    check_support(s, c.n());
    return from_rows_basis(c.generator().select_columns(s), c.field(), s.size());
}

LinearCode shorten(const LinearCode& c, const Coords& s) {
    check_support(s, c.n());
    const Field& f = c.field();
    const auto outside = complement(s, c.n());
    if (c.k() == 0) return LinearCode::zero(s.size(), f);
    Matrix messages;
    if (outside.empty()) {
        messages = Matrix::identity(c.k());
    } else {
        // m with m * G_outside = 0
        messages = null_space_basis(c.generator().select_columns(outside).transpose(), f);
    }
    if (messages.rows() == 0) return LinearCode::zero(s.size(), f);
    return from_rows_basis(multiply(messages, c.generator(), f).select_columns(s), f, s.size());
}

namespace {

struct Best {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    Vector word;
};

Best scan_top_range(const LinearCode& c, std::uint64_t begin, std::uint64_t end) {
    const Field& f = c.field();
    const Matrix& g = c.generator();
    DigitWalk walk(f);
    Odometer od(f, c.n(), 1);
    for (std::size_t r = 1; r < c.k(); ++r) od.add_digit(0, g.row(r));
    Best best;
    Vector base(c.n());
    for (std::uint64_t t = begin; t < end; ++t) {
        const Elem v = walk.value_at(t);
        for (std::size_t j = 0; j < c.n(); ++j) base[j] = f.mul(v, g(0, j));
        od.set_base(0, base);
        od.run([&] {
            const auto word = od.value(0);
            const std::size_t w = hamming_weight(word);
            if (w > 0 && w < best.weight) {
                best.weight = w;
                best.word.assign(word.begin(), word.end());
            }
        });
    }
    return best;
}

Best scan_codewords(const LinearCode& c, const Limits& limits) {
    const std::uint64_t q = c.field().order();
    const std::uint64_t total = detail::saturating_pow(q, c.k());
    if (total > limits.codeword_budget) {
        fail(ErrorCode::BudgetExceeded, "enumerating " + std::to_string(q) + "^" + std::to_string(c.k()) +
                                            " codewords exceeds the budget of " +
                                            std::to_string(limits.codeword_budget));
    }
    const std::uint64_t workers = std::clamp<std::uint64_t>(limits.threads, 1, q);
    if (workers == 1) return scan_top_range(c, 0, q);

    std::vector<Best> parts(workers);
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t b = q * w / workers;
        const std::uint64_t e = q * (w + 1) / workers;
        pool.emplace_back([&, w, b, e] { parts[w] = scan_top_range(c, b, e); });
    }
    for (auto& t : pool) t.join();
    Best best;
    for (auto& p : parts)
        if (p.weight < best.weight) best = std::move(p);
    return best;
}

}  // namespace

std::size_t min_distance(const LinearCode& c, const Limits& limits) {
    if (c.k() == 0) return c.n() + 1;
    return scan_codewords(c, limits).weight;
}

Vector min_weight_codeword(const LinearCode& c, const Limits& limits) {
    if (c.k() == 0) fail(ErrorCode::InvalidArgument, "the zero code has no nonzero codeword");
    return scan_codewords(c, limits).word;
}

namespace {

/// Largest |Z| with rank(cols_Z) <= rho, with a witness, via closures of
/// independent rho-subsets.
std::pair<std::size_t, Coords> max_flat(const Matrix& g, std::size_t rho, const Field& f, std::uint64_t budget) {
    const std::size_t n = g.cols();
    const std::size_t full = rank(g, f);
    if (rho >= full) {
        Coords all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return {n, all};
    }
    if (detail::binomial(n, rho) > budget) {
        fail(ErrorCode::BudgetExceeded, "flat enumeration over C(" + std::to_string(n) + "," + std::to_string(rho) +
                                            ") column subsets exceeds the budget");
    }
    std::size_t best = 0;
    Coords witness;
    bool have = false;
    detail::for_each_combination(n, rho, [&](const Coords& x) {
        Matrix gx = g.select_columns(x);
        if (rank(gx, f) != rho) return true;
        // Annihilator rows a with a * g_x = 0; column j lies in span(g_x) iff a * g_j = 0.
        const Matrix ann = null_space_basis(gx.transpose(), f);
        Coords closure;
        for (std::size_t j = 0; j < n; ++j) {
            bool inside = true;
            for (std::size_t r = 0; r < ann.rows() && inside; ++r) {
                Elem s = 0;
                for (std::size_t i = 0; i < g.rows(); ++i) s = f.add(s, f.mul(ann(r, i), g(i, j)));
                inside = s == 0;
            }
            if (inside) closure.push_back(j);
        }
        if (!have || closure.size() > best) {
            best = closure.size();
            witness = std::move(closure);
            have = true;
        }
        return true;
    });
    return {best, witness};
}

}  // namespace

std::pair<std::size_t, Coords> max_rank_deficient_set(const Matrix& g, std::size_t rho, const Field& f,
                                                      std::uint64_t budget) {
    return max_flat(g, rho, f, budget);
}

std::size_t punctured_distance(const LinearCode& c, const Coords& s) {
    check_support(s, c.n());
    const Matrix gs = c.generator().select_columns(s);
    const std::size_t rho = rank(gs, c.field());
    if (rho == 0) return s.size() + 1;
    return s.size() - max_flat(gs, rho - 1, c.field(), std::numeric_limits<std::uint64_t>::max()).first;
}

const char* to_string(HierarchyRoute r) {
    switch (r) {
        case HierarchyRoute::direct: return "direct";
        case HierarchyRoute::dual_derived: return "dual_derived";
        case HierarchyRoute::flats: return "flats";
    }
    return "unknown";
}

std::vector<std::size_t> gap_numbers(const std::vector<std::size_t>& dims, std::size_t n) {
    std::vector<bool> is_dim(n + 1, false);
    for (auto d : dims)
        if (d >= 1 && d <= n) is_dim[d] = true;
    std::vector<std::size_t> gaps;
    for (std::size_t v = 1; v <= n; ++v)
        if (!is_dim[v]) gaps.push_back(v);
    return gaps;
}

std::uint64_t gaussian_binomial(std::uint64_t k, std::uint64_t i, std::uint64_t q) {
    if (i > k) return 0;
    using u128 = unsigned __int128;
    const u128 cap = std::numeric_limits<std::uint64_t>::max();
    u128 result = 1;
    for (std::uint64_t j = 0; j < i; ++j) {
        const std::uint64_t num_pow = detail::saturating_pow(q, k - j);
        const std::uint64_t den_pow = detail::saturating_pow(q, j + 1);
        if (num_pow == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(cap);
        result = result * (num_pow - 1);
        if (result > cap * cap / 4) return static_cast<std::uint64_t>(cap);
        result /= (den_pow - 1);
        if (result > cap) return static_cast<std::uint64_t>(cap);
    }
    return static_cast<std::uint64_t>(result);
}

namespace {

bool direct_fits(const LinearCode& c, const Limits& limits) {
    for (std::size_t i = 1; i <= c.k(); ++i)
        if (gaussian_binomial(c.k(), i, c.field().order()) > limits.subspace_budget) return false;
    return c.n() <= 64;
}

std::uint64_t flats_cost(const LinearCode& c) {
    std::uint64_t total = 0;
    for (std::size_t rho = 0; rho < c.k(); ++rho) {
        const std::uint64_t b = detail::binomial(c.n(), rho);
        if (b > std::numeric_limits<std::uint64_t>::max() - total) return std::numeric_limits<std::uint64_t>::max();
        total += b;
    }
    return total;
}

WeightHierarchy finish(std::vector<std::size_t> dims, std::size_t n, HierarchyRoute route) {
    WeightHierarchy h;
    h.gaps = gap_numbers(dims, n);
    h.dims = std::move(dims);
    h.route = route;
    return h;
}

}  // namespace

WeightHierarchy weight_hierarchy_direct(const LinearCode& c, const Limits& limits) {
    const Field& f = c.field();
    const std::size_t k = c.k();
    const std::size_t n = c.n();
    if (n > 64) fail(ErrorCode::InvalidArgument, "direct hierarchy enumeration supports n <= 64");
    const Matrix& g = c.generator();
    std::vector<std::size_t> dims;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::uint64_t count = gaussian_binomial(k, i, f.order());
        if (count > limits.subspace_budget) {
            fail(ErrorCode::BudgetExceeded, "level " + std::to_string(i) + " has " + std::to_string(count) +
                                                " subcodes, above the budget of " +
                                                std::to_string(limits.subspace_budget));
        }
        std::size_t best = n;
        detail::for_each_combination(k, i, [&](const Coords& pivots) {
            Odometer od(f, n, i);
            od.track_masks(true);
            std::vector<bool> is_pivot(k, false);
            for (auto p : pivots) is_pivot[p] = true;
            for (std::size_t j = 0; j < i; ++j) {
                od.set_base(j, g.row(pivots[j]));
                for (std::size_t l = pivots[j] + 1; l < k; ++l)
                    if (!is_pivot[l]) od.add_digit(j, g.row(l));
            }
            od.run([&] {
                std::uint64_t mask = 0;
                for (std::size_t j = 0; j < i; ++j) mask |= od.support(j);
                best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
            });
            return true;
        });
        dims.push_back(best);
    }
    return finish(std::move(dims), n, HierarchyRoute::direct);
}

WeightHierarchy weight_hierarchy_flats(const LinearCode& c, const Limits& limits) {
    if (flats_cost(c) > limits.subset_budget) {
        fail(ErrorCode::BudgetExceeded, "flat enumeration for the weight hierarchy exceeds the subset budget");
    }
    std::vector<std::size_t> dims;
    for (std::size_t i = 1; i <= c.k(); ++i) {
        const auto [size, witness] = max_flat(c.generator(), c.k() - i, c.field(), limits.subset_budget);
        dims.push_back(c.n() - size);
    }
    return finish(std::move(dims), c.n(), HierarchyRoute::flats);
}

WeightHierarchy weight_hierarchy(const LinearCode& c, const Limits& limits) {
    if (direct_fits(c, limits)) return weight_hierarchy_direct(c, limits);
    const LinearCode d = dual_code(c);
    if (direct_fits(d, limits)) {
        auto h = wei_dual_hierarchy(weight_hierarchy_direct(d, limits), c.n(), c.k());
        h.route = HierarchyRoute::dual_derived;
        return h;
    }
    if (flats_cost(c) <= limits.subset_budget) return weight_hierarchy_flats(c, limits);
    if (flats_cost(d) <= limits.subset_budget) {
        auto h = wei_dual_hierarchy(weight_hierarchy_flats(d, limits), c.n(), c.k());
        h.route = HierarchyRoute::dual_derived;
        return h;
    }
    fail(ErrorCode::BudgetExceeded, "weight hierarchy is out of reach for every enumeration route");
}

WeightHierarchy wei_dual_hierarchy(const WeightHierarchy& dual, std::size_t n, std::size_t k) {
    if (k > n) fail(ErrorCode::InvalidArgument, "k exceeds n");
    const auto& dd = dual.dims;
    if (dd.size() != n - k) fail(ErrorCode::InvalidArgument, "dual hierarchy must have n - k entries");
    for (std::size_t j = 0; j < dd.size(); ++j) {
        if (dd[j] < 1 || dd[j] > n) fail(ErrorCode::InvalidArgument, "dual weight out of range");
        if (j > 0 && dd[j] <= dd[j - 1]) fail(ErrorCode::InvalidArgument, "dual hierarchy not strictly increasing");
    }

    std::vector<bool> taken(n + 1, false);
    for (auto d : dd) taken[n + 1 - d] = true;
    std::vector<std::size_t> dims;
    for (std::size_t v = 1; v <= n; ++v)
        if (!taken[v]) dims.push_back(v);
    return finish(std::move(dims), n, HierarchyRoute::dual_derived);
}

}  // namespace lrc
