#include "lrc/locality.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "combinations.hpp"
#include "lrc/bounds.hpp"
#include "lrc/rng.hpp"

namespace lrc {

const char* to_string(LocalityMode m) { return m == LocalityMode::information ? "information" : "all_symbol"; }

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::not_found: return "not_found";
        case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "unknown";
}

const char* to_string(PositionStatus s) {
    switch (s) {
        case PositionStatus::pass: return "pass";
        case PositionStatus::fail: return "fail";
        case PositionStatus::precondition_violated: return "precondition_violated";
    }
    return "unknown";
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

GroupSearch symbol_locality(const LinearCode& c, std::size_t i, std::size_t r, std::size_t delta,
                            std::uint64_t budget) {
    if (i >= c.n()) fail(ErrorCode::InvalidArgument, "coordinate out of range");
    if (delta < 2 || r < 1) fail(ErrorCode::InvalidParams, "need r >= 1 and delta >= 2");
    GroupSearch out;
    const std::size_t max_size = std::min(r + delta - 1, c.n());
    Coords others;
    for (std::size_t j = 0; j < c.n(); ++j)
        if (j != i) others.push_back(j);

    for (std::size_t size = 1; size <= max_size; ++size) {
        const bool done = !detail::for_each_combination(others.size(), size - 1, [&](const Coords& pick) {
            if (out.candidates_checked >= budget) {
                out.status = SearchStatus::budget_exceeded;
                return false;
            }
            ++out.candidates_checked;
            Coords s;
            s.reserve(size);
            for (auto p : pick) s.push_back(others[p]);
            s.insert(std::upper_bound(s.begin(), s.end(), i), i);
            if (punctured_distance(c, s) < delta) return true;
            out.status = SearchStatus::found;
            out.group = LocalGroup{i, s, null_space_basis(c.generator().select_columns(s), c.field())};
            return false;
        });
        if (done) return out;
    }
    out.status = SearchStatus::not_found;
    return out;
}

namespace {

bool columns_independent_any(const Matrix& h, std::size_t count, const Field& f) {
    if (count == 0) return true;
    if (count > h.cols()) return true;
    if (count > h.rows()) return false;
    return detail::for_each_combination(h.cols(), count,
                                        [&](const Coords& cols) { return rank(h.select_columns(cols), f) == count; });
}

}  // namespace

std::vector<Violation> check_profile(const LinearCode& c, const LocalityProfile& p) {
    std::vector<Violation> out;
    const Field& f = c.field();
    if (p.r < 1 || p.delta < 2) {
        out.push_back({"params", std::nullopt, "profile needs r >= 1 and delta >= 2"});
        return out;
    }
    std::vector<bool> covered(c.n(), false);
    for (std::size_t gi = 0; gi < p.groups.size(); ++gi) {
        const LocalGroup& g = p.groups[gi];
        if (g.support.empty()) {
            out.push_back({"support", gi, "empty support"});
            continue;
        }
        std::set<std::size_t> seen;
        bool ok = true;
        for (auto s : g.support) {
            if (s >= c.n() || !seen.insert(s).second) ok = false;
        }
        if (!ok) {
            out.push_back({"support", gi, "support has out-of-range or repeated coordinates"});
            continue;
        }
        if (!seen.count(g.index)) out.push_back({"membership", gi, "protected coordinate is outside its support"});
        if (g.support.size() > p.r + p.delta - 1) {
            out.push_back({"size", gi,
                           "support size " + std::to_string(g.support.size()) + " exceeds r + delta - 1 = " +
                               std::to_string(p.r + p.delta - 1)});
        }
        const std::size_t local_d = punctured_distance(c, g.support);
        if (local_d < p.delta) {
            out.push_back({"distance", gi,
                           "punctured code has distance " + std::to_string(local_d) + " < delta = " +
                               std::to_string(p.delta)});
        }
        const Matrix gs = c.generator().select_columns(g.support);
        if (g.local_check.rows() > 0) {
            const Matrix& h = g.local_check;
            if (h.cols() != g.support.size() || !h.fits(f)) {
                out.push_back({"local_check", gi, "local check has the wrong width or entries outside the field"});
            } else {
                if (!multiply(gs, h.transpose(), f).is_zero()) {
                    out.push_back({"local_check", gi, "local check rows are not in the dual restricted to the support"});
                }
                if (rank(h, f) != h.rows()) out.push_back({"local_check", gi, "local check rows are dependent"});
                if (!columns_independent_any(h, p.delta - 1, f)) {
                    out.push_back({"local_check", gi, "some delta - 1 columns of the local check are dependent"});
                }
            }
        }
        for (auto s : g.support) covered[s] = true;
    }

    if (p.mode == LocalityMode::all_symbol) {
        for (std::size_t j = 0; j < c.n(); ++j)
            if (!covered[j]) out.push_back({"coverage", std::nullopt, "coordinate " + std::to_string(j) + " is uncovered"});
    } else if (!c.systematic_columns().empty()) {
        for (auto j : c.systematic_columns())
            if (!covered[j]) {
                out.push_back({"coverage", std::nullopt, "information coordinate " + std::to_string(j) + " is uncovered"});
            }
    } else {
        Coords cov;
        for (std::size_t j = 0; j < c.n(); ++j)
            if (covered[j]) cov.push_back(j);
        if (rank(c.generator().select_columns(cov), f) != c.k()) {
            out.push_back({"coverage", std::nullopt, "covered coordinates do not contain an information set"});
        }
    }
    return out;
}

bool is_k_core(const std::vector<Coords>& partition, std::size_t r, const Coords& s) {
    const std::set<std::size_t> in(s.begin(), s.end());
    for (const auto& block : partition) {
        std::size_t hits = 0;
        for (auto j : block) hits += in.count(j);
        if (hits > r) return false;
    }
    return true;
}

bool is_k_core_generic(const Matrix& l, const Coords& s, const Field& f) {
    // Restricting L to the complement of S is injective iff no vector of L
    // lives inside S.
    const std::size_t dim = rank(l, f);
    const Coords outside = complement(s, l.cols());
    return rank(l.select_columns(outside), f) == dim;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks, const std::vector<Coords>& partition, std::size_t n) {
    if (blocks.size() != partition.size()) fail(ErrorCode::InvalidArgument, "one block check per partition block");
    Matrix out(0, n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].cols() != partition[b].size()) fail(ErrorCode::InvalidArgument, "block check width mismatch");
        for (std::size_t r = 0; r < blocks[b].rows(); ++r) {
            Vector row(n, 0);
            for (std::size_t j = 0; j < partition[b].size(); ++j) row[partition[b][j]] = blocks[b](r, j);
            out.append_row(row);
        }
    }
    return out;
}

std::uint64_t count_k_cores(const std::vector<Coords>& partition, std::size_t r, std::size_t k) {
    // Coefficient of x^k in prod_i sum_{j <= r} C(|P_i|, j) x^j.
    std::vector<unsigned __int128> poly(k + 1, 0);
    poly[0] = 1;
    for (const auto& block : partition) {
        std::vector<unsigned __int128> next(k + 1, 0);
        for (std::size_t a = 0; a <= k; ++a) {
            if (poly[a] == 0) continue;
            for (std::size_t j = 0; j <= std::min(r, block.size()) && a + j <= k; ++j)
                next[a + j] += poly[a] * detail::binomial(block.size(), j);
        }
        poly = std::move(next);
    }
    const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::min(poly[k], cap));
}

GeneralPositionReport check_general_position(const Matrix& g, const Matrix& l, const std::vector<Coords>& partition,
                                             std::size_t r, std::size_t k, const Field& f, std::uint64_t budget,
                                             std::uint64_t sample_seed) {
    GeneralPositionReport rep;
    const std::size_t n = g.cols();
    if (g.rows() != k || l.cols() != n || (l.rows() > 0 && !multiply(g, l.transpose(), f).is_zero())) {
        rep.status = PositionStatus::precondition_violated;
        return rep;
    }
    std::vector<std::size_t> block_of(n, partition.size());
    for (std::size_t b = 0; b < partition.size(); ++b)
        for (auto j : partition[b]) block_of[j] = b;

    rep.cores_total = count_k_cores(partition, r, k);
    auto check = [&](const Coords& s) {
        ++rep.cores_checked;
        if (rank(g.select_columns(s), f) == k) return;
        ++rep.failed_cores;
        if (!rep.failing_core) rep.failing_core = s;
    };

    if (rep.cores_total <= budget) {
        Coords current;
        std::vector<std::size_t> load(partition.size() + 1, 0);
        std::function<void(std::size_t)> walk = [&](std::size_t start) {
            if (current.size() == k) {
                check(current);
                return;
            }
            for (std::size_t j = start; j + (k - current.size()) <= n; ++j) {
                const std::size_t b = block_of[j];
                if (b < partition.size() && load[b] == r) continue;
                ++load[b];
                current.push_back(j);
                walk(j + 1);
                current.pop_back();
                --load[b];
            }
        };
        walk(0);
    } else {
        rep.exhaustive = false;
        Pcg32 rng(sample_seed);
        Coords perm(n);
        while (rep.cores_checked < budget) {
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t j = i + rng.below(static_cast<std::uint32_t>(n - i));
                std::swap(perm[i], perm[j]);
            }
            Coords s(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
            std::sort(s.begin(), s.end());
            if (is_k_core(partition, r, s)) check(s);
        }
    }
    rep.status = rep.failed_cores == 0 ? PositionStatus::pass : PositionStatus::fail;
    return rep;
}

DeficientSupport max_deficient_support(const Matrix& g, std::size_t r, std::size_t delta, std::size_t k,
                                       const Field& f, std::size_t max_n) {
    if (g.cols() > max_n) {
        fail(ErrorCode::BudgetExceeded, "deficient-support scan limited to n <= " + std::to_string(max_n));
    }
    if (k == 0 || r == 0 || delta < 1) fail(ErrorCode::InvalidParams, "need k >= 1, r >= 1");
    DeficientSupport out;
    auto [size, witness] = max_rank_deficient_set(g, k - 1, f, std::numeric_limits<std::uint64_t>::max());
    out.size = size;
    out.witness = std::move(witness);
    out.bound = static_cast<std::int64_t>(k) - 1 +
                (static_cast<std::int64_t>(delta) - 1) * (ceil_div(static_cast<std::int64_t>(k), static_cast<std::int64_t>(r)) - 1);
    return out;
}

namespace {

std::vector<Coords> distinct_supports(const LocalityProfile& p) {
    std::set<Coords> seen;
    std::vector<Coords> out;
    for (const auto& g : p.groups) {
        Coords s = g.support;
        std::sort(s.begin(), s.end());
        if (seen.insert(s).second) out.push_back(s);
    }
    return out;
}

}  // namespace

OptimalityCertificate certify_optimality(const LinearCode& c, const LocalityProfile& p,
                                         const std::optional<Coords>& global_parity, const Limits& limits) {
    OptimalityCertificate cert;
    cert.violations = check_profile(c, p);
    cert.profile_valid = cert.violations.empty();
    if (!cert.profile_valid) {
        cert.details.push_back("invalid profile: certificate not computed");
        cert.dual_hierarchy_check = CheckStatus::skipped;
        cert.structural_check = CheckStatus::skipped;
        return cert;
    }
    if (c.k() == 0) {
        cert.details.push_back("zero code: nothing to certify");
        return cert;
    }

    const auto n = static_cast<std::int64_t>(c.n());
    const auto k = static_cast<std::int64_t>(c.k());
    const auto r = static_cast<std::int64_t>(p.r);
    const auto delta = static_cast<std::int64_t>(p.delta);
    // ceil(k/r) = 1 for every r >= k, so the bound is unchanged by clamping.
    cert.bound_d = locality_bound(n, k, std::min(r, k), delta);

    try {
        cert.measured_d = min_distance(c, limits);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        cert.details.push_back(std::string("minimum distance skipped: ") + e.what());
        return cert;
    }
    const auto d = static_cast<std::int64_t>(*cert.measured_d);
    cert.tight = d == *cert.bound_d;
    if (d > *cert.bound_d) {
        cert.soundness_violation = true;
        cert.details.push_back("measured distance exceeds the locality bound");
    }

    const std::int64_t base = (ceil_div(k, std::min(r, k)) - 1) * (delta - 1);
    if (cert.tight) {
        try {
            cert.dual_hierarchy = weight_hierarchy(dual_code(c), limits);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            cert.details.push_back(std::string("dual hierarchy skipped: ") + e.what());
        }
    }

    if (!cert.tight) {
        cert.dual_hierarchy_check = CheckStatus::not_applicable;
    } else if (!cert.dual_hierarchy) {
        cert.dual_hierarchy_check = CheckStatus::skipped;
    } else {
        const auto& dd = cert.dual_hierarchy->dims;
        cert.dual_hierarchy_check = CheckStatus::pass;
        for (std::int64_t i = 1; i <= n - k - base; ++i) {
            const auto idx = static_cast<std::size_t>(base + i - 1);
            const auto expect = static_cast<std::size_t>(k + base + i);
            if (dd[idx] != expect) {
                cert.dual_hierarchy_check = CheckStatus::fail;
                cert.details.push_back("dual weight " + std::to_string(idx + 1) + " is " + std::to_string(dd[idx]) +
                                       ", expected " + std::to_string(expect));
            }
        }
    }

    if (!cert.tight || k % r != 0 || d >= r + 2 * delta - 1) {
        cert.structural_check = CheckStatus::not_applicable;
        return cert;
    }

    bool ok = true;
    auto flag = [&](const std::string& msg) {
        ok = false;
        cert.details.push_back(msg);
    };
    const auto supports = distinct_supports(p);
    const auto local_len = static_cast<std::size_t>(r + delta - 1);
    std::vector<int> owner(c.n(), -1);
    for (std::size_t s = 0; s < supports.size(); ++s) {
        const Coords& sup = supports[s];
        if (sup.size() != local_len) {
            flag("group " + std::to_string(s) + " has size " + std::to_string(sup.size()) + ", expected " +
                 std::to_string(local_len));
        }
        for (auto j : sup) {
            if (owner[j] >= 0) flag("groups " + std::to_string(owner[j]) + " and " + std::to_string(s) + " overlap");
            owner[j] = static_cast<int>(s);
        }
        const LinearCode local = puncture(c, sup);
        const std::size_t local_d = punctured_distance(c, sup);
        if (local.k() != static_cast<std::size_t>(r) || local_d != static_cast<std::size_t>(delta) ||
            local_d != sup.size() - local.k() + 1) {
            flag("group " + std::to_string(s) + " punctured code is [" + std::to_string(sup.size()) + "," +
                 std::to_string(local.k()) + "," + std::to_string(local_d) + "], not an MDS [r+delta-1, r, delta] code");
        }
        if (global_parity) {
            Coords ext = sup;
            ext.insert(ext.end(), global_parity->begin(), global_parity->end());
            std::sort(ext.begin(), ext.end());
            const LinearCode sh = shorten(c, ext);
            Coords all(sh.n());
            std::iota(all.begin(), all.end(), 0);
            const std::size_t sh_d = sh.k() == 0 ? sh.n() + 1 : punctured_distance(sh, all);
            if (sh.n() != static_cast<std::size_t>(r + d - 1) || sh.k() != static_cast<std::size_t>(r) ||
                sh_d != static_cast<std::size_t>(d)) {
                flag("shortened code on group " + std::to_string(s) + " and T is [" + std::to_string(sh.n()) + "," +
                     std::to_string(sh.k()) + "," + std::to_string(sh_d) + "], not [r+d-1, r, d] MDS");
            }
        }
    }
    if (!global_parity) cert.details.push_back("shortened-MDS check skipped: T unknown");

    if (cert.dual_hierarchy) {
        const auto& dd = cert.dual_hierarchy->dims;
        for (std::int64_t i = 1; i <= delta - 1 && static_cast<std::size_t>(i) <= dd.size(); ++i) {
            if (dd[static_cast<std::size_t>(i - 1)] != static_cast<std::size_t>(r + i)) {
                flag("dual weight " + std::to_string(i) + " is " + std::to_string(dd[static_cast<std::size_t>(i - 1)]) +
                     ", expected r + " + std::to_string(i));
            }
        }
    } else {
        cert.details.push_back("low dual weights skipped: dual hierarchy unavailable");
    }
    cert.structural_check = ok ? CheckStatus::pass : CheckStatus::fail;
    return cert;
}

}  // namespace lrc
