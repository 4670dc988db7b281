#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

enum class LocalityMode { information, all_symbol };
const char* to_string(LocalityMode m);

/// A local group S_i protecting coordinate `index`: the punctured code
/// C|_S has distance >= delta, and local_check holds rows of the dual code
/// restricted to S (the check matrix of C|_S).
struct LocalGroup {
    std::size_t index = 0;
    Coords support;
    Matrix local_check;
};

struct LocalityProfile {
    std::size_t r = 0;
    std::size_t delta = 0;
    LocalityMode mode = LocalityMode::information;
    std::vector<LocalGroup> groups;
};

enum class SearchStatus { found, not_found, budget_exceeded };
const char* to_string(SearchStatus s);

struct GroupSearch {
    SearchStatus status = SearchStatus::not_found;
    std::optional<LocalGroup> group;
    std::uint64_t candidates_checked = 0;
};

/// Searches for the smallest (then lexicographically first) S containing i
/// with |S| <= r + delta - 1 and d(C|_S) >= delta. A truncated search reports
/// budget_exceeded, never not_found.
GroupSearch symbol_locality(const LinearCode& c, std::size_t i, std::size_t r, std::size_t delta,
                            std::uint64_t budget = std::uint64_t{1} << 20);

struct Violation {
    std::string kind;  // params, support, membership, size, distance, local_check, coverage
    std::optional<std::size_t> group;
    std::string message;
};

/// Verifies every group directly and the coverage requirement of the mode.
/// Information mode covers the systematic columns when recorded, otherwise
/// requires the covered coordinates to contain an information set.
std::vector<Violation> check_profile(const LinearCode& c, const LocalityProfile& p);

/// Block-diagonal k-core test: |P_i cap S| <= r for every block.
bool is_k_core(const std::vector<Coords>& partition, std::size_t r, const Coords& s);

/// Generic k-core test: no nonzero vector of rowspace(l) is supported inside s.
bool is_k_core_generic(const Matrix& l, const Coords& s, const Field& f);

/// Block-diagonal subspace L = rowspace(diag(Q_1..Q_t)) spread over the
/// partition blocks. Each block check must have one column per coordinate.
Matrix block_diagonal(const std::vector<Matrix>& blocks, const std::vector<Coords>& partition, std::size_t n);

enum class PositionStatus { pass, fail, precondition_violated };
const char* to_string(PositionStatus s);

struct GeneralPositionReport {
    PositionStatus status = PositionStatus::pass;
    std::optional<Coords> failing_core;  // first failure in lexicographic order
    std::uint64_t cores_total = 0;
    std::uint64_t cores_checked = 0;
    std::uint64_t failed_cores = 0;
    bool exhaustive = true;
};

/// Checks rowspace(g) is orthogonal to l, then rank(g_S) = k for every
/// k-core S of the block partition. Above `budget` cores, a seeded random
/// sample of `budget` cores is checked instead and exhaustive is false.
GeneralPositionReport check_general_position(const Matrix& g, const Matrix& l, const std::vector<Coords>& partition,
                                             std::size_t r, std::size_t k, const Field& f,
                                             std::uint64_t budget = std::uint64_t{1} << 22,
                                             std::uint64_t sample_seed = 0);

std::uint64_t count_k_cores(const std::vector<Coords>& partition, std::size_t r, std::size_t k);

struct DeficientSupport {
    std::size_t size = 0;
    Coords witness;
    std::int64_t bound = 0;  // k - 1 + (delta - 1)(ceil(k/r) - 1)
};

/// max{|S| : rank(g_S) <= k - 1} with a witness. Throws BudgetExceeded for
/// n > max_n.
DeficientSupport max_deficient_support(const Matrix& g, std::size_t r, std::size_t delta, std::size_t k,
                                       const Field& f, std::size_t max_n = 14);

enum class CheckStatus { pass, fail, skipped, not_applicable };
const char* to_string(CheckStatus s);

struct OptimalityCertificate {
    bool profile_valid = false;
    std::vector<Violation> violations;
    std::optional<std::size_t> measured_d;
    std::optional<std::int64_t> bound_d;
    bool tight = false;
    bool soundness_violation = false;
    CheckStatus dual_hierarchy_check = CheckStatus::skipped;
    CheckStatus structural_check = CheckStatus::skipped;
    std::optional<WeightHierarchy> dual_hierarchy;
    std::vector<std::string> details;

    /// Any violated theorem (bound soundness, dual ladder, optimal structure).
    bool invariant_violated() const {
        return soundness_violation || dual_hierarchy_check == CheckStatus::fail ||
               structural_check == CheckStatus::fail;
    }
};

/// Bundles the brute-force distance, the (r, delta) bound, the dual GHW
/// ladder of tight codes, and the structure checks that apply when r | k and
/// d < r + 2 delta - 1. `global_parity` is the recipe's global parity column
/// set T; without it the shortened-MDS step is skipped.
OptimalityCertificate certify_optimality(const LinearCode& c, const LocalityProfile& p,
                                         const std::optional<Coords>& global_parity = std::nullopt,
                                         const Limits& limits = {});

}  // namespace lrc
