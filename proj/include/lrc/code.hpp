#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

/// Enumeration caps. Exceeding one raises BudgetExceeded instead of running
/// for an unbounded time.
struct Limits {
    std::uint64_t codeword_budget = std::uint64_t{1} << 24;  // q^k for min_distance
    std::uint64_t subspace_budget = std::uint64_t{1} << 22;  // subcodes per GHW level
    std::uint64_t subset_budget = std::uint64_t{1} << 24;    // coordinate subsets
    unsigned threads = 1;
};

/// An [n, k] linear code held as a full-rank k x n generator matrix.
///
/// k = 0 is allowed and represents the zero code (it arises from shortening
/// and as the dual of the full space).
class LinearCode {
public:
    /// Throws RankDeficient when the rows of g are dependent (the message
    /// lists the offending row indices) and InvalidArgument when an entry
    /// is outside the field or a declared systematic set is not an identity.
    /// Without a declared set, the leading k columns are recorded when they
    /// form the identity.
    static LinearCode from_generator(Matrix g, const Field& f, std::optional<Coords> systematic = std::nullopt);
    static LinearCode zero(std::size_t n, const Field& f);

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return generator_.cols(); }
    std::size_t k() const noexcept { return generator_.rows(); }
    const Matrix& generator() const noexcept { return generator_; }
    const Coords& systematic_columns() const noexcept { return systematic_; }

    /// (n - k) x n check matrix; the generator of the dual code.
    Matrix check_matrix() const { return null_space_basis(generator_, field_); }

    /// message * G. Throws LengthMismatch.
    Vector encode(std::span<const Elem> message) const;
    bool contains(std::span<const Elem> word) const;

private:
    LinearCode(Matrix g, Field f, Coords sys) : field_(std::move(f)), generator_(std::move(g)), systematic_(std::move(sys)) {}

    Field field_;
    Matrix generator_;
    Coords systematic_;
};

LinearCode dual_code(const LinearCode& c);

/// C|_S: keeps the coordinates in S (in the given order). Dimension may drop.
LinearCode puncture(const LinearCode& c, const Coords& s);

/// C^S: codewords vanishing outside S, restricted to S. May have dimension 0.
LinearCode shorten(const LinearCode& c, const Coords& s);

/// Exact minimum Hamming weight by enumerating all q^k messages.
/// Returns n + 1 for the zero code. Throws BudgetExceeded when q^k exceeds
/// limits.codeword_budget.
std::size_t min_distance(const LinearCode& c, const Limits& limits = {});

/// The first minimum-weight codeword in enumeration order (independent of
/// limits.threads). Throws InvalidArgument for the zero code.
Vector min_weight_codeword(const LinearCode& c, const Limits& limits = {});

/// Exact minimum distance of C|_S from ranks of column subsets:
/// d = |S| - max{|T| : T subset of S, rank(G_T) < rank(G_S)}. Independent of q.
std::size_t punctured_distance(const LinearCode& c, const Coords& s);

/// Largest coordinate set Z with rank(G_Z) <= rho together with a witness,
/// found as the largest closure of an independent rho-subset of columns.
/// Throws BudgetExceeded when C(n, rho) exceeds budget.
std::pair<std::size_t, Coords> max_rank_deficient_set(const Matrix& g, std::size_t rho, const Field& f,
                                                      std::uint64_t budget);

enum class HierarchyRoute { direct, dual_derived, flats };
const char* to_string(HierarchyRoute r);

/// Generalized Hamming weights d_1 < ... < d_k and the gap numbers
/// [n] \ {d_i}. Values are 1-based sizes.
struct WeightHierarchy {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> gaps;
    HierarchyRoute route = HierarchyRoute::direct;

    friend bool operator==(const WeightHierarchy& a, const WeightHierarchy& b) {
        return a.dims == b.dims && a.gaps == b.gaps;
    }
};

std::vector<std::size_t> gap_numbers(const std::vector<std::size_t>& dims, std::size_t n);

/// Number of i-dimensional subspaces of GF(q)^k, saturating.
std::uint64_t gaussian_binomial(std::uint64_t k, std::uint64_t i, std::uint64_t q);

/// Minimum support over every i-dimensional subcode, enumerated through
/// canonical RREF message matrices. Requires n <= 64.
WeightHierarchy weight_hierarchy_direct(const LinearCode& c, const Limits& limits = {});

/// Same values from the largest flats of the column matroid:
/// d_i = n - max{|cl(X)| : X independent, |X| = k - i}.
WeightHierarchy weight_hierarchy_flats(const LinearCode& c, const Limits& limits = {});

/// Direct enumeration when it fits the subspace budget, otherwise the dual's
/// hierarchy mapped through Wei duality, otherwise the flats route.
WeightHierarchy weight_hierarchy(const LinearCode& c, const Limits& limits = {});

/// Primal hierarchy of an [n, k] code from the hierarchy of its dual:
/// {d_i} = [n] \ {n + 1 - d_j^perp}. Throws InvalidArgument when the dual
/// hierarchy has the wrong length, is not strictly increasing, or is out of
/// range.
WeightHierarchy wei_dual_hierarchy(const WeightHierarchy& dual, std::size_t n, std::size_t k);

std::vector<std::size_t> complement(const Coords& s, std::size_t n);

}  // namespace lrc
