#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/locality.hpp"

namespace lrc {

/// Everything needed to rebuild a constructed code bit for bit.
struct ConstructionRecipe {
    std::string kind;  // rs, pyramid, parity_split, random_general_position, concatenated
    std::map<std::string, std::int64_t> params;
    std::uint32_t q = 0;
    std::vector<int> modulus;
    std::vector<Elem> evaluation_points;
    std::vector<Coords> partition;
    std::optional<Coords> global_parity_columns;  // T: columns outside every local group
    std::optional<std::int64_t> attempt_used;

    struct Component {
        std::uint32_t q = 0;
        std::vector<int> modulus;
        Matrix generator;
    };
    std::optional<Component> inner;
    std::optional<Component> outer;
};

struct Construction {
    LinearCode code;
    std::optional<LocalityProfile> profile;
    ConstructionRecipe recipe;
};

/// n distinct nonzero evaluation points: 1..n in GF(p), 1, a, a^2, ... in
/// GF(2^m) with a the field's primitive element. Throws FieldTooSmall.
std::vector<Elem> evaluation_points(std::size_t n, const Field& f);

/// rows x n matrix with entries x_j^i, i = 0..rows-1.
Matrix vandermonde(const std::vector<Elem>& points, std::size_t rows, const Field& f);

/// Systematic [n, k, n-k+1] Reed-Solomon code with the Vandermonde check
/// matrix; G = [I_k | P]. Requires q > n.
LinearCode rs_code(std::size_t n, std::size_t k, const Field& f);

/// Information-locality code from a [k+d-1, k, d] systematic MDS code by
/// splitting its first delta-1 parity columns across row blocks of size r
/// (the last block keeps k mod r rows). Length k+d-1+(ceil(k/r)-1)(delta-1).
Construction pyramid_code(std::size_t k, std::size_t r, std::size_t delta, std::size_t d, const Field& f);

/// All-symbol-locality code of length ceil(k/r)(r+delta-1) obtained by
/// splitting the first delta-1 rows of a Vandermonde RS check matrix into a
/// block-diagonal local part.
Construction parity_split_code(std::size_t k, std::size_t r, std::size_t delta, const Field& f);

/// Matrix H of the parity-split construction (local block rows, then the
/// remaining RS rows).
Matrix parity_split_check_matrix(std::size_t k, std::size_t r, std::size_t delta, const Field& f);

class RandomConstructionFailure : public Error {
public:
    RandomConstructionFailure(const std::string& what, std::uint64_t failed_cores)
        : Error(ErrorCode::ConstructionFailed, what), failed_cores_(failed_cores) {}
    std::uint64_t failed_cores() const noexcept { return failed_cores_; }

private:
    std::uint64_t failed_cores_;
};

/// Samples generator rows uniformly from the orthogonal complement of
/// L = rowspace(diag(Q_1..Q_t)), Q_i the check matrix of an [r+delta-1, r]
/// RS code on block i, until the columns are in general position subject to
/// L. Attempt i uses Pcg32(seed + i). Throws RandomConstructionFailure when
/// every attempt fails, InfeasibleParams when k > n - t(delta-1).
Construction random_all_symbol_code(std::size_t k, std::size_t r, std::size_t delta, std::size_t t, const Field& f,
                                    std::uint64_t seed, std::size_t attempts = 64);

/// Serial concatenation: outer symbols over GF(q^k1) are expanded to k1
/// inner symbols with the polynomial basis (bit j -> coordinate j), then each
/// block is encoded with the inner code. Supports an inner GF(2) with an
/// outer GF(2^k1), or k1 = 1 over a common field. Throws FieldMismatch.
Construction concatenate(const LinearCode& outer, const LinearCode& inner);

/// Rebuilds a code from its recipe.
Construction replay(const ConstructionRecipe& recipe);

}  // namespace lrc
