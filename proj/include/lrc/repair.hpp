#pragma once

#include <optional>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/locality.hpp"

namespace lrc {

/// A received word; std::nullopt marks an erased symbol.
using ErasedWord = std::vector<std::optional<Elem>>;

struct ErasurePattern {
    std::size_t n = 0;
    Coords erased;  // sorted, unique

    /// Throws InvalidArgument for coordinates outside [0, n).
    static ErasurePattern make(std::size_t n, Coords erased);
    bool contains(std::size_t i) const;
};

/// Erases the given coordinates of a full codeword.
ErasedWord erase(std::span<const Elem> word, const ErasurePattern& pattern);
ErasurePattern erasures_of(const ErasedWord& word);

enum class RepairMethod { local, global, failed };
const char* to_string(RepairMethod m);

struct RepairReport {
    std::size_t target = 0;
    RepairMethod method = RepairMethod::failed;
    Coords symbols_read;
    std::optional<std::size_t> group_used;  // position in the profile's group list
    std::optional<Coords> group_support;
    std::optional<Elem> value;
    std::string note;
};

/// Recovers word[target] from one local group. Chooses the group with the
/// fewest erasures (ties: smallest position in the profile) and reads the
/// lexicographically first unerased columns that span the local code.
/// Throws NoGroup, TooManyLocalErasures, InvalidArgument (target not
/// erased), LengthMismatch.
RepairReport local_repair(const LinearCode& c, const LocalityProfile& p, const ErasedWord& word, std::size_t target);

enum class DecodeStatus { ok, ambiguous, inconsistent };
const char* to_string(DecodeStatus s);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::ok;
    std::optional<Vector> codeword;
};

/// Unique completion of the unerased symbols to a codeword. Ambiguous when
/// the unerased columns of G have rank below k, inconsistent when no
/// codeword agrees with them.
DecodeResult global_decode(const LinearCode& c, const ErasedWord& word);

enum class Repairability { local, global_only, lost };
const char* to_string(Repairability r);

struct CoordinateClass {
    std::size_t coordinate = 0;
    Repairability kind = Repairability::lost;
};

/// Classification of every erased coordinate when all erasures happen at
/// once: local when a group holding it has at most delta - 1 erasures,
/// global_only when the whole pattern decodes uniquely, lost otherwise.
std::vector<CoordinateClass> repairability(const LinearCode& c, const LocalityProfile& p,
                                           const ErasurePattern& pattern);

}  // namespace lrc
