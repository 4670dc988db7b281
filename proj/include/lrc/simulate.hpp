#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/locality.hpp"

namespace lrc {

enum class RepairPolicy { local_first, global_only };
const char* to_string(RepairPolicy p);
RepairPolicy parse_policy(const std::string& s);

/// How many nodes fail in one round: a fixed count, or each node
/// independently with an exact probability.
struct FailureModel {
    std::optional<std::size_t> count;
    std::optional<Rational> probability;
};

struct Scenario {
    std::size_t rounds = 1;
    FailureModel failures;
    std::uint64_t seed = 0;
    RepairPolicy policy = RepairPolicy::local_first;
    /// Never lets a group collect more than delta - 1 failures; only nodes
    /// inside some group fail.
    bool constrained_per_group = false;
    /// Fails the support of the first minimum-weight codeword first, then
    /// random nodes up to the count.
    bool adversarial = false;
};

struct RoundLog {
    std::size_t round = 0;
    Coords erased;
    Coords repaired_local;
    Coords repaired_global;
    Coords lost;
};

struct SimReport {
    std::size_t rounds_run = 0;
    std::uint64_t failures = 0;
    std::uint64_t repairs_local = 0;
    std::uint64_t repairs_global = 0;
    std::uint64_t data_loss_events = 0;  // erased symbols that could not be recovered
    std::uint64_t rounds_with_loss = 0;
    std::uint64_t silent_corruptions = 0;
    std::uint64_t classification_mismatches = 0;
    std::map<std::size_t, std::uint64_t> read_degree_histogram;  // local repairs only
    std::vector<RoundLog> log;
};

/// One codeword (one symbol per node) drawn once from the seeded generator;
/// every round starts from the healthy stripe, fails nodes simultaneously,
/// repairs them per policy and compares with the ground truth. Throws
/// InvalidProfile when the profile does not verify, InvalidParams for a bad
/// scenario.
SimReport run_scenario(const LinearCode& c, const LocalityProfile& p, const Scenario& s, const Limits& limits = {});

}  // namespace lrc
