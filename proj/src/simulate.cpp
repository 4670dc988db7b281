#include "lrc/simulate.hpp"

#include <algorithm>

#include "lrc/repair.hpp"
#include "lrc/rng.hpp"

namespace lrc {

const char* to_string(RepairPolicy p) { return p == RepairPolicy::local_first ? "local-first" : "global-only"; }

RepairPolicy parse_policy(const std::string& s) {
    if (s == "local-first") return RepairPolicy::local_first;
    if (s == "global-only") return RepairPolicy::global_only;
    fail(ErrorCode::InvalidArgument, "unknown repair policy '" + s + "' (expected local-first or global-only)");
}

namespace {

void validate(const LinearCode& c, const LocalityProfile& p, const Scenario& s) {
    if (s.rounds < 1) fail(ErrorCode::InvalidParams, "rounds must be at least 1");
    if (s.failures.count.has_value() == s.failures.probability.has_value()) {
        fail(ErrorCode::InvalidParams, "give exactly one of a failure count or a failure probability");
    }
    if (s.failures.count && *s.failures.count > c.n()) fail(ErrorCode::InvalidParams, "failure count exceeds n");
    if (s.failures.probability) {
        const Rational& pr = *s.failures.probability;
        if (pr.num < 0 || pr.num > pr.den) fail(ErrorCode::InvalidParams, "probability outside [0, 1]");
        if (pr.den > 0xffffffffll) fail(ErrorCode::InvalidParams, "probability denominator must fit in 32 bits");
    }
    const auto violations = check_profile(c, p);
    if (!violations.empty()) {
        fail(ErrorCode::InvalidProfile, "profile does not verify: " + violations.front().message);
    }
}

class FailureSampler {
public:
    FailureSampler(const LinearCode& c, const LocalityProfile& p, const Scenario& s, Coords adversarial)
        : p_(p), s_(s), adversarial_(std::move(adversarial)), member_(c.n()) {
        for (std::size_t g = 0; g < p.groups.size(); ++g)
            for (auto i : p.groups[g].support) member_[i].push_back(g);
        for (std::size_t i = 0; i < c.n(); ++i)
            if (!s.constrained_per_group || !member_[i].empty()) candidates_.push_back(i);
    }

    Coords sample(Pcg32& rng) {
        std::vector<std::size_t> load(p_.groups.size(), 0);
        std::vector<bool> down(member_.size(), false);
        Coords out;
        auto admit = [&](std::size_t i) {
            if (down[i]) return false;
            if (s_.constrained_per_group) {
                if (member_[i].empty()) return false;
                for (auto g : member_[i])
                    if (load[g] + 1 > p_.delta - 1) return false;
            }
            for (auto g : member_[i]) ++load[g];
            down[i] = true;
            out.push_back(i);
            return true;
        };
        const std::size_t target = s_.failures.count.value_or(member_.size());
        for (auto i : adversarial_) {
            if (out.size() >= target) break;
            admit(i);
        }
        if (s_.failures.count) {
            Coords order = candidates_;
            for (std::size_t a = 0; a < order.size() && out.size() < target; ++a) {
                const std::size_t b = a + rng.below(static_cast<std::uint32_t>(order.size() - a));
                std::swap(order[a], order[b]);
                admit(order[a]);
            }
        } else {
            const Rational& pr = *s_.failures.probability;
            for (auto i : candidates_) {
                const bool fails = rng.below(static_cast<std::uint32_t>(pr.den)) < static_cast<std::uint64_t>(pr.num);
                if (fails) admit(i);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    const LocalityProfile& p_;
    const Scenario& s_;
    Coords adversarial_;
    std::vector<std::vector<std::size_t>> member_;
    Coords candidates_;
};

}  // namespace

SimReport run_scenario(const LinearCode& c, const LocalityProfile& p, const Scenario& s, const Limits& limits) {
    validate(c, p, s);
    const Field& f = c.field();
    Pcg32 rng(s.seed);

    Vector message(c.k());
    for (auto& m : message) m = rng.below(f.order());
    const Vector truth = c.encode(message);

    Coords adversarial;
    if (s.adversarial && c.k() > 0) {
        const Vector w = min_weight_codeword(c, limits);
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) adversarial.push_back(i);
    }
    FailureSampler sampler(c, p, s, adversarial);

    SimReport rep;
    for (std::size_t round = 0; round < s.rounds; ++round) {
        RoundLog entry;
        entry.round = round;
        entry.erased = sampler.sample(rng);
        const ErasurePattern pattern{c.n(), entry.erased};
        const ErasedWord word = erase(truth, pattern);
        const auto classes = repairability(c, p, pattern);

        auto settle = [&](std::size_t i, Elem value, bool local) {
            if (value != truth[i]) ++rep.silent_corruptions;
            (local ? entry.repaired_local : entry.repaired_global).push_back(i);
        };

        Coords pending;
        for (const auto& cls : classes) {
            if (s.policy == RepairPolicy::local_first && cls.kind == Repairability::local) {
                try {
                    const auto r = local_repair(c, p, word, cls.coordinate);
                    ++rep.read_degree_histogram[r.symbols_read.size()];
                    settle(cls.coordinate, *r.value, true);
                    continue;
                } catch (const Error&) {
                    ++rep.classification_mismatches;
                }
            }
            pending.push_back(cls.coordinate);
        }
        if (!pending.empty()) {
            const auto decoded = global_decode(c, word);
            const bool ok = decoded.status == DecodeStatus::ok;
            for (auto i : pending) {
                const auto it = std::find_if(classes.begin(), classes.end(),
                                             [&](const CoordinateClass& cc) { return cc.coordinate == i; });
                if (ok == (it->kind == Repairability::lost)) ++rep.classification_mismatches;
                if (ok) {
                    settle(i, (*decoded.codeword)[i], false);
                } else {
                    entry.lost.push_back(i);
                }
            }
        }

        rep.failures += entry.erased.size();
        rep.repairs_local += entry.repaired_local.size();
        rep.repairs_global += entry.repaired_global.size();
        rep.data_loss_events += entry.lost.size();
        if (!entry.lost.empty()) ++rep.rounds_with_loss;
        rep.log.push_back(std::move(entry));
        ++rep.rounds_run;
    }
    return rep;
}

}  // namespace lrc
