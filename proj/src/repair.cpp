#include "lrc/repair.hpp"

#include <algorithm>

namespace lrc {

ErasurePattern ErasurePattern::make(std::size_t n, Coords erased) {
    std::sort(erased.begin(), erased.end());
    erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
    if (!erased.empty() && erased.back() >= n) {
        fail(ErrorCode::InvalidArgument, "erased coordinate " + std::to_string(erased.back()) + " outside [0, " +
                                             std::to_string(n) + ")");
    }
    return {n, std::move(erased)};
}

bool ErasurePattern::contains(std::size_t i) const { return std::binary_search(erased.begin(), erased.end(), i); }

ErasedWord erase(std::span<const Elem> word, const ErasurePattern& pattern) {
    if (word.size() != pattern.n) fail(ErrorCode::LengthMismatch, "word length differs from the pattern length");
    ErasedWord out(word.begin(), word.end());
    for (auto i : pattern.erased) out[i].reset();
    return out;
}

ErasurePattern erasures_of(const ErasedWord& word) {
    Coords e;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (!word[i]) e.push_back(i);
    return {word.size(), std::move(e)};
}

const char* to_string(RepairMethod m) {
    switch (m) {
        case RepairMethod::local: return "local";
        case RepairMethod::global: return "global";
        case RepairMethod::failed: return "failed";
    }
    return "?";
}

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::ok: return "ok";
        case DecodeStatus::ambiguous: return "ambiguous";
        case DecodeStatus::inconsistent: return "inconsistent";
    }
    return "?";
}

const char* to_string(Repairability r) {
    switch (r) {
        case Repairability::local: return "local";
        case Repairability::global_only: return "global_only";
        case Repairability::lost: return "lost";
    }
    return "?";
}

namespace {

std::size_t erased_in(const Coords& support, const ErasedWord& word) {
    return static_cast<std::size_t>(
        std::count_if(support.begin(), support.end(), [&](std::size_t i) { return !word[i]; }));
}

/// Position in p.groups of the best group for target, or nullopt when no
/// group contains it.
std::optional<std::size_t> pick_group(const LocalityProfile& p, const ErasedWord& word, std::size_t target) {
    std::optional<std::size_t> best;
    std::size_t best_count = 0;
    for (std::size_t g = 0; g < p.groups.size(); ++g) {
        const auto& s = p.groups[g].support;
        if (std::find(s.begin(), s.end(), target) == s.end()) continue;
        const std::size_t count = erased_in(s, word);
        if (!best || count < best_count) {
            best = g;
            best_count = count;
        }
    }
    return best;
}

}  // namespace

RepairReport local_repair(const LinearCode& c, const LocalityProfile& p, const ErasedWord& word, std::size_t target) {
    if (word.size() != c.n()) fail(ErrorCode::LengthMismatch, "word length differs from n");
    if (target >= c.n()) fail(ErrorCode::InvalidArgument, "target outside [0, n)");
    if (word[target]) fail(ErrorCode::InvalidArgument, "target " + std::to_string(target) + " is not erased");
    const auto g = pick_group(p, word, target);
    if (!g) fail(ErrorCode::NoGroup, "no local group contains coordinate " + std::to_string(target));
    const Coords& s = p.groups[*g].support;
    const std::size_t count = erased_in(s, word);
    if (p.delta == 0 || count > p.delta - 1) {
        fail(ErrorCode::TooManyLocalErasures, "every group containing " + std::to_string(target) + " has at least " +
                                                  std::to_string(count) + " erasures; delta - 1 = " +
                                                  std::to_string(p.delta == 0 ? 0 : p.delta - 1));
    }

    const Field& f = c.field();
    const Matrix& gen = c.generator();
    const std::size_t local_rank = rank(gen.select_columns(s), f);

    // Greedy lexicographic read set spanning the local code.
    Coords read;
    Matrix cols(0, c.k());
    std::size_t have = 0;
    for (auto j : s) {
        if (have == local_rank) break;
        if (!word[j]) continue;
        Matrix trial = cols;
        trial.append_row(gen.column(j));
        if (rank(trial, f) > have) {
            cols = std::move(trial);
            read.push_back(j);
            ++have;
        }
    }
    if (have < local_rank) {
        fail(ErrorCode::TooManyLocalErasures, "unerased symbols of the group do not determine the target");
    }

    // Express column target through the read columns: cols^T * lambda = g_target.
    const auto lambda = solve_linear(cols.transpose(), gen.column(target), f);
    if (!lambda) fail(ErrorCode::TooManyLocalErasures, "target column is outside the span of its group");
    Elem value = 0;
    for (std::size_t t = 0; t < read.size(); ++t) value = f.add(value, f.mul((*lambda)[t], *word[read[t]]));

    RepairReport rep;
    rep.target = target;
    rep.method = RepairMethod::local;
    rep.symbols_read = std::move(read);
    rep.group_used = *g;
    rep.group_support = s;
    rep.value = value;
    return rep;
}

DecodeResult global_decode(const LinearCode& c, const ErasedWord& word) {
    if (word.size() != c.n()) fail(ErrorCode::LengthMismatch, "word length differs from n");
    Coords known;
    Vector values;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i]) {
            known.push_back(i);
            values.push_back(*word[i]);
        }
    }
    const Field& f = c.field();
    if (c.k() == 0) {
        const bool zero = std::all_of(values.begin(), values.end(), [](Elem v) { return v == 0; });
        if (!zero) return {DecodeStatus::inconsistent, std::nullopt};
        return {DecodeStatus::ok, Vector(c.n(), 0)};
    }
    const Matrix gk = c.generator().select_columns(known);
    const auto msg = solve_linear(gk.transpose(), values, f);
    if (!msg) return {DecodeStatus::inconsistent, std::nullopt};
    if (rank(gk, f) < c.k()) return {DecodeStatus::ambiguous, std::nullopt};
    return {DecodeStatus::ok, c.encode(*msg)};
}

std::vector<CoordinateClass> repairability(const LinearCode& c, const LocalityProfile& p,
                                           const ErasurePattern& pattern) {
    if (pattern.n != c.n()) fail(ErrorCode::LengthMismatch, "pattern length differs from n");
    ErasedWord word(c.n(), Elem{0});
    for (auto i : pattern.erased) word[i].reset();

    std::optional<bool> global_ok;
    auto decodes = [&] {
        if (!global_ok) {
            // Unique completion depends only on the pattern, so the zero word decides it.
            global_ok = global_decode(c, word).status == DecodeStatus::ok;
        }
        return *global_ok;
    };

    std::vector<CoordinateClass> out;
    for (auto i : pattern.erased) {
        const auto g = pick_group(p, word, i);
        Repairability kind;
        if (g && p.delta >= 1 && erased_in(p.groups[*g].support, word) <= p.delta - 1) {
            kind = Repairability::local;
        } else {
            kind = decodes() ? Repairability::global_only : Repairability::lost;
        }
        out.push_back({i, kind});
    }
    return out;
}

}  // namespace lrc
