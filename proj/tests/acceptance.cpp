// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: lrc_acceptance <golden-dir>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/cli.hpp"
#include "lrc/constructions.hpp"
#include "lrc/locality.hpp"
#include "lrc/repair.hpp"
#include "lrc/rng.hpp"

using namespace lrc;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (problems.size() < 8) problems.push_back(what);
        }
    }
};

std::uint64_t smallest_prime_above(std::uint64_t x) {
    std::uint64_t p = x + 1;
    while (!is_prime(p)) ++p;
    return p;
}

std::int64_t as_i(std::size_t v) { return static_cast<std::int64_t>(v); }

/// Tally for the bound-soundness criterion: every code with a verified
/// profile that the suite measures.
struct Soundness {
    std::size_t codes = 0;
    std::vector<std::string> violations;

    void record(const std::string& name, const LinearCode& c, const LocalityProfile& p, std::size_t d) {
        if (!check_profile(c, p).empty()) return;
        ++codes;
        const auto bound = locality_bound(as_i(c.n()), as_i(c.k()), as_i(std::min(p.r, c.k())), as_i(p.delta));
        if (as_i(d) > bound) {
            violations.push_back(name + ": d = " + std::to_string(d) + " > " + std::to_string(bound));
        }
    }
} soundness;

/// Tight codes from the first two criteria, kept for the structure checks.
struct TightCode {
    std::string name;
    Construction built;
};
std::vector<TightCode> tight_codes;

std::string describe(const std::string& kind, std::size_t k, std::size_t r, std::size_t delta, std::size_t extra,
                     std::uint64_t q) {
    std::ostringstream s;
    s << kind << "(k=" << k << ",r=" << r << ",delta=" << delta;
    if (extra) s << ",d=" << extra;
    s << ",q=" << q << ")";
    return s.str();
}

Outcome pyramid_sweep() {
    Outcome o;
    std::size_t count = 0;
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t r = 1; r <= k; ++r) {
            for (std::size_t d = 2; d <= 4; ++d) {
                for (std::size_t delta = 2; delta <= d; ++delta) {
                    const auto q = smallest_prime_above(k + d - 1);
                    const std::string name = describe("pyramid", k, r, delta, d, q);
                    const Field f = Field::make(q);
                    auto built = pyramid_code(k, r, delta, d, f);
                    const auto& c = built.code;
                    const std::size_t expect_n = k + d - 1 + ((k + r - 1) / r - 1) * (delta - 1);
                    o.require(c.n() == expect_n, name + ": n = " + std::to_string(c.n()));
                    o.require(c.k() == k, name + ": k = " + std::to_string(c.k()));
                    const auto violations = check_profile(c, *built.profile);
                    o.require(violations.empty(), name + ": profile rejected");
                    const std::size_t measured = min_distance(c);
                    const auto bound = locality_bound(as_i(c.n()), as_i(k), as_i(r), as_i(delta));
                    o.require(as_i(measured) == bound, name + ": d = " + std::to_string(measured) +
                                                           ", bound " + std::to_string(bound));
                    soundness.record(name, c, *built.profile, measured);
                    if (as_i(measured) == bound && k % r == 0 && measured < r + 2 * delta - 1) {
                        tight_codes.push_back({name, std::move(built)});
                    }
                    ++count;
                }
            }
        }
    }
    o.summary = std::to_string(count) + " pyramid codes";
    return o;
}

Outcome parity_split_cases() {
    Outcome o;
    const std::vector<std::array<std::size_t, 3>> cases = {{4, 2, 3}, {3, 2, 2}, {6, 3, 3}, {6, 2, 2}};
    std::ostringstream sum;
    for (const auto& [k, r, delta] : cases) {
        const std::size_t n = (k + r - 1) / r * (r + delta - 1);
        const auto q = smallest_prime_above(n);
        const std::string name = describe("parity_split", k, r, delta, 0, q);
        auto built = parity_split_code(k, r, delta, Field::make(q));
        const auto& c = built.code;
        o.require(c.n() == n && c.k() == k, name + ": wrong shape");
        o.require(check_profile(c, *built.profile).empty(), name + ": profile rejected");
        o.require(built.profile->mode == LocalityMode::all_symbol, name + ": not all-symbol");
        const std::size_t measured = min_distance(c);
        const auto bound = locality_bound(as_i(n), as_i(k), as_i(r), as_i(delta));
        o.require(as_i(measured) == bound,
                  name + ": d = " + std::to_string(measured) + ", bound " + std::to_string(bound));
        const auto deficiency = as_i(r * ((k + r - 1) / r)) - as_i(k);
        o.require(as_i(measured) - as_i(delta) == deficiency, name + ": d - delta != r ceil(k/r) - k");
        soundness.record(name, c, *built.profile, measured);
        sum << " [" << n << "," << k << "," << measured << "]";
        if (as_i(measured) == bound && k % r == 0 && measured < r + 2 * delta - 1) {
            tight_codes.push_back({name, std::move(built)});
        }
    }
    o.summary = "codes" + sum.str();
    return o;
}

LinearCode random_code(Pcg32& rng, std::size_t n, std::size_t k, const Field& f) {
    while (true) {
        Matrix g(k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.below(f.order());
        if (rank(g, f) == k) return LinearCode::from_generator(g, f);
    }
}

Outcome wei_duality() {
    Outcome o;
    Pcg32 rng(20240601);
    const std::uint64_t qs[] = {2, 3, 4, 5};
    std::size_t flats_used = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto q = qs[rng.below(4)];
        const std::size_t n = 2 + rng.below(9);
        const std::size_t k = 1 + rng.below(static_cast<std::uint32_t>(std::min<std::size_t>(5, n - 1)));
        const Field f = Field::make(q);
        const LinearCode c = random_code(rng, n, k, f);
        const std::string name = "code " + std::to_string(trial) + " [" + std::to_string(n) + "," +
                                 std::to_string(k) + "] over " + f.name();
        const auto direct = weight_hierarchy_direct(c);
        const LinearCode dual = dual_code(c);
        WeightHierarchy dual_h;
        try {
            dual_h = weight_hierarchy_direct(dual);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            dual_h = weight_hierarchy_flats(dual);
            ++flats_used;
        }
        const auto derived = wei_dual_hierarchy(dual_h, n, k);
        o.require(derived == direct, name + ": direct and dual-derived hierarchies differ");
        const std::size_t d = min_distance(c);
        o.require(d == n + 1 - dual_h.gaps.back(), name + ": d != n + 1 - largest dual gap");
        o.require(direct.dims.front() == d, name + ": d_1 != d");
    }
    o.summary = "200 random codes (" + std::to_string(flats_used) + " dual hierarchies via flats)";
    return o;
}

Outcome soundness_report() {
    Outcome o;
    for (const auto& v : soundness.violations) o.require(false, v);
    o.summary = std::to_string(soundness.codes) + " codes with verified profiles, " +
                std::to_string(soundness.violations.size()) + " violations";
    return o;
}

std::vector<std::pair<std::string, OptimalityCertificate>> certificates;

void certify_tight_codes() {
    for (const auto& t : tight_codes) {
        certificates.emplace_back(
            t.name, certify_optimality(t.built.code, *t.built.profile, t.built.recipe.global_parity_columns));
    }
}

Outcome structure_checks() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& [name, cert] : certificates) {
        o.require(cert.tight, name + ": certifier disagrees on tightness");
        o.require(cert.structural_check == CheckStatus::pass,
                  name + ": structural check " + to_string(cert.structural_check) +
                      (cert.details.empty() ? "" : " (" + cert.details.front() + ")"));
        ++checked;
    }
    o.require(checked > 0, "no tight code with r | k and d < r + 2 delta - 1");
    o.summary = std::to_string(checked) + " tight codes with r | k and d < r + 2 delta - 1";
    return o;
}

Outcome dual_ladder() {
    Outcome o;
    std::size_t checked = 0, skipped = 0;
    for (const auto& [name, cert] : certificates) {
        if (cert.dual_hierarchy_check == CheckStatus::skipped) {
            ++skipped;
            continue;
        }
        o.require(cert.dual_hierarchy_check == CheckStatus::pass,
                  name + ": dual ladder " + to_string(cert.dual_hierarchy_check));
        ++checked;
    }
    o.require(checked > 0, "no dual hierarchy was enumerable");
    o.summary = std::to_string(checked) + " dual ladders checked, " + std::to_string(skipped) + " skipped";
    return o;
}

Outcome random_construction() {
    Outcome o;
    struct Case {
        std::size_t k, r, delta, t;
        std::uint64_t q;
    };
    std::ostringstream sum;
    for (const Case cs : {Case{4, 2, 2, 3, 17}, Case{3, 2, 2, 2, 13}}) {
        const Field f = Field::make(cs.q);
        std::size_t accepted = 0;
        const std::size_t n = cs.t * (cs.r + cs.delta - 1);
        const auto bound = locality_bound(as_i(n), as_i(cs.k), as_i(cs.r), as_i(cs.delta));
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const std::string name = "random(k=" + std::to_string(cs.k) + ",t=" + std::to_string(cs.t) +
                                     ",q=" + std::to_string(cs.q) + ",seed=" + std::to_string(seed) + ")";
            std::optional<Construction> built;
            try {
                built = random_all_symbol_code(cs.k, cs.r, cs.delta, cs.t, f, seed, 64);
            } catch (const RandomConstructionFailure&) {
                continue;
            }
            ++accepted;
            const auto& c = built->code;
            const Matrix local = vandermonde(evaluation_points(cs.r + cs.delta - 1, f), cs.delta - 1, f);
            const Matrix l = block_diagonal(std::vector<Matrix>(cs.t, local), built->recipe.partition, n);
            const auto gp =
                check_general_position(c.generator(), l, built->recipe.partition, cs.r, cs.k, f, std::uint64_t{1} << 40);
            o.require(gp.status == PositionStatus::pass && gp.exhaustive, name + ": not in general position");
            const auto def = max_deficient_support(c.generator(), cs.r, cs.delta, cs.k, f);
            o.require(as_i(def.size) <= def.bound, name + ": deficient support " + std::to_string(def.size) +
                                                        " exceeds " + std::to_string(def.bound));
            o.require(check_profile(c, *built->profile).empty(), name + ": profile rejected");
            const std::size_t d = min_distance(c);
            o.require(as_i(d) == bound,
                      name + ": d = " + std::to_string(d) + ", bound " + std::to_string(bound));
            soundness.record(name, c, *built->profile, d);
        }
        o.require(accepted >= 9, "only " + std::to_string(accepted) + "/10 seeds accepted for k=" +
                                     std::to_string(cs.k) + ", q=" + std::to_string(cs.q));
        if (sum.tellp() > 0) sum << "; ";
        sum << "[" << n << "," << cs.k << "," << bound << "] over GF(" << cs.q << "): " << accepted << "/10";
    }
    o.summary = sum.str();
    return o;
}

/// Iterates over every message of a code.
void for_each_message(const LinearCode& c, const std::function<void(const Vector&)>& fn) {
    Vector m(c.k(), 0);
    const Elem q = c.field().order();
    while (true) {
        fn(m);
        std::size_t i = 0;
        while (i < m.size() && ++m[i] == q) m[i++] = 0;
        if (i == m.size()) return;
    }
}

void for_each_subset(std::size_t n, std::size_t size, const std::function<void(const Coords&)>& fn) {
    Coords s(size);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == size) {
            fn(s);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            s[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

Outcome repair_cases() {
    Outcome o;
    std::ostringstream sum;
    const std::vector<std::pair<std::string, Construction>> codes = {
        {"pyramid [7,4,3] over GF(7)", pyramid_code(4, 2, 2, 3, Field::make(7))},
        {"parity_split [8,4,3] over GF(11)", parity_split_code(4, 2, 3, Field::make(11))},
    };
    for (const auto& [name, built] : codes) {
        const auto& c = built.code;
        const auto& p = *built.profile;
        const std::size_t d = min_distance(c);
        soundness.record(name, c, p, d);
        std::uint64_t messages = 0, local_ok = 0, pair_ok = 0, global_ok = 0;
        for_each_message(c, [&](const Vector& m) {
            ++messages;
            const Vector w = c.encode(m);
            for (std::size_t i = 0; i < c.n(); ++i) {
                const bool covered = std::any_of(p.groups.begin(), p.groups.end(), [&](const LocalGroup& g) {
                    return std::find(g.support.begin(), g.support.end(), i) != g.support.end();
                });
                if (!covered) continue;
                const auto word = erase(w, ErasurePattern::make(c.n(), {i}));
                const auto rep = local_repair(c, p, word, i);
                o.require(rep.method == RepairMethod::local && rep.value == w[i],
                          name + ": wrong local repair of " + std::to_string(i));
                o.require(rep.symbols_read.size() == p.r,
                          name + ": read " + std::to_string(rep.symbols_read.size()) + " symbols for " +
                              std::to_string(i));
                ++local_ok;
            }
            if (p.delta == 3) {
                for (const auto& g : p.groups) {
                    for (auto i : g.support) {
                        for (auto j : g.support) {
                            if (i == j) continue;
                            const auto word = erase(w, ErasurePattern::make(c.n(), {i, j}));
                            const auto rep = local_repair(c, p, word, i);
                            o.require(rep.value == w[i], name + ": in-group pair repair failed");
                            ++pair_ok;
                        }
                    }
                }
            }
            for (std::size_t e = 0; e + 1 <= d - 1; ++e) {
                for_each_subset(c.n(), e + 1, [&](const Coords& s) {
                    const auto res = global_decode(c, erase(w, ErasurePattern::make(c.n(), s)));
                    o.require(res.status == DecodeStatus::ok && *res.codeword == w,
                              name + ": global decode failed below d");
                    ++global_ok;
                });
            }
        });
        std::size_t ambiguous = 0;
        for_each_subset(c.n(), d, [&](const Coords& s) {
            const auto res = global_decode(c, erase(c.encode(Vector(c.k(), 1)), ErasurePattern::make(c.n(), s)));
            if (res.status == DecodeStatus::ambiguous) ++ambiguous;
        });
        o.require(ambiguous > 0, name + ": every d-erasure pattern decodes");
        if (sum.tellp() > 0) sum << "; ";
        sum << name << ": " << messages << " messages, " << local_ok << " single, " << pair_ok
            << " in-group pairs, " << global_ok << " global decodes, " << ambiguous << " ambiguous d-patterns";
    }
    o.summary = sum.str();
    return o;
}

Outcome concatenation() {
    Outcome o;
    const Field f2 = Field::make(2);
    const Field f4 = Field::make(4);
    const auto inner = LinearCode::from_generator(Matrix::from_rows({{1, 0, 1}, {0, 1, 1}}), f2);
    const auto outer = LinearCode::from_generator(Matrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}}), f4);
    const std::size_t d1 = min_distance(inner), d2 = min_distance(outer);
    o.require(d1 == 2 && d2 == 3, "component distances are not 2 and 3");
    const auto built = concatenate(outer, inner);
    const auto& c = built.code;
    o.require(c.n() == 12 && c.k() == 4, "concatenation is not [12,4]");
    const std::size_t d = min_distance(c);
    const auto [lo, hi] = concat_classical_bounds(3, as_i(d1), as_i(d2));
    const auto cb = concat_bound(3, 2, as_i(d1), 4, 2);
    o.require(as_i(d) >= lo && as_i(d) <= hi, "d outside the classical bracket");
    o.require(as_i(d) <= cb, "d above the concatenation bound");
    o.require(cb == locality_bound(12, 4, 2, 2), "concatenation bound differs from the locality bound");
    if (built.profile) soundness.record("concatenation", c, *built.profile, d);
    const auto asym = asymptotic_concat_bound(Rational::make(1, 4), Rational::make(1, 2));
    o.require(asym == Rational::make(1, 2), "asymptotic bound is " + asym.str());
    o.summary = "d = " + std::to_string(d) + " in [" + std::to_string(lo) + "," + std::to_string(hi) +
                "], bound " + std::to_string(cb) + ", asymptotic " + asym.str();
    return o;
}

std::vector<std::string> split_args(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string a;
    while (ss >> a) out.push_back(a);
    return out;
}

Outcome determinism(const std::filesystem::path& golden) {
    Outcome o;
    std::ifstream cases(golden / "cases.txt");
    if (!cases) {
        o.require(false, "cannot read " + (golden / "cases.txt").string());
        return o;
    }
    const auto cwd = std::filesystem::current_path();
    std::filesystem::current_path(golden);
    std::string line;
    std::size_t count = 0;
    while (std::getline(cases, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto bar = line.find('|');
        const auto bar2 = line.find('|', bar + 1);
        const std::string name = line.substr(0, bar);
        const int expected_code = std::stoi(line.substr(bar + 1, bar2 - bar - 1));
        const auto args = split_args(line.substr(bar2 + 1));
        std::ifstream expected_file(name + ".out");
        std::stringstream expected;
        expected << expected_file.rdbuf();
        std::string runs[3];
        int codes[3];
        for (int i = 0; i < 3; ++i) {
            std::vector<std::string> a = {"--threads", i == 2 ? "4" : "1"};
            a.insert(a.end(), args.begin(), args.end());
            std::ostringstream out, err;
            codes[i] = run_cli(a, out, err);
            runs[i] = out.str();
        }
        o.require(runs[0] == runs[1] && codes[0] == codes[1], name + ": two runs differ");
        o.require(runs[0] == runs[2] && codes[0] == codes[2], name + ": threads 1 and 4 differ");
        o.require(expected_file.good() && runs[0] == expected.str(), name + ": differs from golden file");
        o.require(codes[0] == expected_code, name + ": exit code " + std::to_string(codes[0]));
        ++count;
    }
    std::filesystem::current_path(cwd);
    o.summary = std::to_string(count) + " golden cases";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path golden = argc > 1 ? argv[1] : "tests/golden";
    std::map<int, std::string> lines;
    bool all = true;
    auto run = [&](int id, const std::string& title, const std::function<Outcome()>& fn) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all &= o.pass;
        char head[64];
        std::snprintf(head, sizeof head, "%s criterion %d: ", o.pass ? "PASS" : "FAIL", id);
        char tail[32];
        std::snprintf(tail, sizeof tail, " (%.1fs)", secs);
        std::string text = head + title + " -- " + o.summary + tail + "\n";
        for (const auto& p : o.problems) text += "    " + p + "\n";
        std::cerr << text << std::flush;
        lines[id] = text;
    };

    // Criterion 4 tallies every code measured elsewhere, and 5-6 reuse the
    // tight codes of 1-2, so the run order differs from the report order.
    run(1, "pyramid codes meet the locality bound", pyramid_sweep);
    run(2, "parity-splitting codes meet the locality bound", parity_split_cases);
    run(3, "Wei duality and the largest dual gap", wei_duality);
    run(7, "random all-symbol construction", random_construction);
    run(8, "local and global repair", repair_cases);
    run(9, "concatenated code bounds", concatenation);
    run(4, "no code beats the locality bound", soundness_report);
    run(5, "structure of optimal codes", [] {
        certify_tight_codes();
        return structure_checks();
    });
    run(6, "dual weight ladder of optimal codes", dual_ladder);
    run(10, "CLI determinism", [&] { return determinism(golden); });

    std::cerr << "\n";
    for (const auto& [id, text] : lines) std::cout << text;
    return all ? 0 : 1;
}
