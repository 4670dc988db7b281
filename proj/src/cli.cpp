#include "lrc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "lrc/bounds.hpp"
#include "lrc/codefile.hpp"
#include "lrc/constructions.hpp"
#include "lrc/repair.hpp"
#include "lrc/simulate.hpp"

namespace lrc {

namespace {

Json hierarchy_json(const WeightHierarchy& h) {
    Json j;
    j["dims"] = h.dims;
    j["gaps"] = h.gaps;
    j["route"] = to_string(h.route);
    return j;
}

Json error_json(const std::string& code, const std::string& message) {
    Json j;
    j["format"] = 1;
    j["error"] = {{"code", code}, {"message", message}};
    return j;
}

/// Comma-separated non-negative integers.
Coords parse_coords(const std::string& text) {
    Coords out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t pos = 0;
            const auto v = std::stoull(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "'" + item + "' is not a coordinate");
        }
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t pos = 0;
        if (slash == std::string::npos) {
            const auto v = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return Rational::make(v, 1);
        }
        const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        const auto num = std::stoll(a, &pos);
        if (pos != a.size()) throw std::invalid_argument(text);
        const auto den = std::stoll(b, &pos);
        if (pos != b.size()) throw std::invalid_argument(text);
        return Rational::make(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "'" + text + "' is not a rational number");
    }
}

std::vector<int> parse_modulus(const std::string& text) {
    std::vector<int> out;
    for (auto v : parse_coords(text)) out.push_back(static_cast<int>(v));
    return out;
}

/// Hierarchy without passing through the dual, so duality checks compare
/// two independent computations.
WeightHierarchy own_hierarchy(const LinearCode& c, const Limits& limits) {
    try {
        return weight_hierarchy_direct(c, limits);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
    return weight_hierarchy_flats(c, limits);
}

struct Options {
    unsigned threads = 1;

    // construct
    std::string kind;
    std::optional<std::size_t> n, k, r, delta, d, t;
    std::optional<std::uint64_t> q, seed;
    std::size_t attempts = 64;
    std::string modulus, inner, outer, output;

    // bound
    std::optional<std::int64_t> bn, bk, br, bdelta, n1, k1, d1, n2, k2, d2;
    std::string rate, inner_rate;

    // file commands
    std::string codefile;
    std::string word, erased;
    std::optional<std::size_t> target;
    std::size_t rounds = 1;
    std::optional<std::size_t> fail_count;
    std::string fail_prob;
    std::string policy = "local-first";
    bool constrained = false;
    bool adversarial = false;
};

Limits limits_of(const Options& o) {
    Limits l;
    l.threads = std::max(1u, o.threads);
    return l;
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) fail(ErrorCode::InvalidArgument, std::string("missing required option --") + flag);
    return *v;
}

Field field_of(const Options& o) {
    if (!o.q) fail(ErrorCode::InvalidArgument, "missing required option --q");
    return Field::make(*o.q, o.modulus.empty() ? std::vector<int>{} : parse_modulus(o.modulus));
}

int cmd_construct(const Options& o, std::ostream& out) {
    std::optional<Construction> built;
    if (o.kind == "rs") {
        const Field f = field_of(o);
        const std::size_t n = need(o.n, "n"), k = need(o.k, "k");
        ConstructionRecipe rec;
        rec.kind = "rs";
        rec.params = {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}};
        rec.q = f.order();
        rec.modulus = f.modulus();
        rec.evaluation_points = evaluation_points(n, f);
        built = Construction{rs_code(n, k, f), std::nullopt, rec};
    } else if (o.kind == "pyramid") {
        built = pyramid_code(need(o.k, "k"), need(o.r, "r"), need(o.delta, "delta"), need(o.d, "d"), field_of(o));
    } else if (o.kind == "parity-split") {
        built = parity_split_code(need(o.k, "k"), need(o.r, "r"), need(o.delta, "delta"), field_of(o));
    } else if (o.kind == "random") {
        if (!o.seed) fail(ErrorCode::InvalidArgument, "random construction requires --seed");
        built = random_all_symbol_code(need(o.k, "k"), need(o.r, "r"), need(o.delta, "delta"), need(o.t, "t"),
                                       field_of(o), *o.seed, o.attempts);
    } else if (o.kind == "concat") {
        if (o.inner.empty() || o.outer.empty()) fail(ErrorCode::InvalidArgument, "concat requires --inner and --outer");
        built = concatenate(read_codefile(o.outer).code, read_codefile(o.inner).code);
    } else {
        fail(ErrorCode::InvalidArgument, "unknown construction kind '" + o.kind + "'");
    }
    const CodeFile file{built->code, built->profile, built->recipe};
    const std::string text = dump(to_json(file));
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream f(o.output);
        if (!f) fail(ErrorCode::InvalidArgument, "cannot write '" + o.output + "'");
        f << text;
    }
    return 0;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    const CodeFile file = read_codefile(o.codefile);
    const LinearCode& c = file.code;
    const Limits lim = limits_of(o);
    Json j;
    j["format"] = 1;
    j["field"] = c.field().name();
    j["n"] = c.n();
    j["k"] = c.k();

    std::optional<std::size_t> d;
    try {
        d = min_distance(c, lim);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
    if (c.k() == 0) {
        j["d"] = nullptr;
        j["mds"] = nullptr;
    } else if (d) {
        j["d"] = *d;
        j["mds"] = *d == c.n() - c.k() + 1;
    } else {
        j["d"] = "skipped";
        j["mds"] = "skipped";
    }

    auto attempt = [&](auto fn) -> std::optional<WeightHierarchy> {
        try {
            return fn();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            return std::nullopt;
        }
    };
    const auto primal = attempt([&] { return own_hierarchy(c, lim); });
    const auto dual = attempt([&] { return own_hierarchy(dual_code(c), lim); });
    j["hierarchy"] = primal ? hierarchy_json(*primal) : Json("skipped");
    j["dual_hierarchy"] = dual ? hierarchy_json(*dual) : Json("skipped");

    bool violated = false;
    if (primal && dual) {
        const auto derived = wei_dual_hierarchy(*dual, c.n(), c.k());
        const bool ok = derived == *primal;
        violated |= !ok;
        j["wei_duality"] = ok ? "pass" : "fail";
    } else {
        j["wei_duality"] = "skipped";
    }
    if (dual && d && c.k() > 0) {
        const std::size_t largest = dual->gaps.back();
        const std::size_t predicted = c.n() + 1 - largest;
        const bool ok = predicted == *d;
        violated |= !ok;
        j["largest_dual_gap"] = {{"status", ok ? "pass" : "fail"}, {"gap", largest}, {"predicted_d", predicted}};
    } else {
        j["largest_dual_gap"] = {{"status", "skipped"}};
    }
    if (file.profile) {
        const auto v = check_profile(c, *file.profile);
        j["profile_valid"] = v.empty();
    }
    out << dump(j);
    return violated ? 1 : 0;
}

Json bound_line(const std::string& name, const std::vector<std::pair<std::string, Json>>& inputs) {
    Json j;
    j["name"] = name;
    Json in = Json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = std::move(in);
    return j;
}

int cmd_bound(const Options& o, std::ostream& out) {
    std::optional<std::int64_t> n = o.bn, k = o.bk, r = o.br, delta = o.bdelta;
    if (!o.codefile.empty()) {
        const CodeFile file = read_codefile(o.codefile);
        n = n.value_or(static_cast<std::int64_t>(file.code.n()));
        k = k.value_or(static_cast<std::int64_t>(file.code.k()));
        if (file.profile) {
            r = r.value_or(static_cast<std::int64_t>(std::min(file.profile->r, file.code.k())));
            delta = delta.value_or(static_cast<std::int64_t>(file.profile->delta));
        }
    }
    std::vector<Json> lines;
    if (n && k && r) {
        auto g = bound_line("gopalan", {{"n", *n}, {"k", *k}, {"r", *r}});
        g["value"] = gopalan_bound(*n, *k, *r);
        lines.push_back(std::move(g));
        if (delta) {
            auto l = bound_line("locality", {{"n", *n}, {"k", *k}, {"r", *r}, {"delta", *delta}});
            l["value"] = locality_bound(*n, *k, *r, *delta);
            lines.push_back(std::move(l));
        }
    }
    if (o.n1 && o.k1 && o.d1 && o.n2 && o.k2) {
        auto c = bound_line("concat", {{"n1", *o.n1}, {"k1", *o.k1}, {"d1", *o.d1}, {"n2", *o.n2}, {"k2", *o.k2}});
        c["value"] = concat_bound(*o.n1, *o.k1, *o.d1, *o.n2, *o.k2);
        lines.push_back(std::move(c));
    }
    if (o.n1 && o.d1 && o.d2) {
        auto c = bound_line("concat_classical", {{"n1", *o.n1}, {"d1", *o.d1}, {"d2", *o.d2}});
        const auto [lo, hi] = concat_classical_bounds(*o.n1, *o.d1, *o.d2);
        c["value"] = {lo, hi};
        lines.push_back(std::move(c));
    }
    if (!o.rate.empty() || !o.inner_rate.empty()) {
        if (o.rate.empty() || o.inner_rate.empty()) {
            fail(ErrorCode::InvalidArgument, "the asymptotic bound needs both --rate and --inner-rate");
        }
        const Rational a = parse_rational(o.rate), b = parse_rational(o.inner_rate);
        auto c = bound_line("asymptotic_concat", {{"rate", a.str()}, {"inner_rate", b.str()}});
        c["value"] = asymptotic_concat_bound(a, b).str();
        lines.push_back(std::move(c));
    }
    if (lines.empty()) {
        fail(ErrorCode::InvalidArgument,
             "no bound selected: give --n --k --r [--delta], a code file, --n1 --k1 --d1 --n2 --k2 [--d2], or "
             "--rate --inner-rate");
    }
    for (const auto& l : lines) out << l.dump() << "\n";
    return 0;
}

int cmd_certify(const Options& o, std::ostream& out) {
    const CodeFile file = read_codefile(o.codefile);
    if (!file.profile) fail(ErrorCode::InvalidArgument, "code file has no locality block");
    std::optional<Coords> t;
    if (file.recipe) t = file.recipe->global_parity_columns;
    const auto cert = certify_optimality(file.code, *file.profile, t, limits_of(o));

    Json j;
    j["format"] = 1;
    j["profile_valid"] = cert.profile_valid;
    Json v = Json::array();
    for (const auto& x : cert.violations) {
        Json e;
        e["kind"] = x.kind;
        e["group"] = x.group ? Json(*x.group) : Json(nullptr);
        e["message"] = x.message;
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    j["measured_d"] = cert.measured_d ? Json(*cert.measured_d) : Json("skipped");
    j["bound_d"] = cert.bound_d ? Json(*cert.bound_d) : Json(nullptr);
    j["tight"] = cert.tight;
    j["soundness_violation"] = cert.soundness_violation;
    j["dual_hierarchy_check"] = to_string(cert.dual_hierarchy_check);
    j["dual_hierarchy"] = cert.dual_hierarchy ? hierarchy_json(*cert.dual_hierarchy) : Json(nullptr);
    j["structural_check"] = to_string(cert.structural_check);
    j["details"] = cert.details;
    out << dump(j);
    return cert.profile_valid && !cert.invariant_violated() ? 0 : 1;
}

Json report_json(const RepairReport& r) {
    Json j;
    j["target"] = r.target;
    j["method"] = to_string(r.method);
    j["symbols_read"] = {{"count", r.symbols_read.size()}, {"coordinates", r.symbols_read}};
    j["group_used"] = r.group_used ? Json(*r.group_used) : Json(nullptr);
    j["group_support"] = r.group_support ? Json(*r.group_support) : Json(nullptr);
    j["value"] = r.value ? Json(*r.value) : Json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

/// Local repair when possible, otherwise the target's value from a global decode.
RepairReport repair_one(const CodeFile& file, const ErasedWord& word, std::size_t target,
                        const DecodeResult& decoded) {
    std::string note;
    if (file.profile) {
        try {
            return local_repair(file.code, *file.profile, word, target);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TooManyLocalErasures && e.code() != ErrorCode::NoGroup) throw;
            note = std::string(to_string(e.code())) + ": " + e.what();
        }
    } else {
        note = "no locality block";
    }
    RepairReport r;
    r.target = target;
    r.note = note;
    if (decoded.status == DecodeStatus::ok) {
        r.method = RepairMethod::global;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i]) r.symbols_read.push_back(i);
        r.value = (*decoded.codeword)[target];
    } else {
        r.method = RepairMethod::failed;
        r.note += (r.note.empty() ? "" : "; ") + std::string("global decode ") + to_string(decoded.status);
    }
    return r;
}

int cmd_repair(const Options& o, std::ostream& out) {
    const CodeFile file = read_codefile(o.codefile);
    const LinearCode& c = file.code;
    const Json wj = parse_json_text(o.word);
    if (!wj.is_array() || wj.size() != c.n()) {
        fail(ErrorCode::ParseError, "--word must be a JSON array of length n = " + std::to_string(c.n()));
    }
    ErasedWord word;
    for (const auto& v : wj) {
        if (v.is_null()) {
            word.emplace_back();
        } else if (v.is_number_unsigned() && v.get<std::uint64_t>() < c.field().order()) {
            word.emplace_back(static_cast<Elem>(v.get<std::uint64_t>()));
        } else {
            fail(ErrorCode::ParseError, "word entries must be field elements or null");
        }
    }
    for (auto i : parse_coords(o.erased)) {
        if (i >= c.n()) fail(ErrorCode::InvalidArgument, "erased coordinate outside [0, n)");
        word[i].reset();
    }
    const auto pattern = erasures_of(word);
    const auto decoded = global_decode(c, word);

    Json j;
    j["format"] = 1;
    j["erased"] = pattern.erased;
    if (o.target) {
        if (*o.target >= c.n() || word[*o.target]) {
            fail(ErrorCode::InvalidArgument, "target must be an erased coordinate");
        }
        const auto rep = report_json(repair_one(file, word, *o.target, decoded));
        for (const auto& [k, v] : rep.items()) j[k] = v;
    } else {
        Json reps = Json::array();
        for (auto i : pattern.erased) reps.push_back(report_json(repair_one(file, word, i, decoded)));
        j["repairs"] = std::move(reps);
    }
    j["global_decode"] = to_string(decoded.status);
    out << dump(j);
    return 0;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const CodeFile file = read_codefile(o.codefile);
    if (!file.profile) fail(ErrorCode::InvalidProfile, "code file has no locality block");
    if (!o.seed) fail(ErrorCode::InvalidArgument, "simulate requires --seed");
    Scenario s;
    s.rounds = o.rounds;
    s.seed = *o.seed;
    s.policy = parse_policy(o.policy);
    s.constrained_per_group = o.constrained;
    s.adversarial = o.adversarial;
    if (o.fail_count) s.failures.count = *o.fail_count;
    if (!o.fail_prob.empty()) s.failures.probability = parse_rational(o.fail_prob);
    const auto rep = run_scenario(file.code, *file.profile, s, limits_of(o));

    Json j;
    j["format"] = 1;
    Json sc;
    sc["rounds"] = s.rounds;
    if (s.failures.count) sc["fail_count"] = *s.failures.count;
    if (s.failures.probability) sc["fail_probability"] = s.failures.probability->str();
    sc["seed"] = s.seed;
    sc["policy"] = to_string(s.policy);
    sc["constrained_per_group"] = s.constrained_per_group;
    sc["adversarial"] = s.adversarial;
    j["scenario"] = std::move(sc);
    j["rounds_run"] = rep.rounds_run;
    j["failures"] = rep.failures;
    j["repairs_local"] = rep.repairs_local;
    j["repairs_global"] = rep.repairs_global;
    j["data_loss_events"] = rep.data_loss_events;
    j["rounds_with_loss"] = rep.rounds_with_loss;
    j["silent_corruptions"] = rep.silent_corruptions;
    j["classification_mismatches"] = rep.classification_mismatches;
    Json hist = Json::object();
    for (const auto& [deg, count] : rep.read_degree_histogram) hist[std::to_string(deg)] = count;
    j["read_degree_histogram"] = std::move(hist);
    Json log = Json::array();
    for (const auto& r : rep.log) {
        log.push_back({{"round", r.round},
                       {"erased", r.erased},
                       {"local", r.repaired_local},
                       {"global", r.repaired_global},
                       {"lost", r.lost}});
    }
    j["log"] = std::move(log);
    out << dump(j);
    return rep.silent_corruptions == 0 && rep.classification_mismatches == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally repairable code toolkit", "lrckit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--threads", o.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));

    auto* construct = app.add_subcommand("construct", "Build a code and write its code file");
    construct->add_option("--kind", o.kind, "rs | pyramid | parity-split | random | concat")
        ->required()
        ->check(CLI::IsMember({"rs", "pyramid", "parity-split", "random", "concat"}));
    construct->add_option("--n", o.n, "Length (rs)");
    construct->add_option("--k", o.k, "Dimension");
    construct->add_option("--r", o.r, "Locality");
    construct->add_option("--delta", o.delta, "Local distance");
    construct->add_option("--d", o.d, "Distance of the base MDS code (pyramid)");
    construct->add_option("--t", o.t, "Number of local groups (random)");
    construct->add_option("--q", o.q, "Field order");
    construct->add_option("--modulus", o.modulus, "GF(2^m) modulus coefficients, low to high, comma separated");
    construct->add_option("--seed", o.seed, "Seed (random)");
    construct->add_option("--attempts", o.attempts, "Sampling attempts (random)");
    construct->add_option("--inner", o.inner, "Inner code file (concat)");
    construct->add_option("--outer", o.outer, "Outer code file (concat)");
    construct->add_option("-o,--output", o.output, "Write the code file here instead of stdout");

    auto* analyze = app.add_subcommand("analyze", "Distance, weight hierarchies and duality checks");
    analyze->add_option("codefile", o.codefile)->required();

    auto* bound = app.add_subcommand("bound", "Evaluate distance bounds, one JSON object per line");
    bound->add_option("codefile", o.codefile, "Take n, k, r, delta from a code file");
    bound->add_option("--n", o.bn);
    bound->add_option("--k", o.bk);
    bound->add_option("--r", o.br);
    bound->add_option("--delta", o.bdelta);
    bound->add_option("--n1", o.n1);
    bound->add_option("--k1", o.k1);
    bound->add_option("--d1", o.d1);
    bound->add_option("--n2", o.n2);
    bound->add_option("--k2", o.k2);
    bound->add_option("--d2", o.d2);
    bound->add_option("--rate", o.rate, "Overall rate R as a/b");
    bound->add_option("--inner-rate", o.inner_rate, "Inner rate R1 as a/b");

    auto* certify = app.add_subcommand("certify", "Check the locality profile and optimality theorems");
    certify->add_option("codefile", o.codefile)->required();

    auto* repair = app.add_subcommand("repair", "Repair erased symbols of a word");
    repair->add_option("codefile", o.codefile)->required();
    repair->add_option("--word", o.word, "JSON array; null marks an erasure")->required();
    repair->add_option("--erased", o.erased, "Additional erased coordinates, comma separated");
    repair->add_option("--target", o.target, "Repair only this coordinate");

    auto* simulate = app.add_subcommand("simulate", "Seeded node-failure simulation");
    simulate->add_option("codefile", o.codefile)->required();
    simulate->add_option("--rounds", o.rounds)->check(CLI::PositiveNumber);
    auto* count = simulate->add_option("--fail-count", o.fail_count, "Nodes failing per round");
    auto* prob = simulate->add_option("--fail-prob", o.fail_prob, "Per-node failure probability a/b");
    count->excludes(prob);
    simulate->add_option("--seed", o.seed)->required();
    simulate->add_option("--policy", o.policy)->check(CLI::IsMember({"local-first", "global-only"}));
    simulate->add_flag("--constrained-per-group", o.constrained, "At most delta - 1 failures per group");
    simulate->add_flag("--adversarial", o.adversarial, "Fail a minimum-weight codeword support first");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        err << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        out << dump(error_json("InvalidArgument", e.what()));
        return 1;
    }

    try {
        if (construct->parsed()) return cmd_construct(o, out);
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (bound->parsed()) return cmd_bound(o, out);
        if (certify->parsed()) return cmd_certify(o, out);
        if (repair->parsed()) return cmd_repair(o, out);
        if (simulate->parsed()) {
            if (!o.fail_count && o.fail_prob.empty()) {
                fail(ErrorCode::InvalidArgument, "simulate needs --fail-count or --fail-prob");
            }
            return cmd_simulate(o, out);
        }
    } catch (const Error& e) {
        out << dump(error_json(to_string(e.code()), e.what()));
        return e.code() == ErrorCode::BudgetExceeded ? 2 : 1;
    } catch (const std::exception& e) {
        out << dump(error_json("InvalidArgument", e.what()));
        return 1;
    }
    return 1;
}

}  // namespace lrc
