#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lrc/bounds.hpp"
#include "lrc/cli.hpp"
#include "lrc/codefile.hpp"
#include "lrc/constructions.hpp"
#include "lrc/locality.hpp"
#include "lrc/repair.hpp"
#include "lrc/simulate.hpp"

namespace py = pybind11;
using namespace lrc;

namespace {

/// Code files cross the boundary as plain dicts in the JSON layout.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

CodeFile load(const py::object& code) { return codefile_from_json(from_py(code)); }

py::object construction_dict(const Construction& c) {
    return to_py(to_json(CodeFile{c.code, c.profile, c.recipe}));
}

LocalityProfile profile_of(const CodeFile& f) {
    if (!f.profile) fail(ErrorCode::InvalidArgument, "code has no locality block");
    return *f.profile;
}

Limits limits(unsigned threads) {
    Limits l;
    l.threads = std::max(1u, threads);
    return l;
}

ErasedWord erased_word(const std::vector<std::optional<Elem>>& word, const LinearCode& c) {
    if (word.size() != c.n()) fail(ErrorCode::LengthMismatch, "word length differs from n");
    for (const auto& v : word)
        if (v && *v >= c.field().order()) fail(ErrorCode::InvalidArgument, "word entry outside the field");
    return word;
}

py::dict hierarchy_dict(const WeightHierarchy& h) {
    py::dict d;
    d["dims"] = h.dims;
    d["gaps"] = h.gaps;
    d["route"] = to_string(h.route);
    return d;
}

py::dict report_dict(const RepairReport& r) {
    py::dict d;
    d["target"] = r.target;
    d["method"] = to_string(r.method);
    d["symbols_read"] = r.symbols_read;
    d["group_used"] = r.group_used;
    d["group_support"] = r.group_support;
    d["value"] = r.value;
    d["note"] = r.note;
    return d;
}

py::dict certify(const py::object& code, unsigned threads) {
    const CodeFile f = load(code);
    std::optional<Coords> t;
    if (f.recipe) t = f.recipe->global_parity_columns;
    const auto cert = certify_optimality(f.code, profile_of(f), t, limits(threads));
    py::list violations;
    for (const auto& v : cert.violations) {
        py::dict e;
        e["kind"] = v.kind;
        e["group"] = v.group;
        e["message"] = v.message;
        violations.append(e);
    }
    py::dict d;
    d["profile_valid"] = cert.profile_valid;
    d["violations"] = violations;
    d["measured_d"] = cert.measured_d;
    d["bound_d"] = cert.bound_d;
    d["tight"] = cert.tight;
    d["soundness_violation"] = cert.soundness_violation;
    d["dual_hierarchy_check"] = to_string(cert.dual_hierarchy_check);
    d["dual_hierarchy"] = cert.dual_hierarchy ? py::object(hierarchy_dict(*cert.dual_hierarchy)) : py::none();
    d["structural_check"] = to_string(cert.structural_check);
    d["details"] = cert.details;
    d["invariant_violated"] = cert.invariant_violated();
    return d;
}

py::dict simulate(const py::object& code, std::size_t rounds, std::uint64_t seed, std::optional<std::size_t> fail_count,
                  std::optional<std::string> fail_probability, const std::string& policy, bool constrained_per_group,
                  bool adversarial, unsigned threads) {
    const CodeFile f = load(code);
    Scenario s;
    s.rounds = rounds;
    s.seed = seed;
    s.failures.count = fail_count;
    if (fail_probability) {
        const auto slash = fail_probability->find('/');
        if (slash == std::string::npos) fail(ErrorCode::InvalidParams, "fail_probability must look like a/b");
        s.failures.probability =
            Rational::make(std::stoll(fail_probability->substr(0, slash)), std::stoll(fail_probability->substr(slash + 1)));
    }
    s.policy = parse_policy(policy);
    s.constrained_per_group = constrained_per_group;
    s.adversarial = adversarial;
    const auto rep = run_scenario(f.code, profile_of(f), s, limits(threads));
    py::dict d;
    d["rounds_run"] = rep.rounds_run;
    d["failures"] = rep.failures;
    d["repairs_local"] = rep.repairs_local;
    d["repairs_global"] = rep.repairs_global;
    d["data_loss_events"] = rep.data_loss_events;
    d["rounds_with_loss"] = rep.rounds_with_loss;
    d["silent_corruptions"] = rep.silent_corruptions;
    d["classification_mismatches"] = rep.classification_mismatches;
    d["read_degree_histogram"] = rep.read_degree_histogram;
    py::list log;
    for (const auto& r : rep.log) {
        py::dict e;
        e["round"] = r.round;
        e["erased"] = r.erased;
        e["local"] = r.repaired_local;
        e["global"] = r.repaired_global;
        e["lost"] = r.lost;
        log.append(e);
    }
    d["log"] = log;
    return d;
}

}  // namespace

PYBIND11_MODULE(lrckit, m) {
    m.doc() = "Locally repairable codes: bounds, constructions, analysis, repair and simulation";

    // Messages start with the error code, e.g. "FieldTooSmall: ...".
    static PyObject* error = py::exception<Error>(m, "LrcError").release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    m.def("gopalan_bound", &gopalan_bound, py::arg("n"), py::arg("k"), py::arg("r"));
    m.def("locality_bound", &locality_bound, py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"));
    m.def("concat_bound", &concat_bound, py::arg("n1"), py::arg("k1"), py::arg("d1"), py::arg("n2"), py::arg("k2"));
    m.def("concat_classical_bounds", &concat_classical_bounds, py::arg("n1"), py::arg("d1"), py::arg("d2"),
          "(d1 d2, n1 d2): the product-distance lower bound and the trivial upper bound.");
    m.def(
        "asymptotic_concat_bound",
        [](std::int64_t rn, std::int64_t rd, std::int64_t in, std::int64_t id) {
            return asymptotic_concat_bound(Rational::make(rn, rd), Rational::make(in, id)).str();
        },
        py::arg("rate_num"), py::arg("rate_den"), py::arg("inner_num"), py::arg("inner_den"),
        "Exact 1 - R/R1 as a string such as '1/2'.");

    m.def(
        "rs_code",
        [](std::size_t n, std::size_t k, std::uint64_t q, const std::vector<int>& modulus) {
            const Field f = Field::make(q, modulus);
            return to_py(to_json(CodeFile{rs_code(n, k, f), std::nullopt, std::nullopt}));
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("modulus") = std::vector<int>{});
    m.def(
        "pyramid_code",
        [](std::size_t k, std::size_t r, std::size_t delta, std::size_t d, std::uint64_t q,
           const std::vector<int>& modulus) {
            return construction_dict(pyramid_code(k, r, delta, d, Field::make(q, modulus)));
        },
        py::arg("k"), py::arg("r"), py::arg("delta"), py::arg("d"), py::arg("q"), py::arg("modulus") = std::vector<int>{});
    m.def(
        "parity_split_code",
        [](std::size_t k, std::size_t r, std::size_t delta, std::uint64_t q, const std::vector<int>& modulus) {
            return construction_dict(parity_split_code(k, r, delta, Field::make(q, modulus)));
        },
        py::arg("k"), py::arg("r"), py::arg("delta"), py::arg("q"), py::arg("modulus") = std::vector<int>{});
    m.def(
        "random_code",
        [](std::size_t k, std::size_t r, std::size_t delta, std::size_t t, std::uint64_t q, std::uint64_t seed,
           std::size_t attempts, const std::vector<int>& modulus) {
            return construction_dict(random_all_symbol_code(k, r, delta, t, Field::make(q, modulus), seed, attempts));
        },
        py::arg("k"), py::arg("r"), py::arg("delta"), py::arg("t"), py::arg("q"), py::arg("seed"),
        py::arg("attempts") = 64, py::arg("modulus") = std::vector<int>{});
    m.def(
        "concatenate",
        [](const py::object& outer, const py::object& inner) {
            return construction_dict(concatenate(load(outer).code, load(inner).code));
        },
        py::arg("outer"), py::arg("inner"));
    m.def(
        "replay", [](const py::object& code) {
            const CodeFile f = load(code);
            if (!f.recipe) fail(ErrorCode::InvalidArgument, "code has no recipe");
            return construction_dict(replay(*f.recipe));
        },
        py::arg("code"));

    m.def(
        "encode", [](const py::object& code, const Vector& message) { return load(code).code.encode(message); },
        py::arg("code"), py::arg("message"));
    m.def(
        "min_distance",
        [](const py::object& code, unsigned threads) { return min_distance(load(code).code, limits(threads)); },
        py::arg("code"), py::arg("threads") = 1);
    m.def(
        "weight_hierarchy",
        [](const py::object& code, unsigned threads) {
            return hierarchy_dict(weight_hierarchy(load(code).code, limits(threads)));
        },
        py::arg("code"), py::arg("threads") = 1);
    m.def(
        "check_profile",
        [](const py::object& code) {
            const CodeFile f = load(code);
            std::vector<std::string> out;
            for (const auto& v : check_profile(f.code, profile_of(f))) out.push_back(v.kind + ": " + v.message);
            return out;
        },
        py::arg("code"), "Violation messages; empty when the locality block verifies.");
    m.def("certify", &certify, py::arg("code"), py::arg("threads") = 1);

    m.def(
        "local_repair",
        [](const py::object& code, const std::vector<std::optional<Elem>>& word, std::size_t target) {
            const CodeFile f = load(code);
            return report_dict(local_repair(f.code, profile_of(f), erased_word(word, f.code), target));
        },
        py::arg("code"), py::arg("word"), py::arg("target"), "Entries set to None are erased.");
    m.def(
        "global_decode",
        [](const py::object& code, const std::vector<std::optional<Elem>>& word) {
            const CodeFile f = load(code);
            const auto r = global_decode(f.code, erased_word(word, f.code));
            return py::make_tuple(to_string(r.status), r.codeword);
        },
        py::arg("code"), py::arg("word"), "(status, codeword or None).");
    m.def(
        "repairability",
        [](const py::object& code, const Coords& erased) {
            const CodeFile f = load(code);
            std::map<std::size_t, std::string> out;
            for (const auto& c : repairability(f.code, profile_of(f), ErasurePattern::make(f.code.n(), erased)))
                out[c.coordinate] = to_string(c.kind);
            return out;
        },
        py::arg("code"), py::arg("erased"));
    m.def("simulate", &simulate, py::arg("code"), py::arg("rounds"), py::arg("seed"),
          py::arg("fail_count") = std::nullopt, py::arg("fail_probability") = std::nullopt,
          py::arg("policy") = "local-first", py::arg("constrained_per_group") = false, py::arg("adversarial") = false,
          py::arg("threads") = 1);

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str());
        },
        py::arg("args"), "Runs the command-line tool in process; returns (exit code, stdout).");
}
