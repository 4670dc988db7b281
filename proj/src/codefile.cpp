#include "lrc/codefile.hpp"

#include <fstream>
#include <sstream>

namespace lrc {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail(ErrorCode::ParseError, msg); }

const Json& field_of(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::uint64_t as_uint(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
        parse_fail(what + " must be a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

Coords coords_from_json(const Json& j, const std::string& what) {
    if (!j.is_array()) parse_fail(what + " must be an array of integers");
    Coords out;
    for (const auto& v : j) out.push_back(static_cast<std::size_t>(as_uint(v, what)));
    return out;
}

std::vector<int> modulus_from_json(const Json& j) {
    std::vector<int> out;
    if (!j.is_array()) parse_fail("modulus must be an array of 0/1 coefficients");
    for (const auto& v : j) out.push_back(static_cast<int>(as_uint(v, "modulus")));
    return out;
}

Json coords_json(const Coords& c) {
    Json a = Json::array();
    for (auto v : c) a.push_back(v);
    return a;
}

LocalityMode mode_from_string(const std::string& s) {
    if (s == "information") return LocalityMode::information;
    if (s == "all_symbol") return LocalityMode::all_symbol;
    parse_fail("unknown locality mode '" + s + "'");
}

}  // namespace

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (auto v : m.row(i)) row.push_back(v);
        a.push_back(std::move(row));
    }
    return a;
}

Json to_json(const LocalityProfile& p) {
    Json j;
    j["r"] = p.r;
    j["delta"] = p.delta;
    j["mode"] = to_string(p.mode);
    Json groups = Json::array();
    for (const auto& g : p.groups) {
        Json gj;
        gj["index"] = g.index;
        gj["support"] = coords_json(g.support);
        gj["local_check"] = to_json(g.local_check);
        groups.push_back(std::move(gj));
    }
    j["groups"] = std::move(groups);
    return j;
}

Json to_json(const ConstructionRecipe& r) {
    Json j;
    j["kind"] = r.kind;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["q"] = r.q;
    if (!r.modulus.empty()) j["modulus"] = r.modulus;
    if (!r.evaluation_points.empty()) j["evaluation_points"] = r.evaluation_points;
    Json part = Json::array();
    for (const auto& s : r.partition) part.push_back(coords_json(s));
    j["partition"] = std::move(part);
    if (r.global_parity_columns) j["global_parity_columns"] = coords_json(*r.global_parity_columns);
    if (r.attempt_used) j["attempt_used"] = *r.attempt_used;
    auto component = [](const ConstructionRecipe::Component& c) {
        Json cj;
        cj["q"] = c.q;
        if (!c.modulus.empty()) cj["modulus"] = c.modulus;
        cj["generator"] = to_json(c.generator);
        return cj;
    };
    if (r.inner) j["inner"] = component(*r.inner);
    if (r.outer) j["outer"] = component(*r.outer);
    return j;
}

Json to_json(const CodeFile& file) {
    const auto& c = file.code;
    Json j;
    j["format"] = 1;
    j["q"] = c.field().order();
    if (!c.field().is_prime()) j["modulus"] = c.field().modulus();
    j["n"] = c.n();
    j["k"] = c.k();
    j["generator"] = to_json(c.generator());
    if (!c.systematic_columns().empty()) j["systematic_columns"] = coords_json(c.systematic_columns());
    if (file.profile) j["locality"] = to_json(*file.profile);
    if (file.recipe) j["recipe"] = to_json(*file.recipe);
    return j;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) parse_fail("matrix must be an array of rows");
    std::vector<std::vector<Elem>> rows;
    std::size_t width = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array()) parse_fail("matrix row " + std::to_string(i) + " is not an array");
        if (i == 0) width = row.size();
        if (row.size() != width) parse_fail("matrix row " + std::to_string(i) + " has a different length");
        std::vector<Elem> r;
        for (const auto& v : row) {
            const auto x = as_uint(v, "matrix entry");
            if (x > 0xffffffffull) parse_fail("matrix entry out of range");
            r.push_back(static_cast<Elem>(x));
        }
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(rows, width);
}

LocalityProfile profile_from_json(const Json& j) {
    LocalityProfile p;
    p.r = static_cast<std::size_t>(as_uint(field_of(j, "r"), "r"));
    p.delta = static_cast<std::size_t>(as_uint(field_of(j, "delta"), "delta"));
    const auto& mode = field_of(j, "mode");
    if (!mode.is_string()) parse_fail("locality mode must be a string");
    p.mode = mode_from_string(mode.get<std::string>());
    const auto& groups = field_of(j, "groups");
    if (!groups.is_array()) parse_fail("locality groups must be an array");
    for (const auto& g : groups) {
        LocalGroup lg;
        lg.index = static_cast<std::size_t>(as_uint(field_of(g, "index"), "group index"));
        lg.support = coords_from_json(field_of(g, "support"), "group support");
        lg.local_check = matrix_from_json(field_of(g, "local_check"));
        if (lg.local_check.rows() == 0) lg.local_check = Matrix(0, lg.support.size());
        p.groups.push_back(std::move(lg));
    }
    return p;
}

ConstructionRecipe recipe_from_json(const Json& j) {
    ConstructionRecipe r;
    const auto& kind = field_of(j, "kind");
    if (!kind.is_string()) parse_fail("recipe kind must be a string");
    r.kind = kind.get<std::string>();
    if (j.contains("params")) {
        if (!j["params"].is_object()) parse_fail("recipe params must be an object");
        for (const auto& [k, v] : j["params"].items()) {
            if (!v.is_number_integer()) parse_fail("recipe parameter '" + k + "' must be an integer");
            r.params[k] = v.get<std::int64_t>();
        }
    }
    r.q = static_cast<std::uint32_t>(as_uint(field_of(j, "q"), "recipe q"));
    if (j.contains("modulus")) r.modulus = modulus_from_json(j["modulus"]);
    if (j.contains("evaluation_points")) {
        for (auto v : coords_from_json(j["evaluation_points"], "evaluation points"))
            r.evaluation_points.push_back(static_cast<Elem>(v));
    }
    if (j.contains("partition")) {
        if (!j["partition"].is_array()) parse_fail("partition must be an array");
        for (const auto& s : j["partition"]) r.partition.push_back(coords_from_json(s, "partition block"));
    }
    if (j.contains("global_parity_columns")) {
        r.global_parity_columns = coords_from_json(j["global_parity_columns"], "global parity columns");
    }
    if (j.contains("attempt_used")) r.attempt_used = static_cast<std::int64_t>(as_uint(j["attempt_used"], "attempt"));
    auto component = [](const Json& cj) {
        ConstructionRecipe::Component c;
        c.q = static_cast<std::uint32_t>(as_uint(field_of(cj, "q"), "component q"));
        if (cj.contains("modulus")) c.modulus = modulus_from_json(cj["modulus"]);
        c.generator = matrix_from_json(field_of(cj, "generator"));
        return c;
    };
    if (j.contains("inner")) r.inner = component(j["inner"]);
    if (j.contains("outer")) r.outer = component(j["outer"]);
    return r;
}

CodeFile codefile_from_json(const Json& j) {
    if (!j.is_object()) parse_fail("code file must be a JSON object");
    if (j.contains("format") && j["format"] != 1) parse_fail("unsupported code file format");
    const auto q = as_uint(field_of(j, "q"), "q");
    std::vector<int> modulus;
    if (j.contains("modulus")) modulus = modulus_from_json(j["modulus"]);
    const Field f = Field::make(q, modulus);
    Matrix g = matrix_from_json(field_of(j, "generator"));
    const auto n = as_uint(field_of(j, "n"), "n");
    const auto k = as_uint(field_of(j, "k"), "k");
    if (g.rows() == 0) g = Matrix(0, n);
    if (g.rows() != k || g.cols() != n) {
        parse_fail("generator is " + std::to_string(g.rows()) + " x " + std::to_string(g.cols()) + ", expected " +
                   std::to_string(k) + " x " + std::to_string(n));
    }
    std::optional<Coords> sys;
    if (j.contains("systematic_columns")) sys = coords_from_json(j["systematic_columns"], "systematic columns");
    try {
        CodeFile out{LinearCode::from_generator(std::move(g), f, sys), std::nullopt, std::nullopt};
        if (j.contains("locality")) out.profile = profile_from_json(j["locality"]);
        if (j.contains("recipe")) out.recipe = recipe_from_json(j["recipe"]);
        return out;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::RankDeficient) parse_fail(std::string("malformed generator: ") + e.what());
        throw;
    }
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

CodeFile read_codefile(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open code file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return codefile_from_json(parse_json_text(ss.str()));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lrc
