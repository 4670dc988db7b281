#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/locality.hpp"

namespace lrc {

using Json = nlohmann::ordered_json;

/// The interchange unit of the command-line tool: a code plus its optional
/// locality profile and construction recipe.
struct CodeFile {
    LinearCode code;
    std::optional<LocalityProfile> profile;
    std::optional<ConstructionRecipe> recipe;
};

Json to_json(const Matrix& m);
Json to_json(const LocalityProfile& p);
Json to_json(const ConstructionRecipe& r);
Json to_json(const CodeFile& file);

/// Throws ParseError for malformed documents, including rank-deficient
/// generators (the message names the dependent rows).
Matrix matrix_from_json(const Json& j);
LocalityProfile profile_from_json(const Json& j);
ConstructionRecipe recipe_from_json(const Json& j);
CodeFile codefile_from_json(const Json& j);

CodeFile read_codefile(const std::string& path);
Json parse_json_text(const std::string& text);

/// Two-space indented document followed by a newline.
std::string dump(const Json& j);

}  // namespace lrc
