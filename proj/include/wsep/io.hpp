#pragma once

#include <string>

#include <json.hpp>

#include "wsep/gtiling.hpp"
#include "wsep/hypersimplex.hpp"
#include "wsep/sets.hpp"
#include "wsep/surgery.hpp"
#include "wsep/tropical.hpp"
#include "wsep/wiring.hpp"

namespace wsep {

using Json = nlohmann::json;

Json set_to_json(Mask x);
Mask set_from_json(const Json& j, int n);

Json to_json(const Collection& c);
Json to_json(const HSCollection& c);
Json to_json(const TPFunction& f);
Json to_json(const GTiling& t);
Json to_json(const Wiring& w);
Json to_json(const LegalPath& p);
Json to_json(const FlipCortege3& c, int n);
Json to_json(const FlipCortege4& c, int n);

// All readers throw Error("parse", ...) on malformed input.
Collection collection_from_json(const Json& j);
TPFunction tp_function_from_json(const Json& j);
GTiling tiling_from_json(const Json& j);
Wiring wiring_from_json(const Json& j);
LegalPath legal_path_from_json(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
Json parse_json(const std::string& text);
// JSON, or the digit shorthand (one set per line) when n <= 9; n_hint 0 takes n from the data.
Collection parse_collection(const std::string& text, int n_hint = 0);

}  // namespace wsep
