#pragma once

#include "riocf/cfrac.hpp"
#include "riocf/riordan.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace riocf {

using Json = nlohmann::ordered_json;

// {"name": str|null, "order": N, "ring": "Q"|"Q[y]", "rows": [["p/q"|"a + b*y", ...], ...]}
Json triangle_to_json(const Triangle& t, const std::optional<std::string>& name);
Triangle triangle_from_json(const Json& j);

// {"kind": "stieltjes"|"jacobi"|"thron",
//  "a": {"prefix": [...], "tail": "..."|[...]}, "b": {...}}
// Stieltjes carries no "b". A tail string is a one-step cycle.
Json cfrac_to_json(const CFrac& c);
CFrac cfrac_from_json(const Json& j);

Json sequence_to_json(const std::vector<YPoly>& terms);

// Parses the textual content of a JSON document; wraps nlohmann's own
// diagnostics in ParseError("BadJson").
Json parse_json_text(const std::string& text);

}  // namespace riocf
