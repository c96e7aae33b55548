#pragma once

// JSON forms of weights, elements, columns, walls, paths and graphs.
// Parsers throw ParseError on malformed input.

#include <json.hpp>
#include <string>

#include "ywall/adjoint.hpp"
#include "ywall/graph.hpp"
#include "ywall/paths.hpp"
#include "ywall/youngwall.hpp"

namespace ywall {

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const Pair& b);
Json to_json(const AffineElem& b);
Json to_json(const Lambda& lambda);
Json to_json(const Column& c);
Json to_json(const Wall& w);
Json to_json(const Path& p);
Json to_json(const CrystalGraph& g);

Weight weight_from_json(const Json& j);
Pair pair_from_json(const Json& j);
Lambda lambda_from_json(const Json& j);
Column column_from_json(const Json& j);
Wall wall_from_json(const Json& j);
Path path_from_json(const Json& j);
CrystalGraph graph_from_json(const Json& j);

// Parses text first; ParseError on invalid JSON.
Json parse_json(const std::string& text);

// One line per weight: "<count>\t<weight>", ordered by weight.
std::string multiplicity_text(const std::map<Weight, std::size_t>& table);

}  // namespace ywall
