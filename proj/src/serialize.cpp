#include "ywall/serialize.hpp"

#include "ywall/error.hpp"

namespace ywall {

namespace {

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

const Json& get_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("field \"") + key + "\" must be an array");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const Weight& w) { return {{"L0", w.c0}, {"L1", w.c1}, {"half_delta", w.cd}}; }

Json to_json(const Pair& b) { return {{"x", b.x}, {"y", b.y}}; }

Json to_json(const AffineElem& b) { return {{"x", b.base.x}, {"y", b.base.y}, {"m", b.grade}}; }

Json to_json(const Lambda& lambda) {
  if (lambda.is_infinity()) return "infinity";
  return {{"l", *lambda.level}, {"a", lambda.a}};
}

Json to_json(const Column& c) { return {{"s", c.s}, {"sbar", c.sbar}, {"tbar", c.tbar}}; }

Json to_json(const Wall& w) {
  Json cols = Json::array();
  for (const auto& c : w.columns) cols.push_back(to_json(c));
  return {{"lambda", to_json(w.lambda)}, {"columns", cols}};
}

Json to_json(const Path& p) {
  Json entries = Json::array();
  for (const auto& b : p.entries) entries.push_back(to_json(b));
  return {{"lambda", to_json(p.lambda)}, {"entries", entries}};
}

Json to_json(const CrystalGraph& g) {
  Json nodes = Json::array();
  for (std::size_t k = 0; k < g.size(); ++k) {
    nodes.push_back({{"id", k}, {"label", g.nodes()[k].label}, {"weight", to_json(g.nodes()[k].weight)}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.source, e.color, e.target}));
  return {{"nodes", nodes}, {"edges", edges}, {"root", g.root()}};
}

Weight weight_from_json(const Json& j) { return {get_int(j, "L0"), get_int(j, "L1"), get_int(j, "half_delta")}; }

Pair pair_from_json(const Json& j) { return {get_int(j, "x"), get_int(j, "y")}; }

Lambda lambda_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "infinity") return Lambda::infinity();
    throw ParseError("lambda must be {\"l\", \"a\"} or \"infinity\"");
  }
  try {
    return Lambda::finite(get_int(j, "l"), get_int(j, "a"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad lambda: ") + e.what());
  }
}

Column column_from_json(const Json& j) { return {get_int(j, "s"), get_int(j, "sbar"), get_int(j, "tbar")}; }

Wall wall_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda")) throw ParseError("wall needs \"lambda\"");
  Wall w{lambda_from_json(j.at("lambda")), {}};
  const auto model = ColumnModel::of(w.lambda);
  for (const auto& c : get_array(j, "columns")) {
    auto col = column_from_json(c);
    if (!model.is_valid(col)) throw ParseError("invalid column " + to_string(col));
    w.columns.push_back(col);
  }
  return trimmed(std::move(w));
}

Path path_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda")) throw ParseError("path needs \"lambda\"");
  Path p{lambda_from_json(j.at("lambda")), {}};
  for (const auto& e : get_array(j, "entries")) p.entries.push_back({{get_int(e, "x"), get_int(e, "y")}, get_int(e, "m")});
  return p;
}

CrystalGraph graph_from_json(const Json& j) {
  std::vector<GraphNode> nodes;
  for (const auto& n : get_array(j, "nodes")) {
    if (get_int(n, "id") != static_cast<int>(nodes.size())) throw ParseError("node ids must be 0, 1, 2, ...");
    if (!n.contains("label") || !n.at("label").is_string()) throw ParseError("node needs a string label");
    if (!n.contains("weight")) throw ParseError("node needs a weight");
    nodes.push_back({n.at("label").get<std::string>(), weight_from_json(n.at("weight"))});
  }
  std::vector<GraphEdge> edges;
  for (const auto& e : get_array(j, "edges")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("edge must be [source, colour, target]");
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError("edge entries must be non-negative");
    }
    edges.push_back({e[0].get<std::size_t>(), e[1].get<int>(), e[2].get<std::size_t>()});
  }
  const int root = get_int(j, "root");
  try {
    return CrystalGraph(std::move(nodes), std::move(edges), static_cast<std::size_t>(root));
  } catch (const InvariantError& e) {
    throw ParseError(std::string("bad graph: ") + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string multiplicity_text(const std::map<Weight, std::size_t>& table) {
  std::string out;
  for (const auto& [w, n] : table) out += std::to_string(n) + "\t" + to_string(w) + "\n";
  return out;
}

}  // namespace ywall
