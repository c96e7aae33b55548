#include "ywall/graph.hpp"

#include <deque>
#include <sstream>

namespace ywall {

CrystalGraph::CrystalGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, std::size_t root)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), root_(root) {
  if (!nodes_.empty() && root_ >= nodes_.size()) throw InvariantError("graph root out of range");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  out_.assign(nodes_.size(), {kNone, kNone});
  in_.assign(nodes_.size(), {kNone, kNone});
  for (const auto& e : edges_) {
    if (e.source >= nodes_.size() || e.target >= nodes_.size() || e.color < 0 || e.color > 1) {
      throw InvariantError("graph edge out of range");
    }
    auto& o = out_[e.source][e.color];
    auto& n = in_[e.target][e.color];
    if (o != kNone || n != kNone) {
      throw InvariantError("node " + nodes_[e.source].label + " has two " + std::to_string(e.color) +
                           "-edges");
    }
    o = e.target;
    n = e.source;
  }
}

std::optional<std::size_t> CrystalGraph::out(std::size_t node, int color) const {
  auto v = out_.at(node).at(color);
  if (v == kNone) return std::nullopt;
  return v;
}

std::optional<std::size_t> CrystalGraph::in(std::size_t node, int color) const {
  auto v = in_.at(node).at(color);
  if (v == kNone) return std::nullopt;
  return v;
}

namespace {

Weight project(const Weight& w, WeightMode mode) {
  return mode == WeightMode::kAffine ? w : as_weight(w.classical());
}

std::string describe(const CrystalGraph& g, std::size_t n) {
  return g.nodes()[n].label + " [" + to_string(g.nodes()[n].weight) + "]";
}

}  // namespace

GraphComparison graph_equal(const CrystalGraph& a, const CrystalGraph& b, WeightMode mode) {
  GraphComparison result;
  if (a.size() != b.size()) {
    result.mismatch = "node counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return result;
  }
  if (a.edges().size() != b.edges().size()) {
    result.mismatch =
        "edge counts differ: " + std::to_string(a.edges().size()) + " vs " + std::to_string(b.edges().size());
    return result;
  }
  if (a.size() == 0) {
    result.equal = true;
    return result;
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> to_b(a.size(), kUnset);
  std::vector<std::size_t> to_a(b.size(), kUnset);
  std::deque<std::size_t> queue;

  auto bind = [&](std::size_t x, std::size_t y, const std::string& via) -> bool {
    if (to_b[x] == kUnset && to_a[y] == kUnset) {
      if (project(a.nodes()[x].weight, mode) != project(b.nodes()[y].weight, mode)) {
        result.mismatch = "weight mismatch at " + describe(a, x) + " vs " + describe(b, y) + " reached " + via;
        return false;
      }
      to_b[x] = y;
      to_a[y] = x;
      queue.push_back(x);
      return true;
    }
    if (to_b[x] != y || to_a[y] != x) {
      result.mismatch = "traversals diverge at " + describe(a, x) + " vs " + describe(b, y) + " reached " + via;
      return false;
    }
    return true;
  };

  if (!bind(a.root(), b.root(), "as root")) return result;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    const std::size_t y = to_b[x];
    for (int i : kColors) {
      for (int dir = 0; dir < 2; ++dir) {
        auto nx = dir == 0 ? a.out(x, i) : a.in(x, i);
        auto ny = dir == 0 ? b.out(y, i) : b.in(y, i);
        const std::string op = std::string(dir == 0 ? "f" : "e") + std::to_string(i);
        if (nx.has_value() != ny.has_value()) {
          result.mismatch = op + " defined on only one side at " + describe(a, x) + " vs " + describe(b, y);
          return result;
        }
        if (nx && !bind(*nx, *ny, "via " + op + " from " + describe(a, x))) return result;
      }
    }
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (to_b[x] == kUnset) {
      result.mismatch = "node " + describe(a, x) + " not reachable from the root";
      return result;
    }
  }
  result.equal = true;
  return result;
}

std::map<Weight, std::size_t> multiplicities(const CrystalGraph& g, WeightMode mode) {
  std::map<Weight, std::size_t> out;
  for (const auto& n : g.nodes()) ++out[project(n.weight, mode)];
  return out;
}

CrystalGraph classical_projection(const CrystalGraph& g) {
  auto nodes = g.nodes();
  for (auto& n : nodes) n.weight = as_weight(n.weight.classical());
  return CrystalGraph(std::move(nodes), g.edges(), g.root());
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string to_dot(const CrystalGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto& n = g.nodes()[k];
    os << "  n" << k << " [label=\"" << dot_escape(n.label) << "\\n" << dot_escape(to_string(n.weight)) << "\"";
    if (k == g.root()) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  n" << e.source << " -> n" << e.target << " [label=\"" << e.color << "\""
       << (e.color == 0 ? ", color=red" : ", color=blue") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ywall
