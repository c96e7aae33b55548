#pragma once

// Rooted, colour-labelled crystal graphs: breadth-first generation from a
// seed, rooted comparison and export.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "ywall/crystal.hpp"
#include "ywall/error.hpp"
#include "ywall/weight.hpp"

namespace ywall {

struct GraphNode {
  std::string label;  // canonical element encoding
  Weight weight;
};

// source --color--> target means f_color(source) = target.
struct GraphEdge {
  std::size_t source = 0;
  int color = 0;
  std::size_t target = 0;

  friend constexpr auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

class CrystalGraph {
 public:
  CrystalGraph() = default;
  // Throws InvariantError if an edge endpoint is out of range or some node has
  // two outgoing (or two incoming) edges of one colour.
  CrystalGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, std::size_t root);

  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::size_t root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }

  std::optional<std::size_t> out(std::size_t node, int color) const;
  std::optional<std::size_t> in(std::size_t node, int color) const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::size_t root_ = 0;
  std::vector<std::array<std::size_t, 2>> out_;
  std::vector<std::array<std::size_t, 2>> in_;
};

enum class Direction { kDown, kUp, kBoth };

struct ComponentOptions {
  std::optional<int> depth;  // edge distance from the seed; nullopt = unbounded
  Direction direction = Direction::kBoth;
  std::size_t node_cap = 1'000'000;
  unsigned jobs = 1;
};

enum class WeightMode { kAffine, kClassical };

struct GraphComparison {
  bool equal = false;
  std::string mismatch;  // first difference found, empty when equal
};

// Simultaneous traversal from both roots along f- and e-edges of each colour.
// True iff the rooted coloured digraphs with weight labels coincide; node
// labels are ignored.
GraphComparison graph_equal(const CrystalGraph& a, const CrystalGraph& b,
                            WeightMode mode = WeightMode::kAffine);

std::map<Weight, std::size_t> multiplicities(const CrystalGraph& g,
                                             WeightMode mode = WeightMode::kAffine);

// Same graph with node weights projected to P_cl (null component dropped).
CrystalGraph classical_projection(const CrystalGraph& g);

std::string to_dot(const CrystalGraph& g, const std::string& name = "crystal");

namespace detail {

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  if (jobs <= 1 || n < 64) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < n; k += workers) fn(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

// Graph induced on the given elements by all f-edges between them.
// elements[root] becomes the root. Elements must be pairwise distinct.
template <CrystalOps C>
CrystalGraph induced_graph(const C& c, const std::vector<element_t<C>>& elements, std::size_t root,
                           unsigned jobs = 1) {
  std::vector<std::string> labels(elements.size());
  detail::parallel_for(elements.size(), jobs, [&](std::size_t k) { labels[k] = c.encode(elements[k]); });

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(labels[k], k);

  std::vector<std::array<std::optional<std::size_t>, 2>> targets(elements.size());
  detail::parallel_for(elements.size(), jobs, [&](std::size_t k) {
    for (int i : kColors) {
      if (auto y = c.f(i, elements[k])) {
        auto it = index.find(c.encode(*y));
        if (it != index.end()) targets[k][i] = it->second;
      }
    }
  });

  std::vector<GraphNode> nodes;
  nodes.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    nodes.push_back({std::move(labels[k]), as_weight(c.wt(elements[k]))});
  }
  std::vector<GraphEdge> edges;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (int i : kColors) {
      if (targets[k][i]) edges.push_back({k, i, *targets[k][i]});
    }
  }
  return CrystalGraph(std::move(nodes), std::move(edges), root);
}

// Breadth-first closure of `seed` under the selected Kashiwara operators,
// truncated at the requested edge distance. Nodes are numbered in discovery
// order (f before e, colour 0 before colour 1), which does not depend on the
// number of jobs. Throws ResourceLimitError past options.node_cap nodes.
template <CrystalOps C>
std::vector<element_t<C>> bfs_elements(const C& c, const element_t<C>& seed, const ComponentOptions& options) {
  using E = element_t<C>;
  std::vector<E> elems{seed};
  std::unordered_map<std::string, std::size_t> index{{c.encode(seed), 0}};
  std::vector<std::size_t> frontier{0};
  const bool down = options.direction != Direction::kUp;
  const bool up = options.direction != Direction::kDown;

  struct Step {
    std::optional<E> elem;
    std::string label;
  };

  for (int dist = 0; !frontier.empty() && (!options.depth || dist < *options.depth); ++dist) {
    std::vector<std::array<Step, 4>> steps(frontier.size());
    detail::parallel_for(frontier.size(), options.jobs, [&](std::size_t k) {
      const E& x = elems[frontier[k]];
      for (int i : kColors) {
        if (down) steps[k][i].elem = c.f(i, x);
        if (up) steps[k][2 + i].elem = c.e(i, x);
      }
      for (auto& s : steps[k]) {
        if (s.elem) s.label = c.encode(*s.elem);
      }
    });
    std::vector<std::size_t> next;
    for (auto& row : steps) {
      for (auto& s : row) {
        if (!s.elem) continue;
        if (index.contains(s.label)) continue;
        if (elems.size() >= options.node_cap) {
          throw ResourceLimitError("crystal component exceeds node cap of " +
                                   std::to_string(options.node_cap));
        }
        index.emplace(std::move(s.label), elems.size());
        next.push_back(elems.size());
        elems.push_back(std::move(*s.elem));
      }
    }
    frontier = std::move(next);
  }
  return elems;
}

template <CrystalOps C>
CrystalGraph component(const C& c, const element_t<C>& seed, const ComponentOptions& options = {}) {
  return induced_graph(c, bfs_elements(c, seed, options), 0, options.jobs);
}

}  // namespace ywall
