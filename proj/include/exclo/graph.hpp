#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "exclo/bitset.hpp"
#include "exclo/error.hpp"
#include "exclo/rational.hpp"

namespace exclo {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph with one adjacency bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order) : rows_(order, Bitset(order)) {}

  std::size_t order() const noexcept { return rows_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(ErrorCode::invalid_argument, "self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
  }
  void remove_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u].reset(v);
    rows_[v].reset(u);
  }

  bool has_edge(std::size_t u, std::size_t v) const noexcept { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const noexcept { return rows_[v]; }
  Bitset& mutable_row(std::size_t v) noexcept { return rows_[v]; }
  std::size_t degree(std::size_t v) const noexcept { return rows_[v].count(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < order(); ++u)
      rows_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  bool is_regular(std::size_t d) const noexcept {
    for (std::size_t v = 0; v < order(); ++v)
      if (degree(v) != d) return false;
    return true;
  }

  /// Subgraph induced by `vertices`, renumbered in the given order.
  Graph induced(const std::vector<std::size_t>& vertices) const {
    Graph g(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b)
        if (has_edge(vertices[a], vertices[b])) g.add_edge(a, b);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(std::size_t v) const {
    if (v >= order())
      fail(ErrorCode::invalid_argument,
           "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
  }

  std::vector<Bitset> rows_;
};

/// Graph with an exact rational weight on every vertex.
struct WeightedGraph {
  Graph graph;
  std::vector<Rational> weights;

  std::size_t order() const noexcept { return graph.order(); }

  static WeightedGraph uniform(Graph g, Rational w) {
    WeightedGraph wg{std::move(g), {}};
    wg.weights.assign(wg.graph.order(), w);
    return wg;
  }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

inline Graph complete_graph(std::size_t m) {
  Graph g(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(std::size_t m) {
  require(m >= 3, "cycle graph needs at least 3 vertices");
  Graph g(m);
  for (std::size_t v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
  return g;
}

inline Graph path_graph(std::size_t m) {
  Graph g(m);
  for (std::size_t v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace exclo
