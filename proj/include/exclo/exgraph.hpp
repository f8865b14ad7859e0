#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "exclo/error.hpp"
#include "exclo/graph.hpp"
#include "exclo/rational.hpp"
#include "exclo/scenario.hpp"

namespace exclo {

/// A joint-outcome event [outcome | context].
struct Event {
  std::size_t context = 0;
  JointOutcome outcome;

  std::string str() const { return "[" + outcome.str() + "|" + std::to_string(context) + "]"; }

  friend auto operator<=>(const Event&, const Event&) = default;
  friend bool operator==(const Event&, const Event&) = default;
};

inline bool are_exclusive(const Event& e, const Event& f, const CycleScenario& scenario) {
  if (e.context == f.context) return e.outcome != f.outcome;
  auto [a, b] = scenario.context(e.context);
  for (auto m : {a, b}) {
    Outcome oe{}, of{};
    scenario.outcome_of(e.context, e.outcome, m, oe);
    if (scenario.outcome_of(f.context, f.outcome, m, of) && oe != of) return true;
  }
  return false;
}

/// Vertex-weighted exclusivity graph of a correlation. Vertices are the
/// positive-probability events sorted by (context, outcome).
struct ExclusivityGraph : WeightedGraph {
  CycleScenario scenario = make_cycle_scenario(4);
  std::vector<Event> events;
};

inline ExclusivityGraph build_exclusivity_graph(const Correlation& corr) {
  ExclusivityGraph g;
  g.scenario = corr.scenario();
  for (std::size_t j = 0; j < corr.n(); ++j)
    for (std::size_t i = 0; i < outcomes_per_context; ++i)
      if (corr.table(j)[i] > Rational(0)) {
        g.events.push_back({j, JointOutcome::from_index(i)});
        g.weights.push_back(corr.table(j)[i]);
      }
  g.graph = Graph(g.events.size());
  for (std::size_t u = 0; u < g.events.size(); ++u)
    for (std::size_t v = u + 1; v < g.events.size(); ++v)
      if (are_exclusive(g.events[u], g.events[v], g.scenario)) g.graph.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Reference families
// ---------------------------------------------------------------------------

/// Möbius ladder on `order` vertices: a cycle plus all diameter chords.
inline Graph mobius_ladder(std::size_t order) {
  require(order % 2 == 0, "Möbius ladder needs an even order, got " + std::to_string(order));
  require(order >= 6, "Möbius ladder needs order >= 6");
  Graph g = cycle_graph(order);
  for (std::size_t v = 0; v < order / 2; ++v) g.add_edge(v, v + order / 2);
  return g;
}

/// Prism (circular ladder): two `half`-cycles joined by a perfect matching.
inline Graph prism(std::size_t half) {
  require(half >= 3, "prism needs half >= 3, got " + std::to_string(half));
  Graph g(2 * half);
  for (std::size_t v = 0; v < half; ++v) {
    g.add_edge(v, (v + 1) % half);
    g.add_edge(half + v, half + (v + 1) % half);
    g.add_edge(v, half + v);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

inline constexpr std::size_t isomorphism_vertex_limit = 64;

namespace detail {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<std::size_t> order;   // g-vertices in visiting order
  std::vector<std::size_t> anchor;  // already-mapped g-neighbor of order[i], or npos
  std::vector<std::vector<std::size_t>> g_sig, h_sig;
  std::vector<std::size_t> map_gh, map_hg;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  static std::vector<std::vector<std::size_t>> signatures(const Graph& x) {
    std::vector<std::vector<std::size_t>> sig(x.order());
    for (std::size_t v = 0; v < x.order(); ++v) {
      sig[v].push_back(x.degree(v));
      std::vector<std::size_t> nd;
      x.neighbors(v).for_each([&](std::size_t w) { nd.push_back(x.degree(w)); });
      std::sort(nd.begin(), nd.end());
      sig[v].insert(sig[v].end(), nd.begin(), nd.end());
    }
    return sig;
  }

  IsoSearch(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
    g_sig = signatures(g);
    h_sig = signatures(h);
    map_gh.assign(g.order(), npos);
    map_hg.assign(h.order(), npos);
    // BFS order so that every vertex after a component root has a mapped
    // neighbor restricting its candidates.
    std::vector<bool> seen(g.order(), false);
    for (std::size_t root = 0; root < g.order(); ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::size_t head = order.size();
      order.push_back(root);
      anchor.push_back(npos);
      while (head < order.size()) {
        std::size_t v = order[head++];
        g.neighbors(v).for_each([&](std::size_t w) {
          if (!seen[w]) {
            seen[w] = true;
            order.push_back(w);
            anchor.push_back(v);
          }
        });
      }
    }
  }

  bool consistent(std::size_t gv, std::size_t hv) const {
    if (map_hg[hv] != npos || g_sig[gv] != h_sig[hv]) return false;
    for (std::size_t gw = 0; gw < g.order(); ++gw) {
      std::size_t hw = map_gh[gw];
      if (hw != npos && g.has_edge(gv, gw) != h.has_edge(hv, hw)) return false;
    }
    return true;
  }

  /// Depth-first extension of the partial map; `on_complete` is called for
  /// every full isomorphism and returns true to stop the search.
  template <typename F>
  bool extend(std::size_t depth, F& on_complete) {
    if (depth == order.size()) return on_complete();
    std::size_t gv = order[depth];
    auto attempt = [&](std::size_t hv) {
      if (!consistent(gv, hv)) return false;
      map_gh[gv] = hv;
      map_hg[hv] = gv;
      bool stop = extend(depth + 1, on_complete);
      map_gh[gv] = npos;
      map_hg[hv] = npos;
      return stop;
    };
    if (anchor[depth] != npos) {
      const auto& cands = h.neighbors(map_gh[anchor[depth]]);
      for (std::size_t hv = cands.first(); hv < h.order(); hv = cands.next(hv + 1))
        if (attempt(hv)) return true;
      return false;
    }
    for (std::size_t hv = 0; hv < h.order(); ++hv)
      if (attempt(hv)) return true;
    return false;
  }
};

}  // namespace detail

/// Finds a vertex bijection g -> h preserving adjacency, if one exists.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > isomorphism_vertex_limit || h.order() > isomorphism_vertex_limit)
    fail(ErrorCode::scope_exceeded, "isomorphism scope exceeded: graphs limited to " +
                                        std::to_string(isomorphism_vertex_limit) + " vertices");
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  detail::IsoSearch search(g, h);
  auto gs = search.g_sig, hs = search.h_sig;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return std::nullopt;
  std::optional<std::vector<std::size_t>> found;
  auto keep = [&] {
    found = search.map_gh;
    return true;
  };
  search.extend(0, keep);
  return found;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

using Permutation = std::vector<std::size_t>;

/// Every automorphism of g (at most 64 vertices). Throws scope_exceeded once
/// more than `limit` have been found.
inline std::vector<Permutation> automorphisms(const Graph& g, std::size_t limit = 100000) {
  if (g.order() > isomorphism_vertex_limit)
    fail(ErrorCode::scope_exceeded, "isomorphism scope exceeded: graphs limited to " +
                                        std::to_string(isomorphism_vertex_limit) + " vertices");
  detail::IsoSearch search(g, g);
  std::vector<Permutation> all;
  auto keep = [&] {
    if (all.size() == limit)
      fail(ErrorCode::scope_exceeded, "automorphism group larger than " + std::to_string(limit));
    all.push_back(search.map_gh);
    return false;
  };
  search.extend(0, keep);
  return all;
}

/// A subset of `group` (assumed closed under composition) that generates it.
inline std::vector<Permutation> generating_set(const std::vector<Permutation>& group) {
  std::vector<Permutation> gens;
  std::set<Permutation> reached;
  for (const auto& p : group) {
    if (reached.count(p)) continue;
    gens.push_back(p);
    // Closure of the identity under the current generators.
    Permutation id(p.size());
    std::iota(id.begin(), id.end(), 0);
    reached = {id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier)
        for (const auto& gen : gens) {
          Permutation y(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) y[i] = gen[x[i]];
          if (reached.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Odd girth, bipartiteness, triangles
// ---------------------------------------------------------------------------

/// Simple odd cycle given as its vertex sequence; consecutive entries (and
/// last/first) are adjacent.
using OddCycleWitness = std::vector<std::size_t>;

/// True iff `cycle` is a simple cycle of odd length >= 3 in g.
inline bool is_odd_cycle(const Graph& g, const OddCycleWitness& cycle) {
  if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
  std::vector<bool> used(g.order(), false);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    std::size_t v = cycle[i];
    if (v >= g.order() || used[v]) return false;
    used[v] = true;
    if (!g.has_edge(v, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

/// Shortest odd cycle of g, or nullopt when g is bipartite. The witness is
/// the first minimum found scanning roots and then edges in index order.
inline std::optional<OddCycleWitness> odd_girth_witness(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::size_t best = none, best_root = 0, best_x = 0, best_y = 0;
  std::vector<std::size_t> dist(n), parent(n), queue;
  queue.reserve(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), none);
    queue.clear();
    dist[root] = 0;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t x = queue[head];
      // An edge inside layer d closes a walk of length 2d + 1.
      if (best != none && 2 * dist[x] + 1 >= best) break;
      bool closed = false;
      g.neighbors(x).for_each([&](std::size_t y) {
        if (dist[y] == none) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (!closed && dist[y] == dist[x] && x < y) {
          std::size_t len = 2 * dist[x] + 1;
          if (best == none || len < best) {
            best = len;
            best_root = root;
            best_x = x;
            best_y = y;
            closed = true;
          }
        }
      });
      if (closed) break;
    }
    if (best == 3) break;
  }
  if (best == none) return std::nullopt;

  // Recompute the BFS tree of the winning root to recover both paths.
  std::fill(dist.begin(), dist.end(), none);
  queue.clear();
  dist[best_root] = 0;
  queue.push_back(best_root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t x = queue[head];
    g.neighbors(x).for_each([&](std::size_t y) {
      if (dist[y] == none) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      }
    });
  }
  OddCycleWitness up_x, up_y;
  for (std::size_t v = best_x; v != best_root; v = parent[v]) up_x.push_back(v);
  for (std::size_t v = best_y; v != best_root; v = parent[v]) up_y.push_back(v);
  OddCycleWitness cycle{best_root};
  cycle.insert(cycle.end(), up_x.rbegin(), up_x.rend());
  cycle.insert(cycle.end(), up_y.begin(), up_y.end());
  return cycle;
}

inline std::optional<std::size_t> odd_girth(const Graph& g) {
  auto w = odd_girth_witness(g);
  if (!w) return std::nullopt;
  return w->size();
}

/// Two-coloring with the lowest-index vertex of every component on side 0,
/// or nullopt if g has an odd cycle.
inline std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> side(n, 2);
  std::vector<std::size_t> queue;
  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] != 2) continue;
    side[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t x = queue[head];
      bool ok = true;
      g.neighbors(x).for_each([&](std::size_t y) {
        if (side[y] == 2) {
          side[y] = static_cast<std::uint8_t>(1 - side[x]);
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline bool has_triangle(const Graph& g) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto& ru = g.neighbors(u);
    for (std::size_t v = ru.next(u + 1); v < g.order(); v = ru.next(v + 1))
      if (ru.intersects(g.neighbors(v))) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// DIMACS and JSON
// ---------------------------------------------------------------------------

inline void write_dimacs(std::ostream& os, const Graph& g, const std::string& comment = {}) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    for (std::string line; std::getline(lines, line);) os << "c " << line << '\n';
  }
  os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline Graph read_dimacs(std::istream& is) {
  std::optional<Graph> g;
  std::size_t declared_edges = 0, seen_edges = 0, line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    auto bad = [&](const std::string& why) {
      fail(ErrorCode::parse_error, "DIMACS line " + std::to_string(line_no) + ": " + why);
    };
    if (tag == "p") {
      std::string fmt;
      std::size_t v = 0;
      if (g) bad("duplicate problem line");
      if (!(ls >> fmt >> v >> declared_edges) || (fmt != "edge" && fmt != "col")) bad("expected 'p edge V E'");
      g.emplace(v);
    } else if (tag == "e") {
      if (!g) bad("edge before problem line");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) bad("expected 'e u v'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g->order() || static_cast<std::size_t>(v) > g->order())
        bad("vertex out of range");
      if (u == v) bad("self-loop");
      if (!g->has_edge(u - 1, v - 1)) ++seen_edges;
      g->add_edge(u - 1, v - 1);
    } else {
      bad("unknown line tag '" + tag + "'");
    }
  }
  if (!g) fail(ErrorCode::parse_error, "DIMACS input has no problem line");
  if (seen_edges != declared_edges)
    fail(ErrorCode::parse_error, "DIMACS header declares " + std::to_string(declared_edges) + " edges, found " +
                                     std::to_string(seen_edges));
  return *g;
}

inline nlohmann::json edge_list_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

inline nlohmann::json to_json(const ExclusivityGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < g.order(); ++v)
    vertices.push_back(
        {{"context", g.events[v].context}, {"outcome", g.events[v].outcome.str()}, {"weight", g.weights[v].str()}});
  return {{"n", g.scenario.n()}, {"vertices", vertices}, {"edges", edge_list_json(g.graph)}};
}

}  // namespace exclo
