#pragma once

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "exclo/error.hpp"
#include "exclo/exgraph.hpp"
#include "exclo/graph.hpp"
#include "exclo/rational.hpp"

namespace exclo {

/// Default limit on materialized product vertices; EXCLO_VERTEX_CAP overrides.
inline constexpr std::size_t default_vertex_cap = std::size_t{1} << 15;

inline std::size_t vertex_cap() {
  if (const char* env = std::getenv("EXCLO_VERTEX_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return default_vertex_cap;
}

using TupleVertex = std::vector<std::size_t>;

/// Mixed-radix codec between tuple vertices and their lexicographic index
/// (first component most significant).
class ProductShape {
 public:
  ProductShape() = default;
  explicit ProductShape(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    require(!sizes_.empty(), "product needs at least one factor");
    strides_.assign(sizes_.size(), 1);
    for (std::size_t i = sizes_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * sizes_[i];
    total_ = strides_[0] * sizes_[0];
  }

  std::size_t k() const noexcept { return sizes_.size(); }
  std::size_t total() const noexcept { return total_; }
  std::size_t factor_size(std::size_t i) const { return sizes_.at(i); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }

  std::size_t component(std::size_t index, std::size_t i) const noexcept { return (index / strides_[i]) % sizes_[i]; }

  TupleVertex decode(std::size_t index) const {
    TupleVertex t(k());
    for (std::size_t i = 0; i < k(); ++i) t[i] = component(index, i);
    return t;
  }
  std::size_t encode(const TupleVertex& t) const {
    require(t.size() == k(), "tuple has wrong arity");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k(); ++i) {
      require(t[i] < sizes_[i], "tuple component out of range");
      idx += t[i] * strides_[i];
    }
    return idx;
  }

  friend bool operator==(const ProductShape&, const ProductShape&) = default;

 private:
  std::vector<std::size_t> sizes_, strides_;
  std::size_t total_ = 0;
};

namespace detail {

inline ProductShape checked_shape(std::span<const WeightedGraph> factors, std::size_t cap) {
  require(!factors.empty(), "product needs at least one factor");
  std::vector<std::size_t> sizes;
  long double total = 1;
  for (const auto& f : factors) {
    require(f.order() > 0, "product factor has no vertices");
    require(f.weights.size() == f.order(), "factor weights do not match its order");
    sizes.push_back(f.order());
    total *= static_cast<long double>(f.order());
  }
  if (total > static_cast<long double>(cap)) {
    std::ostringstream msg;
    msg.precision(0);
    msg << std::fixed << "product too large to materialize: requires " << total << " vertices, allowed " << cap;
    fail(ErrorCode::cap_exceeded, msg.str());
  }
  return ProductShape(std::move(sizes));
}

inline std::vector<Rational> product_weights(std::span<const WeightedGraph> factors, const ProductShape& shape) {
  std::vector<Rational> w(shape.total());
  for (std::size_t v = 0; v < shape.total(); ++v) {
    Rational p(1);
    for (std::size_t i = 0; i < shape.k(); ++i) p *= factors[i].weights[shape.component(v, i)];
    w[v] = p;
  }
  return w;
}

/// Layer i of the product: u ~ v iff (u_i, v_i) is an edge of factor i.
/// Each row is the union of the fibers over the factor-neighbors of u_i.
inline Graph product_layer(const WeightedGraph& factor, std::size_t i, const ProductShape& shape) {
  const std::size_t total = shape.total();
  std::vector<Bitset> fibers(factor.order(), Bitset(total));
  for (std::size_t v = 0; v < total; ++v) fibers[shape.component(v, i)].set(v);
  std::vector<Bitset> neighborhood(factor.order(), Bitset(total));
  for (std::size_t a = 0; a < factor.order(); ++a)
    factor.graph.neighbors(a).for_each([&](std::size_t b) { neighborhood[a] |= fibers[b]; });
  Graph layer(total);
  for (std::size_t v = 0; v < total; ++v) layer.mutable_row(v) = neighborhood[shape.component(v, i)];
  return layer;
}

}  // namespace detail

/// OR (co-normal) product J^k: the flat joint exclusivity graph.
struct JointGraph : WeightedGraph {
  ProductShape shape;
  std::vector<WeightedGraph> factors;
};

/// Multicolor product Γ^k: one edge layer per factor, layers may overlap.
struct ColoredMultigraph {
  std::vector<WeightedGraph> factors;
  ProductShape shape;
  std::vector<Graph> layers;
  std::vector<Rational> weights;

  std::size_t k() const noexcept { return factors.size(); }
  std::size_t order() const noexcept { return shape.total(); }
};

inline JointGraph or_product(std::span<const WeightedGraph> factors, std::size_t cap = vertex_cap()) {
  JointGraph j;
  j.shape = detail::checked_shape(factors, cap);
  j.factors.assign(factors.begin(), factors.end());
  j.weights = detail::product_weights(factors, j.shape);
  j.graph = Graph(j.shape.total());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Graph layer = detail::product_layer(factors[i], i, j.shape);
    for (std::size_t v = 0; v < j.shape.total(); ++v) j.graph.mutable_row(v) |= layer.neighbors(v);
  }
  return j;
}

inline ColoredMultigraph multicolor_product(std::span<const WeightedGraph> factors, std::size_t cap = vertex_cap()) {
  ColoredMultigraph g;
  g.shape = detail::checked_shape(factors, cap);
  g.factors.assign(factors.begin(), factors.end());
  g.weights = detail::product_weights(factors, g.shape);
  for (std::size_t i = 0; i < factors.size(); ++i) g.layers.push_back(detail::product_layer(factors[i], i, g.shape));
  return g;
}

/// k copies of the same factor.
inline std::vector<WeightedGraph> copies(const WeightedGraph& factor, std::size_t k) {
  return std::vector<WeightedGraph>(k, factor);
}

inline JointGraph flatten(const ColoredMultigraph& g) {
  JointGraph j;
  j.shape = g.shape;
  j.factors = g.factors;
  j.weights = g.weights;
  j.graph = Graph(g.order());
  for (const auto& layer : g.layers)
    for (std::size_t v = 0; v < g.order(); ++v) j.graph.mutable_row(v) |= layer.neighbors(v);
  return j;
}

/// Generators of a weight-preserving automorphism group of the OR product:
/// factor automorphisms acting on one coordinate, plus swaps of adjacent
/// identical factors.
inline std::vector<Permutation> product_automorphisms(const JointGraph& j) {
  const auto& shape = j.shape;
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < shape.k(); ++i) {
    const auto& f = j.factors.at(i);
    std::vector<Permutation> keep;
    for (auto& p : automorphisms(f.graph)) {
      bool preserves = true;
      for (std::size_t v = 0; v < f.order() && preserves; ++v) preserves = f.weights[v] == f.weights[p[v]];
      if (preserves) keep.push_back(std::move(p));
    }
    for (const auto& p : generating_set(keep)) {
      Permutation lifted(shape.total());
      for (std::size_t v = 0; v < shape.total(); ++v) {
        auto t = shape.decode(v);
        t[i] = p[t[i]];
        lifted[v] = shape.encode(t);
      }
      out.push_back(std::move(lifted));
    }
  }
  for (std::size_t i = 0; i + 1 < shape.k(); ++i) {
    if (!(j.factors[i] == j.factors[i + 1])) continue;
    Permutation swap(shape.total());
    for (std::size_t v = 0; v < shape.total(); ++v) {
      auto t = shape.decode(v);
      std::swap(t[i], t[i + 1]);
      swap[v] = shape.encode(t);
    }
    out.push_back(std::move(swap));
  }
  return out;
}

/// Generators of a subgroup of the stabilizer of vertex v in the group of
/// product_automorphisms: per-coordinate factor automorphisms fixing v's
/// component, plus transpositions of identical factors where v's
/// components agree.
inline std::vector<Permutation> product_stabilizer(const JointGraph& j, std::size_t v) {
  const auto& shape = j.shape;
  require(v < shape.total(), "vertex out of range");
  const auto fixed = shape.decode(v);
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < shape.k(); ++i) {
    const auto& f = j.factors.at(i);
    std::vector<Permutation> keep;
    for (auto& p : automorphisms(f.graph)) {
      bool ok = p[fixed[i]] == fixed[i];
      for (std::size_t a = 0; a < f.order() && ok; ++a) ok = f.weights[a] == f.weights[p[a]];
      if (ok) keep.push_back(std::move(p));
    }
    for (const auto& p : generating_set(keep)) {
      Permutation lifted(shape.total());
      for (std::size_t u = 0; u < shape.total(); ++u) {
        auto t = shape.decode(u);
        t[i] = p[t[i]];
        lifted[u] = shape.encode(t);
      }
      out.push_back(std::move(lifted));
    }
  }
  for (std::size_t a = 0; a < shape.k(); ++a)
    for (std::size_t b = a + 1; b < shape.k(); ++b) {
      if (fixed[a] != fixed[b] || !(j.factors[a] == j.factors[b])) continue;
      Permutation swap(shape.total());
      for (std::size_t u = 0; u < shape.total(); ++u) {
        auto t = shape.decode(u);
        std::swap(t[a], t[b]);
        swap[u] = shape.encode(t);
      }
      out.push_back(std::move(swap));
    }
  return out;
}

namespace detail {
inline void check_color(const ColoredMultigraph& g, std::size_t color) {
  if (color < 1 || color > g.k())
    fail(ErrorCode::invalid_argument,
         "bad color index " + std::to_string(color) + " (colors are 1.." + std::to_string(g.k()) + ")");
}
}  // namespace detail

/// Monochromatic projection H_color (colors are 1-based).
inline const Graph& projection(const ColoredMultigraph& g, std::size_t color) {
  detail::check_color(g, color);
  return g.layers[color - 1];
}

/// Fiber V_v^color: indices of all tuple vertices whose color-th component is v.
inline std::vector<std::size_t> fiber(const ColoredMultigraph& g, std::size_t color, std::size_t v) {
  detail::check_color(g, color);
  require(v < g.shape.factor_size(color - 1), "factor vertex " + std::to_string(v) + " out of range");
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < g.order(); ++u)
    if (g.shape.component(u, color - 1) == v) out.push_back(u);
  return out;
}

/// Turns an odd cycle of H_color into an odd cycle of factor `color` that is
/// no longer. While two cycle vertices share a fiber, the cycle is cut at
/// that chord and the odd side kept; once all fibers differ the cycle is
/// projected onto its color-th components.
inline OddCycleWitness shrink_odd_cycle(const ColoredMultigraph& g, std::size_t color, OddCycleWitness cycle) {
  const Graph& h = projection(g, color);
  if (!is_odd_cycle(h, cycle))
    fail(ErrorCode::invalid_argument, "input is not an odd cycle of projection " + std::to_string(color));
  const std::size_t axis = color - 1;
  while (true) {
    const std::size_t len = cycle.size();
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t p = 0; p < len && !pair; ++p)
      for (std::size_t q = p + 1; q < len; ++q)
        if (g.shape.component(cycle[p], axis) == g.shape.component(cycle[q], axis)) {
          pair.emplace(p, q);
          break;
        }
    if (!pair) break;
    auto [p, q] = *pair;
    // Same-fiber vertices are never adjacent in H, so q - p >= 2 and
    // cycle[q] is adjacent to both cycle neighbors of cycle[p].
    OddCycleWitness next;
    if ((q - p - 1) % 2 == 0) {
      for (std::size_t i = p + 1; i <= q; ++i) next.push_back(cycle[i]);
    } else {
      for (std::size_t i = q; i != p; i = (i + 1) % len) next.push_back(cycle[i]);
    }
    cycle = std::move(next);
  }
  OddCycleWitness projected;
  for (auto v : cycle) projected.push_back(g.shape.component(v, axis));
  return projected;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const ColoredMultigraph& g) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : g.factors) {
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& w : f.weights) weights.push_back(w.str());
    factors.push_back({{"order", f.order()}, {"weights", weights}, {"edges", edge_list_json(f.graph)}});
  }
  nlohmann::json layers = nlohmann::json::array();
  for (std::size_t i = 0; i < g.k(); ++i) layers.push_back({{"color", i + 1}, {"edges", edge_list_json(g.layers[i])}});
  return {{"k", g.k()}, {"order", g.order()}, {"factors", factors}, {"layers", layers}};
}

inline nlohmann::json to_json(const JointGraph& j) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < j.order(); ++v) vertices.push_back({{"tuple", j.shape.decode(v)}, {"weight", j.weights[v].str()}});
  return {{"k", j.shape.k()}, {"order", j.order()}, {"vertices", vertices}, {"edges", edge_list_json(j.graph)}};
}

}  // namespace exclo
