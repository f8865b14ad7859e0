#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "exclo/error.hpp"
#include "exclo/exgraph.hpp"
#include "exclo/graph.hpp"

namespace exclo {

/// Coloring of the edges of K_m with colors 1..k. Color 0 marks an edge not
/// yet colored; a coloring is complete when no such edge remains.
class EdgeColoring {
 public:
  EdgeColoring(std::size_t m, std::size_t k) : m_(m), k_(k), colors_(m * (m - (m > 0)) / 2, 0) {
    require(m >= 1, "coloring needs at least one vertex");
    require(k >= 1 && k <= 255, "color count must lie in 1..255");
  }

  std::size_t m() const noexcept { return m_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return colors_.size(); }

  /// Position of pair {u, v} in lexicographic pair order.
  std::size_t pair_index(std::size_t u, std::size_t v) const {
    require(u < m_ && v < m_ && u != v, "bad vertex pair");
    if (u > v) std::swap(u, v);
    return u * (2 * m_ - u - 1) / 2 + (v - u - 1);
  }

  std::size_t color(std::size_t u, std::size_t v) const { return colors_[pair_index(u, v)]; }
  void set(std::size_t u, std::size_t v, std::size_t c) {
    require(c <= k_, "color " + std::to_string(c) + " out of range 1.." + std::to_string(k_));
    colors_[pair_index(u, v)] = static_cast<std::uint8_t>(c);
  }

  std::size_t color_at(std::size_t index) const { return colors_.at(index); }
  void set_at(std::size_t index, std::size_t c) { colors_.at(index) = static_cast<std::uint8_t>(c); }

  bool complete() const noexcept {
    return std::none_of(colors_.begin(), colors_.end(), [](auto c) { return c == 0; });
  }

  /// Spanning subgraph of K_m formed by the edges of color c.
  Graph color_class(std::size_t c) const {
    Graph g(m_);
    for (std::size_t u = 0; u < m_; ++u)
      for (std::size_t v = u + 1; v < m_; ++v)
        if (color(u, v) == c) g.add_edge(u, v);
    return g;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::size_t m_, k_;
  std::vector<std::uint8_t> colors_;
};

namespace detail {
inline void check_bounds(const std::vector<std::size_t>& bounds, std::size_t k) {
  if (bounds.size() != k)
    fail(ErrorCode::invalid_argument,
         "expected " + std::to_string(k) + " cycle bounds, got " + std::to_string(bounds.size()));
  for (auto b : bounds)
    if (b < 3 || b % 2 == 0) fail(ErrorCode::invalid_argument, "cycle bound " + std::to_string(b) + " must be odd and >= 3");
}
}  // namespace detail

struct MonoOddCycle {
  std::size_t color;
  OddCycleWitness cycle;
};

/// First color (in increasing order) whose class has an odd cycle no longer
/// than its bound, with a shortest such cycle.
inline std::optional<MonoOddCycle> mono_odd_cycle(const EdgeColoring& c, const std::vector<std::size_t>& bounds) {
  detail::check_bounds(bounds, c.k());
  require(c.complete(), "coloring is incomplete");
  for (std::size_t color = 1; color <= c.k(); ++color) {
    auto w = odd_girth_witness(c.color_class(color));
    if (w && w->size() <= bounds[color - 1]) return MonoOddCycle{color, std::move(*w)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

struct ExhaustiveOptions {
  /// Skip the k^C(m,2) <= 2^26 feasibility guard.
  bool override_guard = false;
  /// Worker threads; 0 picks hardware concurrency.
  unsigned threads = 1;
};

struct ExhaustiveResult {
  /// True iff every coloring has a monochromatic odd cycle within bounds.
  bool holds = false;
  /// The first coloring (in enumeration order) without one.
  std::optional<EdgeColoring> counterexample;
  std::uint64_t colorings = 0;
};

inline constexpr double exhaustive_guard_log2 = 26;

/// Enumerates every k-coloring of K_m. Colorings are indexed in mixed radix
/// k over the pairs in lexicographic order, the last pair least significant.
/// When all bounds are equal the first pair is fixed to color 1.
inline ExhaustiveResult exhaustive_check(std::size_t m, std::size_t k, const std::vector<std::size_t>& bounds,
                                         const ExhaustiveOptions& opts = {}) {
  require(m >= 2, "exhaustive check needs m >= 2");
  detail::check_bounds(bounds, k);
  const std::size_t pairs = m * (m - 1) / 2;
  if (!opts.override_guard && static_cast<double>(pairs) * std::log2(static_cast<double>(k)) > exhaustive_guard_log2)
    fail(ErrorCode::scope_exceeded, "exhaustive check infeasible: " + std::to_string(k) + "^" + std::to_string(pairs) +
                                        " colorings exceed the 2^26 guard");
  const bool symmetric = std::all_of(bounds.begin(), bounds.end(), [&](auto b) { return b == bounds.front(); });
  const std::size_t free_pairs = symmetric ? pairs - 1 : pairs;
  require(static_cast<double>(free_pairs) * std::log2(static_cast<double>(k)) < 63, "coloring space too large");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free_pairs; ++i) total *= k;

  auto decode = [&](std::uint64_t index) {
    EdgeColoring c(m, k);
    for (std::size_t p = pairs; p-- > pairs - free_pairs;) {
      c.set_at(p, index % k + 1);
      index /= k;
    }
    if (symmetric) c.set_at(0, 1);
    return c;
  };

  // Workers take interleaved indices and stop once past the smallest
  // counterexample seen, so the reported one does not depend on scheduling.
  std::atomic<std::uint64_t> first_bad{total};
  std::atomic<std::uint64_t> checked{0};
  auto work = [&](std::uint64_t start, std::uint64_t stride) {
    std::uint64_t local = 0;
    for (std::uint64_t i = start; i < total && i < first_bad.load(std::memory_order_relaxed); i += stride) {
      ++local;
      if (!mono_odd_cycle(decode(i), bounds)) {
        std::uint64_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
    checked += local;
  };
  unsigned threads = opts.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opts.threads;
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  ExhaustiveResult r;
  r.colorings = checked.load();
  r.holds = first_bad.load() == total;
  if (!r.holds) r.counterexample = decode(first_bad.load());
  return r;
}

// ---------------------------------------------------------------------------
// Backtracking search
// ---------------------------------------------------------------------------

struct ColoringSearchOptions {
  std::chrono::milliseconds time_budget{std::chrono::minutes(5)};
};

namespace detail {

/// Whether the class of `color` has a walk of even length <= max_len from
/// u to v, i.e. adding edge uv closes an odd cycle of length <= max_len + 1.
inline bool even_walk_within(const EdgeColoring& c, std::size_t color, std::size_t u, std::size_t v,
                             std::size_t max_len) {
  const std::size_t m = c.m();
  std::vector<std::size_t> dist(2 * m, SIZE_MAX);  // state = vertex * 2 + parity
  std::vector<std::size_t> queue{u * 2};
  dist[u * 2] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t s = queue[head], x = s / 2, parity = s % 2;
    if (dist[s] == max_len) continue;
    for (std::size_t y = 0; y < m; ++y) {
      if (y == x || c.color(x, y) != color) continue;
      std::size_t t = y * 2 + (parity ^ 1U);
      if (dist[t] != SIZE_MAX) continue;
      dist[t] = dist[s] + 1;
      if (t == v * 2) return true;
      queue.push_back(t);
    }
  }
  return false;
}

}  // namespace detail

/// A complete k-coloring of K_m with no monochromatic odd cycle within
/// bounds, or nullopt when the backtracking closes. Pairs are colored in
/// lexicographic order, colors tried in increasing order.
inline std::optional<EdgeColoring> search_coloring(std::size_t m, std::size_t k, const std::vector<std::size_t>& bounds,
                                                   const ColoringSearchOptions& opts = {}) {
  require(m >= 2, "search needs m >= 2");
  detail::check_bounds(bounds, k);
  EdgeColoring c(m, k);
  std::vector<Edge> order;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) order.emplace_back(u, v);
  const auto deadline = std::chrono::steady_clock::now() + opts.time_budget;
  std::uint64_t steps = 0;

  std::vector<std::size_t> tried(order.size(), 0);
  std::size_t pos = 0;
  while (true) {
    if (pos == order.size()) return c;
    if ((++steps & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline)
      fail(ErrorCode::budget_exceeded, "budget exceeded: coloring search ran past its time budget");
    auto [u, v] = order[pos];
    c.set(u, v, 0);
    std::size_t next = tried[pos] + 1;
    while (next <= k && detail::even_walk_within(c, next, u, v, bounds[next - 1] - 1)) ++next;
    if (next > k) {
      tried[pos] = 0;
      if (pos == 0) return std::nullopt;
      --pos;
      continue;
    }
    tried[pos] = next;
    c.set(u, v, next);
    ++pos;
  }
}

// ---------------------------------------------------------------------------
// Bipartite construction and labelling
// ---------------------------------------------------------------------------

/// K_{2^k} colored by recursive doubling: two copies of the level k-1
/// coloring with every cross edge colored k. Equivalently, pair {u, v} gets
/// one plus the index of the highest bit where u and v differ.
inline EdgeColoring bipartite_coloring(std::size_t k) {
  require(k >= 1, "bipartite coloring needs k >= 1");
  require(k <= 12, "bipartite coloring limited to k <= 12");
  EdgeColoring c(std::size_t{1} << k, k);
  c.set(0, 1, 1);
  for (std::size_t level = 2; level <= k; ++level) {
    const std::size_t half = std::size_t{1} << (level - 1);
    for (std::size_t u = 0; u < half; ++u)
      for (std::size_t v = u + 1; v < half; ++v) c.set(u + half, v + half, c.color(u, v));
    for (std::size_t u = 0; u < half; ++u)
      for (std::size_t v = half; v < 2 * half; ++v) c.set(u, v, level);
  }
  return c;
}

/// Raised by label_vertices when some color class is not bipartite.
class NonBipartiteClass : public Error {
 public:
  NonBipartiteClass(std::size_t color, OddCycleWitness witness)
      : Error(ErrorCode::non_bipartite, "color class " + std::to_string(color) + " is not bipartite (odd cycle of length " +
                                            std::to_string(witness.size()) + ")"),
        color_(color),
        witness_(std::move(witness)) {}

  std::size_t color() const noexcept { return color_; }
  const OddCycleWitness& witness() const noexcept { return witness_; }

 private:
  std::size_t color_;
  OddCycleWitness witness_;
};

/// Bit (c - 1) of a vertex label is its side in the bipartition of color
/// class c. Labels are pairwise distinct: two vertices joined by a color-c
/// edge differ in bit c - 1.
inline std::vector<std::uint64_t> label_vertices(const EdgeColoring& c) {
  require(c.complete(), "coloring is incomplete");
  require(c.k() <= 64, "labels limited to 64 colors");
  std::vector<std::uint64_t> labels(c.m(), 0);
  for (std::size_t color = 1; color <= c.k(); ++color) {
    auto cls = c.color_class(color);
    auto sides = bipartition(cls);
    if (!sides) throw NonBipartiteClass(color, *odd_girth_witness(cls));
    for (std::size_t v = 0; v < c.m(); ++v)
      if ((*sides)[v]) labels[v] |= std::uint64_t{1} << (color - 1);
  }
  return labels;
}

// ---------------------------------------------------------------------------
// Rule-out engine
// ---------------------------------------------------------------------------

enum class Verdict { violates, no_violation, unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::violates: return "VIOLATES";
    case Verdict::no_violation: return "NO_VIOLATION";
    case Verdict::unknown: return "UNKNOWN";
  }
  return "?";
}

struct RuleOutVerdict {
  Verdict verdict;
  /// Short key naming the argument; the verify tag that replays it, if any.
  std::string basis;
  std::string tag;
  std::string reason;
};

/// Whether k uniform copies of the n-cycle PR box can violate the
/// exclusivity principle, decided from the known constructions and bounds.
inline RuleOutVerdict rule_out(std::size_t k, std::size_t n) {
  require(k >= 1, "k must be >= 1");
  require(n >= 4, "n must be >= 4");
  if (k == 1) return {Verdict::no_violation, "single-copy", "", "a single PR box graph is triangle-free, so every clique has weight <= 1"};
  if (n <= 5) {
    if (k == 2) return {Verdict::violates, "two-copy-k5", "T9", "two 5-cycles pair into a K_5 of weight 5/4"};
    return {Verdict::violates, "doubling", "R8",
            "doubling the two-copy K_5 " + std::to_string(k - 2) + " time(s) gives a clique of size " +
                std::to_string(5ULL << (k - 2)) + " > 2^" + std::to_string(k)};
  }
  if (k == 2) return {Verdict::no_violation, "two-copy-no-k5", "T10", "two copies contain no K_5 for n >= 6"};
  if (k == 3) return {Verdict::no_violation, "three-copy-no-k9", "T12", "three copies contain no K_9 for n >= 6"};
  const std::size_t girth = n % 2 == 0 ? n + 1 : n;
  if (k < 63 && girth > (std::size_t{1} << k) + 1)
    return {Verdict::no_violation, "odd-girth-pigeonhole", "T13-table",
            "odd girth " + std::to_string(girth) + " > 2^k + 1, so a K_{2^k+1} would need k bipartite classes on 2^k+1 "
            "vertices with distinct k-bit labels"};
  return {Verdict::unknown, "open", "", "no construction or bound settles 6 <= n <= 2^k + 1"};
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const EdgeColoring& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t u = 0; u < c.m(); ++u)
    for (std::size_t v = u + 1; v < c.m(); ++v) edges.push_back({u, v, c.color(u, v)});
  return {{"m", c.m()}, {"k", c.k()}, {"edges", edges}};
}

/// Parses a coloring and checks that every pair is colored exactly once.
inline EdgeColoring coloring_from_json(const nlohmann::json& j) {
  try {
    auto m = j.at("m").get<std::size_t>();
    auto k = j.at("k").get<std::size_t>();
    if (m < 1 || k < 1 || k > 255) fail(ErrorCode::parse_error, "coloring m or k out of range");
    EdgeColoring c(m, k);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) fail(ErrorCode::parse_error, "coloring entry must be [u, v, color]");
      auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>(), col = e[2].get<std::size_t>();
      if (u >= m || v >= m || u == v) fail(ErrorCode::parse_error, "coloring entry has a bad vertex pair");
      if (col < 1 || col > k) fail(ErrorCode::parse_error, "coloring entry has color out of range");
      if (c.color(u, v) != 0)
        fail(ErrorCode::parse_error, "pair {" + std::to_string(u) + ", " + std::to_string(v) + "} colored twice");
      c.set(u, v, col);
    }
    if (!c.complete()) fail(ErrorCode::parse_error, "coloring leaves some pair uncolored");
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("malformed coloring JSON: ") + e.what());
  }
}

}  // namespace exclo
