#pragma once

// Random generators and brute-force oracles shared by the unit and
// acceptance tests. Oracles deliberately avoid the library's algorithms.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "exclo/graph.hpp"
#include "exclo/rational.hpp"

namespace exclo::oracle {

using Rng = std::mt19937_64;

inline Graph random_graph(Rng& rng, std::size_t order, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(order);
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = u + 1; v < order; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Adjacency masks for graphs of at most 64 vertices.
inline std::vector<std::uint64_t> masks(const Graph& g) {
  std::vector<std::uint64_t> out(g.order(), 0);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v)
      if (u != v && g.has_edge(u, v)) out[u] |= std::uint64_t{1} << v;
  return out;
}

/// Clique number by enumerating every vertex subset (order <= 24).
inline std::size_t brute_clique_number(const Graph& g) {
  const std::size_t n = g.order();
  auto adj = masks(g);
  std::vector<std::uint8_t> is_clique(std::size_t{1} << n, 0);
  is_clique[0] = 1;
  std::size_t best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    std::uint64_t rest = s & (s - 1);
    is_clique[s] = is_clique[rest] && (adj[low] & rest) == rest;
    if (is_clique[s]) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
  }
  return best;
}

/// Maximum clique weight by subset enumeration (order <= 20).
inline Rational brute_max_weight(const Graph& g, const std::vector<Rational>& w) {
  const std::size_t n = g.order();
  auto adj = masks(g);
  Rational best(0);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    Rational sum(0);
    for (std::size_t v = 0; v < n && ok; ++v)
      if ((s >> v) & 1U) {
        ok = (adj[v] & s) == (s & ~(std::uint64_t{1} << v));
        sum += w[v];
      }
    if (ok && sum > best) best = sum;
  }
  return best;
}

/// Shortest odd cycle by trying every vertex subset of odd size and every
/// cyclic ordering of it (order <= 10). Returns nullopt when none exists.
inline std::optional<std::size_t> brute_odd_girth(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t len = 3; len <= n; len += 2) {
    std::vector<std::size_t> pick(len);
    // Subsets of size len in lexicographic order.
    std::vector<bool> sel(n, false);
    std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(len), true);
    do {
      std::size_t i = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (sel[v]) pick[i++] = v;
      // Fix the first vertex; permute the rest.
      std::vector<std::size_t> rest(pick.begin() + 1, pick.end());
      do {
        bool cycle = g.has_edge(pick[0], rest.front()) && g.has_edge(rest.back(), pick[0]);
        for (std::size_t j = 0; j + 1 < rest.size() && cycle; ++j) cycle = g.has_edge(rest[j], rest[j + 1]);
        if (cycle) return len;
      } while (std::next_permutation(rest.begin(), rest.end()));
    } while (std::prev_permutation(sel.begin(), sel.end()));
  }
  return std::nullopt;
}

/// Every permutation of the vertex set that preserves adjacency (order <= 8).
inline std::size_t brute_automorphism_count(const Graph& g) {
  std::vector<std::size_t> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < g.order() && ok; ++u)
      for (std::size_t v = u + 1; v < g.order() && ok; ++v) ok = g.has_edge(u, v) == g.has_edge(p[u], p[v]);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Circulant graph on Z_n with the given connection set (closed under
/// negation by construction).
inline Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v)
    for (auto s : jumps)
      if (s % n != 0) g.add_edge(v, (v + s) % n);
  return g;
}

}  // namespace exclo::oracle
