#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "exclo/bitset.hpp"
#include "exclo/error.hpp"
#include "exclo/graph.hpp"
#include "exclo/product.hpp"
#include "exclo/rational.hpp"

namespace exclo {

/// Sorted set of pairwise-adjacent vertices of some host graph, with the
/// sum of their host weights.
struct Clique {
  std::vector<std::size_t> vertices;
  Rational weight_sum;

  std::size_t size() const noexcept { return vertices.size(); }
  friend bool operator==(const Clique&, const Clique&) = default;
};

struct SolverOptions {
  /// Branch nodes allowed before the search aborts with budget_exceeded.
  std::uint64_t node_budget = 1'000'000'000;
  /// Automorphisms of the host graph. Each is verified before use; the
  /// search then branches on one root per vertex orbit.
  std::vector<Permutation> automorphisms;
  /// Optional: automorphisms fixing a given vertex (verified like the
  /// above). Used to branch once per stabilizer orbit below each root.
  std::function<std::vector<Permutation>(std::size_t)> stabilizer;
  /// Worker threads for root branches; 0 picks hardware concurrency.
  unsigned threads = 1;
};

struct SolverStats {
  std::uint64_t nodes = 0;
};

inline bool is_clique(const Graph& g, std::span<const std::size_t> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] >= g.order()) return false;
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || !g.has_edge(vertices[a], vertices[b])) return false;
  }
  return true;
}

/// Sorts and validates `vertices` as a clique of g and attaches its weight.
inline Clique make_clique(const WeightedGraph& g, std::vector<std::size_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (!is_clique(g.graph, vertices)) fail(ErrorCode::invalid_argument, "vertex set is not a clique");
  Clique c{std::move(vertices), Rational(0)};
  for (auto v : c.vertices) c.weight_sum += g.weights[v];
  return c;
}

/// True iff no vertex outside `c` is adjacent to all of it.
inline bool is_maximal_clique(const Graph& g, std::span<const std::size_t> c) {
  Bitset common(g.order());
  common.set_all();
  for (auto v : c) {
    common &= g.neighbors(v);
  }
  return common.none();
}

namespace detail {

/// Checks that every permutation is an automorphism of g and returns the
/// vertex orbits of the group they generate, each sorted.
inline std::vector<std::vector<std::size_t>> verified_orbits(const Graph& g, const std::vector<Permutation>& perms,
                                                             std::optional<std::size_t> fixed = std::nullopt) {
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : perms) {
    if (p.size() != n) fail(ErrorCode::invalid_argument, "automorphism has wrong length");
    std::vector<bool> hit(n, false);
    for (auto x : p) {
      if (x >= n || hit[x]) fail(ErrorCode::invalid_argument, "automorphism is not a permutation");
      hit[x] = true;
    }
    if (fixed && p[*fixed] != *fixed) fail(ErrorCode::invalid_argument, "stabilizer element moves its vertex");
    for (std::size_t u = 0; u < n; ++u) {
      if (g.degree(u) != g.degree(p[u])) fail(ErrorCode::invalid_argument, "permutation is not an automorphism");
      const auto& image_row = g.neighbors(p[u]);
      g.neighbors(u).for_each([&](std::size_t w) {
        if (!image_row.test(p[w])) fail(ErrorCode::invalid_argument, "permutation is not an automorphism");
      });
      parent[find(u)] = find(p[u]);
    }
  }
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (slot[r] == n) {
      slot[r] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(v);
  }
  return orbits;
}

/// Branch-and-bound maximum clique search over bitset candidate sets with a
/// greedy sequential coloring bound. Vertices are relabelled in degeneracy
/// order (densest core first) so that coloring in index order packs the
/// core into the low color classes.
///
/// Roots are processed orbit by orbit: the representative of orbit t only
/// looks at neighbors inside orbits 1..t. With trivial orbits this is plain
/// degeneracy-order root branching; with a vertex-transitive host it is a
/// single root.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, const SolverOptions& opts) : opts_(opts), n_(g.order()) {
    order_ = degeneracy_order(g);
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    rows_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i)
      g.neighbors(order_[i]).for_each([&](std::size_t w) { rows_[i].set(pos[w]); });
    words_ = n_ == 0 ? 0 : rows_[0].word_count();

    std::vector<std::vector<std::size_t>> orbits;
    if (opts.automorphisms.empty()) {
      for (std::size_t v = 0; v < n_; ++v) orbits.push_back({v});
    } else {
      orbits = verified_orbits(g, opts.automorphisms);
    }
    for (auto& orbit : orbits) {
      for (auto& v : orbit) v = pos[v];
      std::sort(orbit.begin(), orbit.end());
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.back() < b.back(); });
    Bitset allowed(n_);
    for (const auto& orbit : orbits) {
      for (auto v : orbit) allowed.set(v);
      roots_.push_back({orbit.back(), rows_[orbit.back()] & allowed, {}});
    }
    if (opts.stabilizer) {
      for (auto& root : roots_) {
        auto stab = opts.stabilizer(order_[root.vertex]);
        auto orbits2 = verified_orbits(g, stab, order_[root.vertex]);
        // The branches are only exhaustive if the root's candidate set is
        // invariant, i.e. the stabilizer respects the root orbits.
        for (const auto& p : stab)
          root.candidates.for_each([&](std::size_t v) {
            if (!root.candidates.test(pos[p[order_[v]]]))
              fail(ErrorCode::invalid_argument, "stabilizer does not preserve the root orbits");
          });
        std::vector<std::vector<std::size_t>> inside;
        for (auto& orbit : orbits2) {
          for (auto& v : orbit) v = pos[v];
          std::sort(orbit.begin(), orbit.end());
          if (root.candidates.test(orbit.front())) inside.push_back(std::move(orbit));
        }
        std::sort(inside.begin(), inside.end(), [](const auto& a, const auto& b) { return a.back() < b.back(); });
        Bitset allowed2(n_);
        for (const auto& orbit : inside) {
          for (auto v : orbit) allowed2.set(v);
          root.second_level.push_back({orbit.back(), root.candidates & rows_[orbit.back()] & allowed2});
        }
      }
    }
  }

  /// Largest clique with more than `floor` vertices, stopping as soon as one
  /// with `stop_at` vertices is found. Empty when none beats `floor`.
  std::vector<std::size_t> run(std::size_t floor, std::size_t stop_at) {
    best_size_ = floor;
    stop_at_ = stop_at;
    next_root_ = 0;
    done_ = false;
    nodes_ = 0;
    best_.clear();
    unsigned threads = opts_.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opts_.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(roots_.size(), 1)));
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back([this] { work(); });
      for (auto& th : pool) th.join();
    }
    if (failure_) std::rethrow_exception(failure_);
    stats_.nodes = nodes_;
    std::vector<std::size_t> out;
    for (auto v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  const SolverStats& stats() const noexcept { return stats_; }

 private:
  struct Branch {
    std::size_t vertex;
    Bitset candidates;
  };
  struct Root {
    std::size_t vertex;
    Bitset candidates;
    /// One branch per stabilizer orbit inside `candidates`; empty when no
    /// stabilizer is supplied.
    std::vector<Branch> second_level;
  };

  /// Per-thread search state.
  struct Worker {
    std::vector<std::size_t> current;
    std::uint64_t pending_nodes = 0;
  };

  static std::vector<std::size_t> degeneracy_order(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n), removal;
    std::vector<bool> gone(n, false);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    removal.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v)
        if (!gone[v] && (pick == n || deg[v] < deg[pick])) pick = v;
      gone[pick] = true;
      removal.push_back(pick);
      g.neighbors(pick).for_each([&](std::size_t w) {
        if (!gone[w]) --deg[w];
      });
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
  }

  void work() {
    Worker w;
    try {
      while (!done_.load(std::memory_order_relaxed)) {
        std::size_t r = next_root_.fetch_add(1);
        if (r >= roots_.size()) break;
        const Root& root = roots_[r];
        if (root.candidates.count() + 1 <= best_size_.load(std::memory_order_relaxed)) continue;
        w.current.assign(1, root.vertex);
        if (root.candidates.none()) {
          record(w);
        } else if (root.second_level.empty()) {
          Bitset cand = root.candidates;
          expand(w, cand, 1);
        } else {
          for (const auto& branch : root.second_level) {
            if (branch.candidates.count() + 2 <= best_size_.load(std::memory_order_relaxed)) continue;
            w.current.push_back(branch.vertex);
            Bitset cand = branch.candidates;
            if (cand.none()) {
              record(w);
            } else {
              expand(w, cand, 2);
            }
            w.current.pop_back();
            if (done_.load(std::memory_order_relaxed)) break;
          }
        }
      }
      flush_nodes(w);
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!failure_) failure_ = std::current_exception();
      done_ = true;
    }
  }

  void flush_nodes(Worker& w) {
    nodes_ += w.pending_nodes;
    w.pending_nodes = 0;
  }

  void record(Worker& w) {
    std::lock_guard lock(mutex_);
    if (w.current.size() > best_size_.load()) {
      best_size_ = w.current.size();
      best_ = w.current;
      if (best_size_.load() >= stop_at_) done_ = true;
    }
  }

  void expand(Worker& w, Bitset& cand, std::size_t depth) {
    if (++w.pending_nodes >= 4096) {
      flush_nodes(w);
      if (nodes_.load() > opts_.node_budget)
        fail(ErrorCode::budget_exceeded,
             "budget exceeded: clique search passed " + std::to_string(opts_.node_budget) + " branch nodes");
    }

    // Greedy coloring; only vertices whose color could lift the current
    // clique past the incumbent are kept for branching.
    std::size_t best = best_size_.load(std::memory_order_relaxed);
    const std::size_t kmin = best >= depth ? best - depth + 1 : 1;
    std::vector<std::pair<std::size_t, std::size_t>> branch;  // (vertex, color)
    Bitset uncolored = cand;
    Bitset cls(n_);
    auto* uw = uncolored.data();
    auto* qw = cls.data();
    std::size_t color = 0;
    std::size_t first_word = 0;
    while (true) {
      while (first_word < words_ && uw[first_word] == 0) ++first_word;
      if (first_word == words_) break;
      ++color;
      for (std::size_t x = first_word; x < words_; ++x) qw[x] = uw[x];
      for (std::size_t x = first_word; x < words_; ++x) {
        while (qw[x]) {
          std::size_t bit = static_cast<std::size_t>(std::countr_zero(qw[x]));
          std::size_t v = x * 64 + bit;
          Bitset::word_type mask = ~(Bitset::word_type{1} << bit);
          qw[x] &= mask;
          uw[x] &= mask;
          const auto* nw = rows_[v].data();
          for (std::size_t y = x; y < words_; ++y) qw[y] &= ~nw[y];
          if (color >= kmin) branch.emplace_back(v, color);
        }
      }
    }

    Bitset child(n_);
    for (std::size_t b = branch.size(); b-- > 0;) {
      auto [v, c] = branch[b];
      if (depth + c <= best_size_.load(std::memory_order_relaxed)) return;
      const auto* pw = cand.data();
      const auto* nw = rows_[v].data();
      auto* chw = child.data();
      bool any = false;
      for (std::size_t x = 0; x < words_; ++x) {
        chw[x] = pw[x] & nw[x];
        any |= chw[x] != 0;
      }
      w.current.push_back(v);
      if (!any) {
        record(w);
      } else {
        expand(w, child, depth + 1);
      }
      w.current.pop_back();
      if (done_.load(std::memory_order_relaxed)) return;
      cand.reset(v);
    }
  }

  SolverOptions opts_;
  SolverStats stats_;
  std::size_t n_ = 0, words_ = 0;
  std::vector<std::size_t> order_;
  std::vector<Bitset> rows_;
  std::vector<Root> roots_;

  std::mutex mutex_;
  std::vector<std::size_t> best_;
  std::atomic<std::size_t> best_size_{0};
  std::size_t stop_at_ = 0;
  std::atomic<std::size_t> next_root_{0};
  std::atomic<bool> done_{false};
  std::atomic<std::uint64_t> nodes_{0};
  std::exception_ptr failure_;
};

}  // namespace detail

struct MaxCliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;
  SolverStats stats;
};

/// Exact clique number with a maximal witness.
inline MaxCliqueResult max_clique(const Graph& g, const SolverOptions& opts = {}) {
  MaxCliqueResult r;
  if (g.order() == 0) return r;
  detail::CliqueSearch search(g, opts);
  r.witness = search.run(0, g.order());
  r.size = r.witness.size();
  r.stats = search.stats();
  return r;
}

/// A clique of exactly `s` vertices, or nullopt when none exists.
inline std::optional<std::vector<std::size_t>> find_clique_of_size(const Graph& g, std::size_t s,
                                                                   const SolverOptions& opts = {},
                                                                   SolverStats* stats = nullptr) {
  require(s >= 1, "clique size must be at least 1");
  if (s > g.order()) return std::nullopt;
  detail::CliqueSearch search(g, opts);
  auto found = search.run(s - 1, s);
  if (stats) *stats = search.stats();
  if (found.empty()) return std::nullopt;
  found.resize(s);
  return found;
}

// ---------------------------------------------------------------------------
// Weighted search
// ---------------------------------------------------------------------------

namespace detail {

/// Maximum-weight clique over integer weights, branch-and-bound with a
/// coloring bound (each color class contributes its heaviest vertex).
class WeightedCliqueSearch {
 public:
  WeightedCliqueSearch(const Graph& g, std::vector<std::int64_t> weights, const SolverOptions& opts)
      : g_(g), w_(std::move(weights)), opts_(opts) {}

  std::vector<std::size_t> run(std::int64_t floor) {
    best_weight_ = floor;
    Bitset all(g_.order());
    all.set_all();
    expand(all, 0);
    return best_;
  }

 private:
  void expand(Bitset cand, std::int64_t weight) {
    if (++nodes_ > opts_.node_budget)
      fail(ErrorCode::budget_exceeded,
           "budget exceeded: weighted clique search passed " + std::to_string(opts_.node_budget) + " branch nodes");
    if (cand.none()) {
      if (weight > best_weight_) {
        best_weight_ = weight;
        best_ = current_;
      }
      return;
    }
    // Order candidates by color class; bound[i] is the sum of class maxima
    // over the classes of the first i + 1 candidates.
    std::vector<std::size_t> verts;
    std::vector<std::int64_t> bound;
    Bitset uncolored = cand;
    std::int64_t acc = 0;
    while (uncolored.any()) {
      Bitset q = uncolored;
      std::int64_t heaviest = 0;
      std::vector<std::size_t> cls;
      for (std::size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
        cls.push_back(v);
        uncolored.reset(v);
        q.and_not(g_.neighbors(v));
        heaviest = std::max(heaviest, w_[v]);
      }
      acc += heaviest;
      for (auto v : cls) {
        verts.push_back(v);
        bound.push_back(acc);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (weight + bound[i] <= best_weight_) return;
      std::size_t v = verts[i];
      current_.push_back(v);
      expand(cand & g_.neighbors(v), weight + w_[v]);
      current_.pop_back();
      cand.reset(v);
    }
  }

  const Graph& g_;
  std::vector<std::int64_t> w_;
  SolverOptions opts_;
  std::uint64_t nodes_ = 0;
  std::int64_t best_weight_ = 0;
  std::vector<std::size_t> current_, best_;
};

}  // namespace detail

/// Maximum-weight clique whose weight exceeds `floor`, or nullopt.
inline std::optional<Clique> max_weight_clique(const WeightedGraph& g, Rational floor = Rational(0),
                                               const SolverOptions& opts = {}) {
  // Scale to integers over the common denominator; exact as long as it fits.
  std::int64_t common = floor.den();
  for (const auto& w : g.weights) {
    require(w > Rational(0), "clique weights must be positive");
    common = std::lcm(common, w.den());
    if (common > (std::int64_t{1} << 40)) throw std::overflow_error("weight denominators too large");
  }
  std::vector<std::int64_t> scaled;
  for (const auto& w : g.weights) scaled.push_back(w.num() * (common / w.den()));
  std::int64_t scaled_floor = floor.num() * (common / floor.den());
  detail::WeightedCliqueSearch search(g.graph, std::move(scaled), opts);
  auto best = search.run(scaled_floor);
  if (best.empty()) return std::nullopt;
  return make_clique(g, std::move(best));
}

// ---------------------------------------------------------------------------
// Violations
// ---------------------------------------------------------------------------

struct ViolationCertificate {
  Clique clique;
  Rational excess;
};

/// Smallest clique size l with l * w > 1 for uniform weight w.
inline std::size_t violation_threshold(Rational w) {
  require(w > Rational(0), "weight must be positive");
  // floor(1 / w) + 1
  return static_cast<std::size_t>(w.den() / w.num()) + 1;
}

inline std::optional<Rational> uniform_weight(const WeightedGraph& g) {
  if (g.weights.empty()) return std::nullopt;
  for (const auto& w : g.weights)
    if (w != g.weights.front()) return std::nullopt;
  return g.weights.front();
}

/// A clique of total weight above 1, if any. Uniform weights reduce this to
/// a fixed-size clique search; otherwise a maximum-weight search runs.
inline std::optional<ViolationCertificate> find_violation(const WeightedGraph& g, const SolverOptions& opts = {}) {
  for (const auto& w : g.weights)
    require(w > Rational(0) && w <= Rational(1), "weights must lie in (0, 1]");
  std::optional<Clique> clique;
  if (auto w = uniform_weight(g)) {
    if (auto found = find_clique_of_size(g.graph, violation_threshold(*w), opts)) clique = make_clique(g, *found);
  } else {
    clique = max_weight_clique(g, Rational(1), opts);
  }
  if (!clique) return std::nullopt;
  Rational excess = clique->weight_sum - Rational(1);
  return ViolationCertificate{std::move(*clique), excess};
}

/// `opts` with the product's automorphism generators attached, so that root
/// branching runs once per vertex orbit.
inline SolverOptions with_symmetry(const JointGraph& j, SolverOptions opts = {}) {
  auto gens = product_automorphisms(j);
  opts.automorphisms.insert(opts.automorphisms.end(), gens.begin(), gens.end());
  JointGraph frame;
  frame.shape = j.shape;
  frame.factors = j.factors;
  opts.stabilizer = [frame = std::move(frame)](std::size_t v) { return product_stabilizer(frame, v); };
  return opts;
}

// ---------------------------------------------------------------------------
// Constructions on multicolor products
// ---------------------------------------------------------------------------

namespace detail {
inline bool adjacent_in_some_layer(const ColoredMultigraph& g, std::size_t u, std::size_t v) {
  for (const auto& layer : g.layers)
    if (layer.has_edge(u, v)) return true;
  return false;
}

inline void check_clique_in(const ColoredMultigraph& g, const Clique& c) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (c.vertices[a] >= g.order()) fail(ErrorCode::invalid_argument, "clique vertex out of range");
    for (std::size_t b = a + 1; b < c.size(); ++b)
      if (!adjacent_in_some_layer(g, c.vertices[a], c.vertices[b]))
        fail(ErrorCode::invalid_argument, "invalid clique: vertices " + std::to_string(c.vertices[a]) + " and " +
                                              std::to_string(c.vertices[b]) + " are not adjacent");
  }
}

inline Clique clique_in(const ColoredMultigraph& g, std::vector<std::size_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  Clique c{std::move(vertices), Rational(0)};
  for (auto v : c.vertices) c.weight_sum += g.weights.at(v);
  check_clique_in(g, c);
  return c;
}
}  // namespace detail

/// The 2^k tuples built from every endpoint choice of one factor edge per
/// color; a clique of the OR product.
inline Clique trivial_clique(const ColoredMultigraph& g, std::span<const Edge> chosen) {
  require(chosen.size() == g.k(), "need exactly one edge per color");
  for (std::size_t i = 0; i < g.k(); ++i) {
    auto [a, b] = chosen[i];
    if (a >= g.factors[i].order() || b >= g.factors[i].order() || !g.factors[i].graph.has_edge(a, b))
      fail(ErrorCode::invalid_argument, "chosen pair for color " + std::to_string(i + 1) + " is not a factor edge");
  }
  std::vector<std::size_t> vertices;
  for (std::size_t mask = 0; mask < (std::size_t{1} << g.k()); ++mask) {
    TupleVertex t(g.k());
    for (std::size_t i = 0; i < g.k(); ++i) t[i] = ((mask >> i) & 1U) ? chosen[i].second : chosen[i].first;
    vertices.push_back(g.shape.encode(t));
  }
  return detail::clique_in(g, std::move(vertices));
}

inline bool is_extendable(const ColoredMultigraph& g, const Clique& c) {
  detail::check_clique_in(g, c);
  Bitset common(g.order());
  common.set_all();
  for (auto v : c.vertices) {
    Bitset row(g.order());
    for (const auto& layer : g.layers) row |= layer.neighbors(v);
    common &= row;
  }
  return common.any();
}

/// Pairs every vertex of a clique of `host` with both endpoints of an edge
/// of a new factor. Indices refer to the product of host's factors followed
/// by `next`, in lexicographic order.
inline Clique double_clique(const ColoredMultigraph& host, const Clique& c, const WeightedGraph& next, Edge e) {
  detail::check_clique_in(host, c);
  auto [a, b] = e;
  if (a >= next.order() || b >= next.order() || !next.graph.has_edge(a, b))
    fail(ErrorCode::invalid_argument, "doubling edge is not an edge of the new factor");
  Clique out{{}, Rational(0)};
  for (auto v : c.vertices)
    for (auto end : {a, b}) {
      out.vertices.push_back(v * next.order() + end);
      out.weight_sum += host.weights[v] * next.weights[end];
    }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

/// K_5 in a two-factor product from a 5-cycle in each factor: vertex j is
/// (e_j, f_{2j mod 5}). Consecutive pairs are covered by the first factor
/// (outer pentagon), pairs two apart by the second (inner pentagram).
inline Clique build_k5_two_c5(const ColoredMultigraph& g, const OddCycleWitness& c1, const OddCycleWitness& c2) {
  require(g.k() == 2, "K5 construction needs a two-factor product");
  if (c1.size() != 5 || !is_odd_cycle(g.factors[0].graph, c1))
    fail(ErrorCode::invalid_argument, "first input is not a 5-cycle of factor 1");
  if (c2.size() != 5 || !is_odd_cycle(g.factors[1].graph, c2))
    fail(ErrorCode::invalid_argument, "second input is not a 5-cycle of factor 2");
  std::vector<std::size_t> vertices;
  for (std::size_t j = 0; j < 5; ++j) vertices.push_back(g.shape.encode({c1[j], c2[(2 * j) % 5]}));
  return detail::clique_in(g, std::move(vertices));
}

}  // namespace exclo
