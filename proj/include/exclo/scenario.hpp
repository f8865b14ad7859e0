#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "exclo/error.hpp"
#include "exclo/rational.hpp"

namespace exclo {

// ---------------------------------------------------------------------------
// Outcomes
// ---------------------------------------------------------------------------

enum class Outcome : std::uint8_t { plus = 0, minus = 1 };

inline char symbol(Outcome o) { return o == Outcome::plus ? '+' : '-'; }

/// Joint outcome of a two-measurement context. `first` belongs to the
/// measurement the context starts at in cyclic order (A_j for context
/// {A_j, A_j+1}), `second` to the other one.
struct JointOutcome {
  Outcome first = Outcome::plus;
  Outcome second = Outcome::plus;

  /// Position in the canonical order ++, +-, -+, --.
  std::size_t index() const noexcept {
    return 2 * static_cast<std::size_t>(first) + static_cast<std::size_t>(second);
  }
  static JointOutcome from_index(std::size_t i) {
    require(i < 4, "joint outcome index out of range");
    return {static_cast<Outcome>(i / 2), static_cast<Outcome>(i % 2)};
  }

  bool correlated() const noexcept { return first == second; }

  std::string str() const { return {symbol(first), symbol(second)}; }

  static JointOutcome parse(std::string_view s) {
    auto one = [&](char c) {
      if (c == '+') return Outcome::plus;
      if (c == '-') return Outcome::minus;
      fail(ErrorCode::parse_error, "bad joint outcome '" + std::string(s) + "'");
    };
    if (s.size() != 2) fail(ErrorCode::parse_error, "bad joint outcome '" + std::string(s) + "'");
    return {one(s[0]), one(s[1])};
  }

  friend auto operator<=>(const JointOutcome& a, const JointOutcome& b) { return a.index() <=> b.index(); }
  friend bool operator==(const JointOutcome&, const JointOutcome&) = default;
};

inline constexpr std::size_t outcomes_per_context = 4;

// ---------------------------------------------------------------------------
// Cycle scenario
// ---------------------------------------------------------------------------

/// Dichotomic n-cycle scenario: measurements 0..n-1, context j = {j, j+1 mod n}.
class CycleScenario {
 public:
  std::size_t n() const noexcept { return n_; }
  std::size_t context_count() const noexcept { return n_; }

  /// Measurements of context j, in outcome order.
  std::pair<std::size_t, std::size_t> context(std::size_t j) const {
    require(j < n_, "context index out of range");
    return {j, (j + 1) % n_};
  }

  /// The two contexts containing measurement m: the one where m comes
  /// second, then the one where it comes first.
  std::pair<std::size_t, std::size_t> contexts_of(std::size_t m) const {
    require(m < n_, "measurement index out of range");
    return {(m + n_ - 1) % n_, m};
  }

  /// Outcome assigned to measurement m by joint outcome `o` of context j, or
  /// false when m is not in that context.
  bool outcome_of(std::size_t j, JointOutcome o, std::size_t m, Outcome& out) const {
    auto [a, b] = context(j);
    if (m == a) {
      out = o.first;
      return true;
    }
    if (m == b) {
      out = o.second;
      return true;
    }
    return false;
  }

  friend bool operator==(const CycleScenario&, const CycleScenario&) = default;

 private:
  friend CycleScenario make_cycle_scenario(std::size_t n);
  explicit CycleScenario(std::size_t n) : n_(n) {}
  std::size_t n_ = 0;
};

inline CycleScenario make_cycle_scenario(std::size_t n) {
  if (n < 4) fail(ErrorCode::degenerate_scenario, "degenerate scenario: n = " + std::to_string(n) + " (need n >= 4)");
  return CycleScenario(n);
}

// ---------------------------------------------------------------------------
// Correlations
// ---------------------------------------------------------------------------

using ContextTable = std::array<Rational, outcomes_per_context>;

/// One probability table per context. Tables are validated on construction:
/// entries are non-negative and each table sums to exactly 1.
class Correlation {
 public:
  Correlation(CycleScenario scenario, std::vector<ContextTable> tables)
      : scenario_(scenario), tables_(std::move(tables)) {
    require(tables_.size() == scenario_.context_count(),
            "correlation needs one table per context (" + std::to_string(scenario_.context_count()) + ")");
    for (std::size_t j = 0; j < tables_.size(); ++j) {
      Rational sum;
      for (const auto& p : tables_[j]) {
        require(p >= Rational(0), "negative probability in context " + std::to_string(j));
        sum += p;
      }
      require(sum == Rational(1), "context " + std::to_string(j) + " sums to " + sum.str() + ", not 1");
    }
  }

  const CycleScenario& scenario() const noexcept { return scenario_; }
  std::size_t n() const noexcept { return scenario_.n(); }
  const ContextTable& table(std::size_t j) const { return tables_.at(j); }
  const std::vector<ContextTable>& tables() const noexcept { return tables_; }
  Rational prob(std::size_t j, JointOutcome o) const { return tables_.at(j)[o.index()]; }

  /// Probability that measurement m yields +, read off context j's table.
  Rational marginal_plus(std::size_t j, std::size_t m) const {
    Rational p;
    for (std::size_t i = 0; i < outcomes_per_context; ++i) {
      Outcome o{};
      if (!scenario_.outcome_of(j, JointOutcome::from_index(i), m, o))
        fail(ErrorCode::invalid_argument, "measurement not in context");
      if (o == Outcome::plus) p += tables_[j][i];
    }
    return p;
  }

  friend bool operator==(const Correlation&, const Correlation&) = default;

 private:
  CycleScenario scenario_;
  std::vector<ContextTable> tables_;
};

/// PR box description: the contexts whose support is anti-correlated.
struct PrBoxSpec {
  std::size_t n = 4;
  std::vector<std::size_t> anti_contexts;

  /// Only the last context anti-correlated; for n = 4 this is the CHSH PR box.
  static PrBoxSpec canonical(std::size_t n) { return {n, {n - 1}}; }
};

inline Correlation make_pr_box(const PrBoxSpec& spec) {
  auto scenario = make_cycle_scenario(spec.n);
  std::vector<bool> anti(spec.n, false);
  for (auto j : spec.anti_contexts) {
    require(j < spec.n, "anti-correlated context " + std::to_string(j) + " out of range");
    require(!anti[j], "anti-correlated context " + std::to_string(j) + " listed twice");
    anti[j] = true;
  }
  if (spec.anti_contexts.size() % 2 == 0)
    fail(ErrorCode::parity_violation, "parity violation: " + std::to_string(spec.anti_contexts.size()) +
                                          " anti-correlated contexts (must be odd)");
  const Rational half(1, 2);
  std::vector<ContextTable> tables(spec.n);
  for (std::size_t j = 0; j < spec.n; ++j) {
    for (std::size_t i = 0; i < outcomes_per_context; ++i) {
      bool correlated = JointOutcome::from_index(i).correlated();
      tables[j][i] = (correlated != anti[j]) ? half : Rational(0);
    }
  }
  return Correlation(scenario, std::move(tables));
}

/// Every context uniform over its four joint outcomes.
inline Correlation uniform_correlation(std::size_t n) {
  auto scenario = make_cycle_scenario(n);
  ContextTable t;
  t.fill(Rational(1, 4));
  return Correlation(scenario, std::vector<ContextTable>(n, t));
}

inline bool check_no_disturbance(const Correlation& corr) {
  const auto& sc = corr.scenario();
  for (std::size_t m = 0; m < sc.n(); ++m) {
    auto [c1, c2] = sc.contexts_of(m);
    if (corr.marginal_plus(c1, m) != corr.marginal_plus(c2, m)) return false;
  }
  return true;
}

/// All n-cycle PR boxes, one per odd subset of contexts, in increasing
/// subset-bitmask order.
inline std::vector<Correlation> enumerate_pr_boxes(std::size_t n) {
  make_cycle_scenario(n);
  require(n < 63, "cycle too large to enumerate");
  std::vector<Correlation> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    PrBoxSpec spec{n, {}};
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1U) spec.anti_contexts.push_back(j);
    out.push_back(make_pr_box(spec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const Correlation& corr) {
  nlohmann::json tables = nlohmann::json::array();
  for (std::size_t j = 0; j < corr.n(); ++j) {
    auto [a, b] = corr.scenario().context(j);
    nlohmann::json probs = nlohmann::json::object();
    for (std::size_t i = 0; i < outcomes_per_context; ++i)
      probs[JointOutcome::from_index(i).str()] = corr.table(j)[i].str();
    tables.push_back({{"context", {a, b}}, {"probs", probs}});
  }
  return {{"n", corr.n()}, {"tables", tables}};
}

inline Correlation correlation_from_json(const nlohmann::json& j) {
  try {
    std::size_t n = j.at("n").get<std::size_t>();
    auto scenario = make_cycle_scenario(n);
    const auto& tables_json = j.at("tables");
    if (tables_json.size() != n) fail(ErrorCode::parse_error, "expected " + std::to_string(n) + " tables");
    std::vector<ContextTable> tables(n);
    std::vector<bool> seen(n, false);
    for (const auto& t : tables_json) {
      auto ctx = t.at("context").get<std::vector<std::size_t>>();
      if (ctx.size() != 2 || ctx[0] >= n || ctx[1] != (ctx[0] + 1) % n)
        fail(ErrorCode::parse_error, "context is not a cyclic pair");
      if (seen[ctx[0]]) fail(ErrorCode::parse_error, "duplicate context");
      seen[ctx[0]] = true;
      ContextTable table;
      table.fill(Rational(0));
      for (const auto& [key, value] : t.at("probs").items())
        table[JointOutcome::parse(key).index()] = Rational::parse(value.get<std::string>());
      tables[ctx[0]] = table;
    }
    return Correlation(scenario, std::move(tables));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("malformed correlation JSON: ") + e.what());
  }
}

}  // namespace exclo
