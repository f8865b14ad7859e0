#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "exclo/certificate.hpp"
#include "exclo/clique.hpp"
#include "exclo/error.hpp"
#include "exclo/exgraph.hpp"
#include "exclo/product.hpp"
#include "exclo/ramsey.hpp"
#include "exclo/scenario.hpp"

namespace exclo {

enum class Status { pass, fail, skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped: return "SKIPPED";
  }
  return "?";
}

struct InstanceResult {
  std::string instance;
  Status status = Status::fail;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::string tag;
  std::vector<InstanceResult> instances;

  bool any(Status s) const {
    return std::any_of(instances.begin(), instances.end(), [&](const auto& r) { return r.status == s; });
  }
};

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& i : r.instances)
    rows.push_back({{"instance", i.instance}, {"status", status_name(i.status)}, {"detail", i.detail}, {"seconds", i.seconds}});
  return {{"tag", r.tag}, {"instances", rows}};
}

struct VerifyOptions {
  std::uint64_t node_budget = SolverOptions{}.node_budget;
  unsigned threads = 1;
};

/// Outcome of one check: pass flag plus a human-readable detail line.
struct Check {
  bool ok;
  std::string detail;
};

namespace detail {

inline Check combine(std::vector<Check> parts) {
  Check out{true, ""};
  for (auto& p : parts) {
    out.ok = out.ok && p.ok;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += p.detail;
  }
  return out;
}

inline InstanceResult run_instance(std::string label, const std::function<Check()>& body) {
  InstanceResult r;
  r.instance = std::move(label);
  auto t0 = std::chrono::steady_clock::now();
  try {
    Check c = body();
    r.status = c.ok ? Status::pass : Status::fail;
    r.detail = std::move(c.detail);
  } catch (const Error& e) {
    r.status = e.code() == ErrorCode::budget_exceeded ? Status::skipped : Status::fail;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline SolverOptions solver_options(const VerifyOptions& o) {
  SolverOptions s;
  s.node_budget = o.node_budget;
  s.threads = o.threads;
  return s;
}

inline std::string kn(std::size_t k, std::size_t n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

/// First edge of every factor, one per color.
inline std::vector<Edge> first_edges(const ColoredMultigraph& g) {
  std::vector<Edge> out;
  for (const auto& f : g.factors) out.push_back(f.graph.edges().front());
  return out;
}

// Single-copy structure -------------------------------------------------

inline Check check_structure(std::size_t n) {
  std::size_t boxes = 0;
  const Graph reference = n % 2 == 0 ? mobius_ladder(2 * n) : prism(n);
  for (const auto& box : enumerate_pr_boxes(n)) {
    auto g = build_exclusivity_graph(box);
    ++boxes;
    if (g.order() != 2 * n || g.graph.edge_count() != 3 * n || !g.graph.is_regular(3))
      return {false, "box " + std::to_string(boxes) + " has wrong size or degree"};
    if (!is_isomorphic(g.graph, reference))
      return {false, "box " + std::to_string(boxes) + " not isomorphic to the reference graph"};
  }
  return {true, std::to_string(boxes) + " boxes isomorphic to " + (n % 2 == 0 ? "M_" : "Y_") +
                    std::to_string(n % 2 == 0 ? 2 * n : n)};
}

inline Check check_triangle_free(std::size_t n) {
  std::size_t boxes = 0;
  for (const auto& box : enumerate_pr_boxes(n)) {
    auto g = build_exclusivity_graph(box);
    ++boxes;
    if (has_triangle(g.graph)) return {false, "box " + std::to_string(boxes) + " has a triangle"};
    if (max_clique(g.graph).size != 2) return {false, "box " + std::to_string(boxes) + " has clique number != 2"};
  }
  return {true, std::to_string(boxes) + " boxes triangle-free, clique number 2"};
}

inline Check check_odd_girth(std::size_t n) {
  const std::size_t expected = n % 2 == 0 ? n + 1 : n;
  std::size_t boxes = 0;
  for (const auto& box : enumerate_pr_boxes(n)) {
    auto g = build_exclusivity_graph(box);
    ++boxes;
    auto w = odd_girth_witness(g.graph);
    if (!w || w->size() != expected || !is_odd_cycle(g.graph, *w))
      return {false, "box " + std::to_string(boxes) + " odd girth " + (w ? std::to_string(w->size()) : "none")};
  }
  return {true, std::to_string(boxes) + " boxes with odd girth " + std::to_string(expected)};
}

inline Check check_five_cycle(std::size_t n) {
  auto g = build_exclusivity_graph(make_pr_box(PrBoxSpec::canonical(n)));
  auto girth = odd_girth(g.graph);
  bool has_c5 = girth && *girth == 5;
  bool expected = n <= 5;
  return {has_c5 == expected, std::string(has_c5 ? "has" : "no") + " 5-cycle"};
}

inline Check check_single_copy_violation(std::size_t n) {
  std::size_t boxes = 0;
  for (const auto& box : enumerate_pr_boxes(n)) {
    ++boxes;
    if (find_violation(build_exclusivity_graph(box))) return {false, "box " + std::to_string(boxes) + " violates"};
  }
  return {true, std::to_string(boxes) + " boxes without violation"};
}

// Products --------------------------------------------------------------

inline Check check_clique_number(std::size_t n, std::size_t k, std::size_t expected, const VerifyOptions& o) {
  auto j = joint_graph(canonical_host(n, k));
  auto colored = multicolor_product(j.factors);
  auto lower = trivial_clique(colored, first_edges(colored));
  auto r = max_clique(j.graph, with_symmetry(j, solver_options(o)));
  bool ok = r.size == expected && is_clique(j.graph, r.witness) && is_maximal_clique(j.graph, r.witness) &&
            lower.size() == (std::size_t{1} << k) && is_clique(j.graph, lower.vertices);
  return {ok, "clique number " + std::to_string(r.size) + " (" + std::to_string(r.stats.nodes) + " nodes), trivial K_" +
                  std::to_string(lower.size())};
}

inline Check check_two_copy_violation(std::size_t n, const VerifyOptions& o) {
  auto j = joint_graph(canonical_host(n, 2));
  auto cert = find_violation(j, with_symmetry(j, solver_options(o)));
  if (!cert) return {false, "no violation found"};
  bool ok = cert->excess == Rational(1, 4) && is_clique(j.graph, cert->clique.vertices) &&
            check_certificate(certificate_to_json(canonical_host(n, 2), *cert)).valid;
  return {ok, "violation excess " + cert->excess.str()};
}

inline Check check_k5_construction(std::size_t n) {
  auto factor = build_exclusivity_graph(make_pr_box(PrBoxSpec::canonical(n)));
  auto c5 = odd_girth_witness(factor.graph);
  if (!c5 || c5->size() != 5) return {false, "factor has no 5-cycle"};
  auto g = multicolor_product(copies(factor, 2));
  auto k5 = build_k5_two_c5(g, *c5, *c5);
  bool ok = k5.size() == 5 && k5.weight_sum == Rational(5, 4) && is_clique(flatten(g).graph, k5.vertices);
  return {ok, "constructed K_5 of weight " + k5.weight_sum.str()};
}

inline Check check_no_clique_of_size(std::size_t n, std::size_t k, std::size_t s, const VerifyOptions& o) {
  auto j = joint_graph(canonical_host(n, k));
  SolverStats stats;
  auto found = find_clique_of_size(j.graph, s, with_symmetry(j, solver_options(o)), &stats);
  return {!found, std::string(found ? "found" : "no") + " K_" + std::to_string(s) + " (" + std::to_string(stats.nodes) +
                      " nodes)"};
}

inline Check check_no_violation(std::size_t n, std::size_t k, const VerifyOptions& o) {
  auto j = joint_graph(canonical_host(n, k));
  SolverStats stats;
  auto found = find_clique_of_size(j.graph, violation_threshold(*uniform_weight(j)), with_symmetry(j, solver_options(o)),
                                   &stats);
  return {!found, std::string(found ? "violation found" : "no violation") + " (" + std::to_string(stats.nodes) + " nodes)"};
}

inline Check check_trivial_not_extendable(std::size_t k, std::size_t n) {
  auto g = multicolor_product(copies(build_exclusivity_graph(make_pr_box(PrBoxSpec::canonical(n))), k));
  auto c = trivial_clique(g, first_edges(g));
  bool valid = c.size() == (std::size_t{1} << k) && is_clique(flatten(g).graph, c.vertices);
  bool ext = is_extendable(g, c);
  return {valid && !ext, "trivial K_" + std::to_string(c.size()) + (ext ? " extendable" : " not extendable")};
}

inline Check check_doubling() {
  auto factor = build_exclusivity_graph(make_pr_box(PrBoxSpec::canonical(4)));
  auto c5 = *odd_girth_witness(factor.graph);
  auto g2 = multicolor_product(copies(factor, 2));
  auto k5 = build_k5_two_c5(g2, c5, c5);
  auto edge = factor.graph.edges().front();
  auto g3 = multicolor_product(copies(factor, 3));
  auto k10 = double_clique(g2, k5, factor, edge);
  auto g4 = multicolor_product(copies(factor, 4));
  auto k20 = double_clique(g3, k10, factor, edge);
  bool ok = k10.size() == 10 && k10.weight_sum == Rational(10, 8) && is_clique(flatten(g3).graph, k10.vertices) &&
            k20.size() == 20 && k20.weight_sum == Rational(20, 16) && is_clique(flatten(g4).graph, k20.vertices);
  return {ok, "K_10 weight " + k10.weight_sum.str() + ", K_20 weight " + k20.weight_sum.str()};
}

// Table -----------------------------------------------------------------

/// Recomputes a cell from graph data: constructions for n in {4, 5}, the
/// solver-backed rows for k in {2, 3}, and for k >= 4 the odd girth of the
/// built factor against 2^k + 1.
inline Verdict derived_cell(std::size_t k, std::size_t n) {
  if (k == 1) return Verdict::no_violation;
  auto girth = *odd_girth(build_exclusivity_graph(make_pr_box(PrBoxSpec::canonical(n))).graph);
  if (girth == 5) return Verdict::violates;
  if (k <= 3) return Verdict::no_violation;
  return girth > (std::size_t{1} << k) + 1 ? Verdict::no_violation : Verdict::unknown;
}

inline Check check_table_row(std::size_t k, std::size_t max_n) {
  std::size_t cells = 0;
  for (std::size_t n = 4; n <= max_n; ++n, ++cells)
    if (rule_out(k, n).verdict != derived_cell(k, n))
      return {false, "cell " + kn(k, n) + " gives " + verdict_name(rule_out(k, n).verdict)};
  return {true, std::to_string(cells) + " cells match"};
}

inline Check check_labels(std::size_t k) {
  auto c = bipartite_coloring(k);
  for (std::size_t color = 1; color <= k; ++color)
    if (!is_bipartite(c.color_class(color))) return {false, "class " + std::to_string(color) + " not bipartite"};
  auto labels = label_vertices(c);
  std::sort(labels.begin(), labels.end());
  bool distinct = std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  return {distinct && labels.size() == (std::size_t{1} << k), std::to_string(labels.size()) + " distinct labels"};
}

// Ramsey ----------------------------------------------------------------

inline Check check_exhaustive(std::size_t m, std::size_t k, std::vector<std::size_t> bounds, bool expected,
                              const VerifyOptions& o) {
  ExhaustiveOptions eo;
  eo.threads = o.threads;
  auto r = exhaustive_check(m, k, bounds, eo);
  bool ok = r.holds == expected;
  if (!r.holds) ok = ok && r.counterexample && !mono_odd_cycle(*r.counterexample, bounds);
  return {ok, std::string(r.holds ? "every" : "not every") + " coloring has a short monochromatic odd cycle (" +
                  std::to_string(r.colorings) + " colorings)"};
}

inline Check check_search(std::size_t m, std::size_t k, std::vector<std::size_t> bounds, bool expect_found) {
  auto c = search_coloring(m, k, bounds);
  if (!c) return {!expect_found, "no good coloring"};
  bool ok = expect_found && c->complete() && !mono_odd_cycle(*c, bounds);
  return {ok, "good coloring found and validated"};
}

}  // namespace detail

inline const std::vector<std::string>& verify_tags() {
  static const std::vector<std::string> tags{"T4", "C5", "T6", "C7", "T9", "T10", "C11", "T12", "T13-table", "VIB",
                                             "R8", "RAMSEY-SMALL"};
  return tags;
}

/// Runs every instance of a tag. Solver budget aborts become SKIPPED.
inline VerifyReport run_verify(const std::string& tag, const VerifyOptions& o = {}) {
  using detail::run_instance;
  using detail::kn;
  VerifyReport r{tag, {}};
  auto add = [&](std::string label, std::function<Check()> body) { r.instances.push_back(run_instance(std::move(label), body)); };
  auto n_label = [](std::size_t n) { return "n=" + std::to_string(n); };

  if (tag == "T4") {
    for (std::size_t n = 4; n <= 10; ++n) add(n_label(n), [=] { return detail::check_structure(n); });
  } else if (tag == "C5") {
    for (std::size_t n = 4; n <= 12; ++n)
      add(n_label(n), [=] {
        return detail::combine({detail::check_triangle_free(n), detail::check_single_copy_violation(n)});
      });
  } else if (tag == "T6") {
    for (std::size_t n = 4; n <= 12; ++n) add(n_label(n), [=] { return detail::check_odd_girth(n); });
  } else if (tag == "C7") {
    for (std::size_t n = 4; n <= 12; ++n) add(n_label(n), [=] { return detail::check_five_cycle(n); });
  } else if (tag == "T9") {
    for (std::size_t n : {4, 5})
      add(kn(2, n), [=] {
        return detail::combine({detail::check_clique_number(n, 2, 5, o), detail::check_two_copy_violation(n, o),
                                detail::check_k5_construction(n)});
      });
  } else if (tag == "T10") {
    for (std::size_t n = 6; n <= 10; ++n) add(kn(2, n), [=] { return detail::check_clique_number(n, 2, 4, o); });
  } else if (tag == "C11") {
    for (std::size_t n = 6; n <= 10; ++n)
      add(kn(2, n), [=] {
        std::vector<Check> parts;
        for (std::size_t s : {5, 6, 7}) parts.push_back(detail::check_no_clique_of_size(n, 2, s, o));
        return detail::combine(std::move(parts));
      });
  } else if (tag == "T12") {
    for (std::size_t n : {6, 7})
      add(kn(3, n), [=] {
        return detail::combine({detail::check_clique_number(n, 3, 8, o), detail::check_no_violation(n, 3, o)});
      });
  } else if (tag == "T13-table") {
    for (std::size_t k = 1; k <= 6; ++k) add("k=" + std::to_string(k) + " n=4..70", [=] { return detail::check_table_row(k, 70); });
    for (std::size_t k = 1; k <= 5; ++k) add("labels k=" + std::to_string(k), [=] { return detail::check_labels(k); });
  } else if (tag == "VIB") {
    for (std::size_t k : {2, 3})
      for (std::size_t n = 4; n <= 8; ++n) add(kn(k, n), [=] { return detail::check_trivial_not_extendable(k, n); });
  } else if (tag == "R8") {
    add("n=4 k=2..4", [] { return detail::check_doubling(); });
  } else if (tag == "RAMSEY-SMALL") {
    add("m=5 k=2 (3,3)", [=] { return detail::check_exhaustive(5, 2, {3, 3}, false, o); });
    add("m=6 k=2 (3,3)", [=] { return detail::check_exhaustive(6, 2, {3, 3}, true, o); });
    add("m=4 k=2 (5,3)", [=] { return detail::check_exhaustive(4, 2, {5, 3}, false, o); });
    add("m=5 k=2 (5,3)", [=] { return detail::check_exhaustive(5, 2, {5, 3}, true, o); });
    add("m=5 k=2 (5,5)", [=] { return detail::check_exhaustive(5, 2, {5, 5}, true, o); });
    add("search m=8 k=3 (5,5,5)", [] { return detail::check_search(8, 3, {5, 5, 5}, true); });
    add("search m=6 k=2 (3,3)", [] { return detail::check_search(6, 2, {3, 3}, false); });
  } else {
    fail(ErrorCode::invalid_argument, "unknown verify tag '" + tag + "'");
  }
  return r;
}

}  // namespace exclo
