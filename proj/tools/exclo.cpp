#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exclo/certificate.hpp"
#include "exclo/clique.hpp"
#include "exclo/exgraph.hpp"
#include "exclo/product.hpp"
#include "exclo/ramsey.hpp"
#include "exclo/scenario.hpp"
#include "exclo/verify.hpp"

namespace {

using namespace exclo;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct Globals {
  bool json = false;
  unsigned threads = 1;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::invalid_argument, "cannot write " + path);
  out << text;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::invalid_argument, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, path + ": " + e.what());
  }
}

std::string dimacs(const Graph& g, const std::string& comment) {
  std::ostringstream os;
  write_dimacs(os, g, comment);
  return os.str();
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_graph(const Globals& gl, std::size_t n, const std::vector<std::size_t>& anti, const std::string& out) {
  PrBoxSpec spec = anti.empty() ? PrBoxSpec::canonical(n) : PrBoxSpec{n, anti};
  auto g = build_exclusivity_graph(make_pr_box(spec));
  std::string prefix = out.empty() ? "pr" + std::to_string(n) : out;
  write_file(prefix + ".col", dimacs(g.graph, "exclusivity graph of the n=" + std::to_string(n) + " PR box"));
  write_file(prefix + ".json", to_json(g).dump(2) + "\n");
  std::ostringstream text;
  text << "n=" << n << ": " << g.order() << " vertices, " << g.graph.edge_count() << " edges -> " << prefix
       << ".col, " << prefix << ".json\n";
  emit(gl, {{"n", n}, {"vertices", g.order()}, {"edges", g.graph.edge_count()}, {"files", {prefix + ".col", prefix + ".json"}}},
       text.str());
  return exit_ok;
}

int cmd_product(const Globals& gl, std::size_t n, std::size_t k, bool colored, const std::string& out) {
  require(k >= 1, "k must be >= 1");
  auto factor = build_exclusivity_graph(make_pr_box(PrBoxSpec::canonical(n)));
  auto factors = copies(factor, k);
  std::string prefix = out.empty() ? "pr" + std::to_string(n) + "_k" + std::to_string(k) : out;
  std::size_t order = 0, edges = 0;
  try {
    if (colored) {
      auto g = multicolor_product(factors);
      auto flat = flatten(g);
      order = g.order();
      edges = flat.graph.edge_count();
      write_file(prefix + ".json", to_json(g).dump() + "\n");
      write_file(prefix + ".col", dimacs(flat.graph, "flattened multicolor product"));
    } else {
      auto j = or_product(factors);
      order = j.order();
      edges = j.graph.edge_count();
      write_file(prefix + ".json", to_json(j).dump() + "\n");
      write_file(prefix + ".col", dimacs(j.graph, "OR product"));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
    fail(ErrorCode::cap_exceeded, std::string(e.what()) + "; try `rule-out " + std::to_string(k) + " " +
                                      std::to_string(n) + "` for a symbolic verdict");
  }
  std::ostringstream text;
  text << (colored ? "multicolor" : "OR") << " product n=" << n << " k=" << k << ": " << order << " vertices, " << edges
       << " edges -> " << prefix << ".col, " << prefix << ".json\n";
  emit(gl, {{"n", n}, {"k", k}, {"colored", colored}, {"vertices", order}, {"edges", edges}}, text.str());
  return exit_ok;
}

int cmd_solve(const Globals& gl, std::size_t n, std::size_t k, std::uint64_t budget, const std::string& cert_path) {
  require(k >= 1, "k must be >= 1");
  auto host = canonical_host(n, k);
  auto j = joint_graph(host);
  SolverOptions opts;
  opts.node_budget = budget;
  opts.threads = gl.threads;
  auto t0 = std::chrono::steady_clock::now();
  auto r = max_clique(j.graph, with_symmetry(j, opts));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Rational weight = j.weights.front() * Rational(static_cast<std::int64_t>(r.size));
  bool violates = weight > Rational(1);
  json out{{"n", n}, {"k", k}, {"cliqueNumber", r.size}, {"weight", weight.str()}, {"violates", violates},
           {"nodes", r.stats.nodes}, {"seconds", secs}};
  std::ostringstream text;
  text << "n=" << n << " k=" << k << ": clique number " << r.size << ", max clique weight " << weight.str() << " ("
       << (violates ? "VIOLATES" : "no violation") << ", " << r.stats.nodes << " nodes)\n";
  if (violates && !cert_path.empty()) {
    auto clique = make_clique(j, r.witness);
    ViolationCertificate cert{clique, clique.weight_sum - Rational(1)};
    write_file(cert_path, certificate_to_json(host, cert).dump(2) + "\n");
    out["certificate"] = cert_path;
    text << "certificate -> " << cert_path << "\n";
  }
  emit(gl, out, text.str());
  return exit_ok;
}

int cmd_verify(const Globals& gl, const std::vector<std::string>& tags, std::uint64_t budget) {
  VerifyOptions opts;
  opts.node_budget = budget;
  opts.threads = gl.threads;
  json reports = json::array();
  bool failed = false, skipped = false;
  for (const auto& tag : tags.empty() ? verify_tags() : tags) {
    auto r = run_verify(tag, opts);
    failed = failed || r.any(Status::fail);
    skipped = skipped || r.any(Status::skipped);
    reports.push_back(to_json(r));
    if (!gl.json) {
      for (const auto& i : r.instances)
        std::printf("%-13s %-26s %-8s %8.3fs  %s\n", tag.c_str(), i.instance.c_str(), status_name(i.status), i.seconds,
                    i.detail.c_str());
      std::fflush(stdout);
    }
  }
  if (gl.json) std::cout << (tags.size() == 1 ? reports.front() : reports).dump(2) << "\n";
  if (failed) return exit_fail;
  return skipped ? exit_budget : exit_ok;
}

int cmd_rule_out(const Globals& gl, std::size_t k, std::size_t n) {
  auto v = rule_out(k, n);
  emit(gl, {{"k", k}, {"n", n}, {"verdict", verdict_name(v.verdict)}, {"basis", v.basis}, {"tag", v.tag}, {"reason", v.reason}},
       std::string(verdict_name(v.verdict)) + " (k=" + std::to_string(k) + ", n=" + std::to_string(n) + "): " + v.reason +
           "\n");
  return exit_ok;
}

int cmd_check_certificate(const Globals& gl, const std::string& path) {
  auto r = check_certificate(read_json(path));
  emit(gl, {{"valid", r.valid}, {"reason", r.reason}}, std::string(r.valid ? "VALID: " : "INVALID: ") + r.reason + "\n");
  return r.valid ? exit_ok : exit_fail;
}

std::vector<std::size_t> parse_bounds(const std::string& text, std::size_t k) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      fail(ErrorCode::invalid_argument, "bad bound '" + item + "'");
    }
  }
  if (out.size() == 1) out.assign(k, out.front());
  return out;
}

int cmd_check_coloring(const Globals& gl, const std::string& path, const std::string& bounds_text) {
  auto c = coloring_from_json(read_json(path));
  // Without bounds, any odd cycle counts.
  auto bounds = bounds_text.empty() ? std::vector<std::size_t>(c.k(), std::max<std::size_t>(3, c.m() - (c.m() % 2 == 0)))
                                    : parse_bounds(bounds_text, c.k());
  auto hit = mono_odd_cycle(c, bounds);
  json out{{"m", c.m()}, {"k", c.k()}, {"complete", true}, {"bounds", bounds}};
  std::string text = "coloring of K_" + std::to_string(c.m()) + " with " + std::to_string(c.k()) + " colors is complete; ";
  if (hit) {
    out["monoOddCycle"] = {{"color", hit->color}, {"cycle", hit->cycle}};
    text += "color " + std::to_string(hit->color) + " has an odd cycle of length " + std::to_string(hit->cycle.size()) + "\n";
  } else {
    out["monoOddCycle"] = nullptr;
    text += "no monochromatic odd cycle within bounds\n";
  }
  emit(gl, out, text);
  return exit_ok;
}

int cmd_coloring(const Globals& gl, std::size_t m, std::size_t k, const std::string& bounds_text, std::size_t bipartite_k,
                 const std::string& out) {
  std::optional<EdgeColoring> c;
  if (bipartite_k > 0) {
    c = bipartite_coloring(bipartite_k);
  } else {
    c = search_coloring(m, k, parse_bounds(bounds_text, k));
  }
  if (!c) {
    emit(gl, {{"found", false}}, "no coloring avoids short monochromatic odd cycles\n");
    return exit_ok;
  }
  std::string path = out.empty() ? "coloring.json" : out;
  write_file(path, to_json(*c).dump() + "\n");
  emit(gl, {{"found", true}, {"file", path}}, "coloring of K_" + std::to_string(c->m()) + " -> " + path + "\n");
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exclusivity graphs of n-cycle PR boxes: products, clique search and Ramsey checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "Machine-readable output");
  app.add_option("--threads", gl.threads, "Worker threads (0 = auto)");

  std::size_t n = 0, k = 0, m = 0, bip = 0;
  std::vector<std::size_t> anti;
  std::string out, path, bounds = "5";
  bool colored = false;
  std::uint64_t budget = SolverOptions{}.node_budget;
  std::vector<std::string> tags;

  auto* graph = app.add_subcommand("graph", "Write the exclusivity graph of a PR box (DIMACS + JSON)");
  graph->add_option("--n", n, "Cycle length")->required();
  graph->add_option("--anti", anti, "Anti-correlated contexts (default: n-1)")->delimiter(',');
  graph->add_option("--out", out, "Output file prefix");

  auto* product = app.add_subcommand("product", "Write J^k or the multicolor product of k canonical PR boxes");
  product->add_option("--n", n, "Cycle length")->required();
  product->add_option("--k", k, "Number of copies")->required();
  product->add_flag("--colored", colored, "Multicolor product instead of the OR product");
  product->add_option("--out", out, "Output file prefix");

  auto* solve = app.add_subcommand("solve", "Exact clique number of J^k and violation certificate");
  solve->add_option("--n", n, "Cycle length")->required();
  solve->add_option("--k", k, "Number of copies")->required();
  solve->add_option("--budget", budget, "Branch-node budget");
  solve->add_option("--certificate", path, "Write a violation certificate here");

  auto* verify = app.add_subcommand("verify", "Run the named checks (all when no tag is given)");
  verify->add_option("tags", tags, "Tags")->check(CLI::IsMember(verify_tags()));
  verify->add_option("--budget", budget, "Branch-node budget per solver call");

  auto* rule = app.add_subcommand("rule-out", "Verdict for k copies of the n-cycle PR box");
  rule->add_option("k", k, "Number of copies")->required();
  rule->add_option("n", n, "Cycle length")->required();

  auto* cert = app.add_subcommand("check-certificate", "Revalidate a violation certificate");
  cert->add_option("file", path, "Certificate JSON")->required();

  auto* check_col = app.add_subcommand("check-coloring", "Revalidate an edge coloring and report short odd cycles");
  check_col->add_option("file", path, "Coloring JSON")->required();
  check_col->add_option("--bounds", bounds, "Odd cycle bound(s), comma separated");

  auto* coloring = app.add_subcommand("coloring", "Search for (or construct) an edge coloring");
  coloring->add_option("--m", m, "Vertices of K_m");
  coloring->add_option("--k", k, "Colors");
  coloring->add_option("--bounds", bounds, "Odd cycle bound(s), comma separated");
  coloring->add_option("--bipartite", bip, "Emit the recursive bipartite coloring of K_{2^k} instead");
  coloring->add_option("--out", out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*graph) return cmd_graph(gl, n, anti, out);
    if (*product) return cmd_product(gl, n, k, colored, out);
    if (*solve) return cmd_solve(gl, n, k, budget, path);
    if (*verify) return cmd_verify(gl, tags, budget);
    if (*rule) return cmd_rule_out(gl, k, n);
    if (*cert) return cmd_check_certificate(gl, path);
    if (*check_col) return cmd_check_coloring(gl, path, bounds);
    if (*coloring) {
      if (bip == 0) require(m >= 2 && k >= 1, "coloring needs --m and --k, or --bipartite");
      return cmd_coloring(gl, m, k, bounds, bip, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::budget_exceeded ? exit_budget : exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
