#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "exclo/clique.hpp"
#include "exclo/error.hpp"
#include "exclo/exgraph.hpp"
#include "exclo/product.hpp"
#include "exclo/scenario.hpp"

namespace exclo {

/// The PR boxes whose joint graph hosts a certificate, in factor order.
struct HostDescriptor {
  std::vector<PrBoxSpec> factors;

  std::vector<WeightedGraph> factor_graphs() const {
    std::vector<WeightedGraph> out;
    for (const auto& f : factors) out.push_back(build_exclusivity_graph(make_pr_box(f)));
    return out;
  }
};

inline HostDescriptor canonical_host(std::size_t n, std::size_t k) {
  return {std::vector<PrBoxSpec>(k, PrBoxSpec::canonical(n))};
}

/// Joint graph of the host's factors.
inline JointGraph joint_graph(const HostDescriptor& host, std::size_t cap = vertex_cap()) {
  auto factors = host.factor_graphs();
  return or_product(factors, cap);
}

inline nlohmann::json certificate_to_json(const HostDescriptor& host, const ViolationCertificate& cert) {
  std::vector<ExclusivityGraph> graphs;
  std::vector<std::size_t> sizes;
  for (const auto& f : host.factors) {
    graphs.push_back(build_exclusivity_graph(make_pr_box(f)));
    sizes.push_back(graphs.back().order());
  }
  ProductShape shape(sizes);
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : host.factors) factors.push_back({{"n", f.n}, {"antiContexts", f.anti_contexts}});
  nlohmann::json vertices = nlohmann::json::array();
  for (auto v : cert.clique.vertices) {
    nlohmann::json tuple = nlohmann::json::array();
    auto t = shape.decode(v);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto& e = graphs[i].events[t[i]];
      tuple.push_back({{"context", e.context}, {"outcome", e.outcome.str()}});
    }
    vertices.push_back(tuple);
  }
  return {{"host", {{"k", host.factors.size()}, {"factors", factors}}},
          {"vertices", vertices},
          {"size", cert.clique.size()},
          {"weightSum", cert.clique.weight_sum.str()},
          {"excess", cert.excess.str()}};
}

struct CertificateCheck {
  bool valid = false;
  std::string reason;
};

/// Revalidates a certificate from its host descriptor alone: every vertex is
/// a tuple of positive-probability events, vertices are distinct, every pair
/// is exclusive in some coordinate, and the stated weight sum and excess are
/// exact and the excess is positive.
inline CertificateCheck check_certificate(const nlohmann::json& j) {
  auto reject = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  try {
    std::vector<Correlation> boxes;
    for (const auto& f : j.at("host").at("factors"))
      boxes.push_back(make_pr_box({f.at("n").get<std::size_t>(), f.at("antiContexts").get<std::vector<std::size_t>>()}));
    if (boxes.empty()) return reject("host has no factors");
    if (j.at("host").contains("k") && j["host"]["k"].get<std::size_t>() != boxes.size())
      return reject("host k does not match its factor list");

    std::vector<std::vector<Event>> tuples;
    Rational sum(0);
    for (const auto& vj : j.at("vertices")) {
      if (vj.size() != boxes.size()) return reject("vertex tuple has wrong arity");
      std::vector<Event> tuple;
      Rational w(1);
      for (std::size_t i = 0; i < boxes.size(); ++i) {
        Event e{vj[i].at("context").get<std::size_t>(), JointOutcome::parse(vj[i].at("outcome").get<std::string>())};
        if (e.context >= boxes[i].n()) return reject("event context out of range");
        Rational p = boxes[i].prob(e.context, e.outcome);
        if (p == Rational(0)) return reject("event " + e.str() + " has probability 0 in factor " + std::to_string(i + 1));
        w *= p;
        tuple.push_back(e);
      }
      sum += w;
      tuples.push_back(std::move(tuple));
    }
    for (std::size_t a = 0; a < tuples.size(); ++a)
      for (std::size_t b = a + 1; b < tuples.size(); ++b) {
        if (tuples[a] == tuples[b]) return reject("vertex " + std::to_string(a) + " is repeated");
        bool exclusive = false;
        for (std::size_t i = 0; i < boxes.size() && !exclusive; ++i)
          exclusive = are_exclusive(tuples[a][i], tuples[b][i], boxes[i].scenario());
        if (!exclusive)
          return reject("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not exclusive");
      }
    if (j.contains("size") && j["size"].get<std::size_t>() != tuples.size()) return reject("stated size is wrong");
    if (Rational::parse(j.at("weightSum").get<std::string>()) != sum)
      return reject("stated weight sum differs from recomputed " + sum.str());
    Rational excess = sum - Rational(1);
    if (Rational::parse(j.at("excess").get<std::string>()) != excess)
      return reject("stated excess differs from recomputed " + excess.str());
    if (excess <= Rational(0)) return reject("weight sum " + sum.str() + " does not exceed 1");
    return {true, "clique of " + std::to_string(tuples.size()) + " exclusive events, weight " + sum.str()};
  } catch (const nlohmann::json::exception& e) {
    return reject(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    return reject(e.what());
  }
}

}  // namespace exclo
