#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "exclo/exgraph.hpp"
#include "exclo/product.hpp"
#include "support.hpp"

using namespace exclo;

namespace {

WeightedGraph pr_factor(std::size_t n) { return build_exclusivity_graph(make_pr_box(PrBoxSpec::canonical(n))); }

WeightedGraph random_factor(oracle::Rng& rng, std::size_t max_order) {
  std::size_t n = oracle::uniform(rng, 1, max_order);
  WeightedGraph f{oracle::random_graph(rng, n, oracle::uniform_real(rng, 0.1, 0.7)), {}};
  for (std::size_t v = 0; v < n; ++v) f.weights.emplace_back(static_cast<std::int64_t>(oracle::uniform(rng, 1, 4)), 8);
  return f;
}

/// Direct definition: tuples in lexicographic order, edge iff some
/// coordinate is an edge, weight the product.
struct NaiveProduct {
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::vector<bool>> adj;
  std::vector<Rational> weights;
};

NaiveProduct naive_product(const std::vector<WeightedGraph>& fs) {
  NaiveProduct p;
  p.tuples = {{}};
  for (const auto& f : fs) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : p.tuples)
      for (std::size_t v = 0; v < f.order(); ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(u);
      }
    p.tuples = next;
  }
  const std::size_t n = p.tuples.size();
  p.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    Rational w(1);
    for (std::size_t i = 0; i < fs.size(); ++i) w *= fs[i].weights[p.tuples[a][i]];
    p.weights.push_back(w);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].graph.has_edge(p.tuples[a][i], p.tuples[b][i])) p.adj[a][b] = true;
  }
  return p;
}

}  // namespace

TEST(Shape, EncodeDecodeLexicographic) {
  ProductShape s({3, 4, 2});
  EXPECT_EQ(s.total(), 24U);
  EXPECT_EQ(s.decode(0), (TupleVertex{0, 0, 0}));
  EXPECT_EQ(s.decode(1), (TupleVertex{0, 0, 1}));
  EXPECT_EQ(s.decode(23), (TupleVertex{2, 3, 1}));
  for (std::size_t v = 0; v < s.total(); ++v) EXPECT_EQ(s.encode(s.decode(v)), v);
  EXPECT_THROW(s.encode({0, 4, 0}), Error);
}

TEST(OrProduct, CompleteGraphsAddUp) {
  auto k2 = WeightedGraph::uniform(complete_graph(2), Rational(1, 2));
  std::vector<WeightedGraph> fs{k2, k2};
  EXPECT_EQ(or_product(fs).graph, complete_graph(4));
  auto k3 = WeightedGraph::uniform(complete_graph(3), Rational(1, 3));
  std::vector<WeightedGraph> gs{k3, k2};
  EXPECT_EQ(or_product(gs).graph, complete_graph(6));
}

TEST(OrProduct, TwoFourCycleBoxesMatchPairwiseOracle) {
  auto fs = copies(pr_factor(4), 2);
  auto j = or_product(fs);
  ASSERT_EQ(j.order(), 64U);
  for (const auto& w : j.weights) EXPECT_EQ(w, Rational(1, 4));
  auto naive = naive_product(fs);
  std::size_t edges = 0;
  for (std::size_t a = 0; a < 64; ++a)
    for (std::size_t b = a + 1; b < 64; ++b) edges += naive.adj[a][b];
  EXPECT_EQ(edges, 1248U);
  EXPECT_EQ(j.graph.edge_count(), 1248U);
}

TEST(OrProduct, EqualsFlattenedMulticolorProductOnRandomFactors) {
  oracle::Rng rng(99);
  for (int round = 0; round < 100; ++round) {
    std::size_t k = oracle::uniform(rng, 1, 3);
    std::vector<WeightedGraph> fs;
    for (std::size_t i = 0; i < k; ++i) fs.push_back(random_factor(rng, k == 3 ? 8 : 12));
    auto j = or_product(fs);
    auto m = multicolor_product(fs);
    auto flat = flatten(m);
    ASSERT_EQ(flat.graph, j.graph) << round;
    ASSERT_EQ(flat.weights, j.weights);
    ASSERT_EQ(flat.shape, j.shape);
    auto naive = naive_product(fs);
    for (std::size_t a = 0; a < j.order(); ++a) {
      ASSERT_EQ(j.shape.decode(a), naive.tuples[a]);
      ASSERT_EQ(j.weights[a], naive.weights[a]);
      for (std::size_t b = 0; b < j.order(); ++b)
        if (a != b) { ASSERT_EQ(j.graph.has_edge(a, b), naive.adj[a][b]); }
    }
  }
}

TEST(Multicolor, LayerEdgesMatchDefinition) {
  auto f = pr_factor(4);
  auto m = multicolor_product(copies(f, 2));
  // Each factor edge {a, b} lifts to 8 x 8 ordered choices of the other
  // coordinate: 12 * 64 edges per layer.
  for (std::size_t c = 1; c <= 2; ++c) {
    std::size_t count = 0;
    for (std::size_t u = 0; u < 64; ++u)
      for (std::size_t v = u + 1; v < 64; ++v)
        count += f.graph.has_edge(m.shape.component(u, c - 1), m.shape.component(v, c - 1));
    EXPECT_EQ(projection(m, c).edge_count(), count);
    EXPECT_EQ(count, 12U * 64U);
  }
  EXPECT_THROW(projection(m, 0), Error);
  EXPECT_THROW(projection(m, 3), Error);
}

TEST(Multicolor, SingleFactorIsIdentity) {
  auto f = pr_factor(5);
  auto m = multicolor_product(copies(f, 1));
  EXPECT_EQ(projection(m, 1), f.graph);
  EXPECT_EQ(flatten(m).graph, f.graph);
}

TEST(Multicolor, ToyPathTimesEdge) {
  // A 3-vertex path and a single edge: each color-1 layer over a fixed
  // second component is a copy of the path.
  std::vector<WeightedGraph> fs{WeightedGraph::uniform(path_graph(3), Rational(1, 3)),
                                WeightedGraph::uniform(complete_graph(2), Rational(1, 2))};
  auto m = multicolor_product(fs);
  ASSERT_EQ(m.order(), 6U);
  for (std::size_t s = 0; s < 2; ++s) {
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < 3; ++v) layer.push_back(m.shape.encode({v, s}));
    EXPECT_EQ(projection(m, 1).induced(layer), path_graph(3));
  }
  EXPECT_EQ(fiber(m, 1, 0), (std::vector<std::size_t>{m.shape.encode({0, 0}), m.shape.encode({0, 1})}));
}

TEST(Multicolor, DisjointLayersAddUp) {
  // Edgeless second factor: the only layer with edges is color 1.
  std::vector<WeightedGraph> fs{WeightedGraph::uniform(cycle_graph(5), Rational(1, 5)),
                                WeightedGraph::uniform(Graph(3), Rational(1, 3))};
  auto m = multicolor_product(fs);
  EXPECT_EQ(flatten(m).graph.edge_count(), projection(m, 1).edge_count() + projection(m, 2).edge_count());
}

TEST(Fibers, PartitionTheVertexSet) {
  oracle::Rng rng(4);
  for (int round = 0; round < 20; ++round) {
    std::vector<WeightedGraph> fs{random_factor(rng, 6), random_factor(rng, 6), random_factor(rng, 4)};
    auto m = multicolor_product(fs);
    for (std::size_t c = 1; c <= 3; ++c) {
      std::vector<int> hits(m.order(), 0);
      for (std::size_t v = 0; v < fs[c - 1].order(); ++v) {
        auto f = fiber(m, c, v);
        EXPECT_EQ(f.size(), m.order() / fs[c - 1].order());
        for (auto u : f) ++hits[u];
      }
      for (auto h : hits) EXPECT_EQ(h, 1);
    }
    EXPECT_THROW(fiber(m, 1, fs[0].order()), Error);
  }
}

TEST(Projection, RepresentativesInduceTheFactor) {
  oracle::Rng rng(8);
  for (std::size_t n = 4; n <= 6; ++n) {
    auto m = multicolor_product(copies(pr_factor(n), 2));
    for (std::size_t c = 1; c <= 2; ++c)
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::size_t> reps;
        for (std::size_t v = 0; v < 2 * n; ++v) {
          auto f = fiber(m, c, v);
          reps.push_back(f[oracle::uniform(rng, 0, f.size() - 1)]);
        }
        EXPECT_EQ(projection(m, c).induced(reps), m.factors[c - 1].graph);
      }
  }
}

TEST(Projection, OddGirthEqualsFactorOddGirth) {
  for (std::size_t k = 2; k <= 3; ++k)
    for (std::size_t n = 4; n <= (k == 2 ? 8 : 5); ++n) {
      auto m = multicolor_product(copies(pr_factor(n), k));
      auto expected = odd_girth(m.factors[0].graph);
      for (std::size_t c = 1; c <= k; ++c) EXPECT_EQ(odd_girth(projection(m, c)), expected) << k << " " << n;
    }
}

TEST(Weights, ProductsOfPrBoxesAreUniform) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 4; n <= 6; ++n) {
      auto j = or_product(copies(pr_factor(n), k));
      for (const auto& w : j.weights) ASSERT_EQ(w, Rational(1, std::int64_t{1} << k));
    }
}

TEST(ShrinkOddCycle, DistinctFibersProjectDirectly) {
  auto f = pr_factor(4);
  auto m = multicolor_product(copies(f, 2));
  auto c5 = *odd_girth_witness(f.graph);
  OddCycleWitness lifted;
  for (std::size_t i = 0; i < c5.size(); ++i) lifted.push_back(m.shape.encode({c5[i], i}));
  EXPECT_EQ(shrink_odd_cycle(m, 1, lifted), c5);
}

TEST(ShrinkOddCycle, RandomLiftsShrinkToFactorCycles) {
  // Random odd closed walks of the factor, lifted with random second
  // components, form odd cycles in H_1 whenever the lifts are distinct.
  oracle::Rng rng(31);
  for (std::size_t n : {4, 5, 6}) {
    auto f = pr_factor(n);
    auto m = multicolor_product(copies(f, 2));
    const auto& h = projection(m, 1);
    auto brute = oracle::brute_odd_girth(f.graph.order() <= 10 ? f.graph : Graph(0));
    std::size_t produced = 0;
    for (int trial = 0; trial < 4000 && produced < 100; ++trial) {
      std::size_t len = 2 * oracle::uniform(rng, 1, 5) + 1;
      OddCycleWitness walk{oracle::uniform(rng, 0, f.order() - 1)};
      while (walk.size() < len) {
        auto nb = f.graph.neighbors(walk.back()).indices();
        walk.push_back(nb[oracle::uniform(rng, 0, nb.size() - 1)]);
      }
      OddCycleWitness lifted;
      for (auto v : walk) lifted.push_back(m.shape.encode({v, oracle::uniform(rng, 0, f.order() - 1)}));
      if (!is_odd_cycle(h, lifted)) continue;
      ++produced;
      auto out = shrink_odd_cycle(m, 1, lifted);
      EXPECT_TRUE(is_odd_cycle(f.graph, out));
      EXPECT_LE(out.size(), lifted.size());
      if (brute) { EXPECT_GE(out.size(), *brute); }
    }
    EXPECT_GT(produced, 20U) << n;
  }
}

TEST(ShrinkOddCycle, SameFiberPairIsCut) {
  // Five vertices of H_1 whose first components walk a 5-closed-walk that
  // revisits a factor vertex: the shrink must cut at the repeat.
  auto f = WeightedGraph::uniform(complete_graph(3), Rational(1, 3));
  auto m = multicolor_product(copies(f, 2));
  OddCycleWitness lifted{m.shape.encode({0, 0}), m.shape.encode({1, 0}), m.shape.encode({0, 1}),
                         m.shape.encode({1, 1}), m.shape.encode({2, 2})};
  ASSERT_TRUE(is_odd_cycle(projection(m, 1), lifted));
  auto out = shrink_odd_cycle(m, 1, lifted);
  EXPECT_EQ(out.size(), 3U);
  EXPECT_TRUE(is_odd_cycle(f.graph, out));
  EXPECT_THROW(shrink_odd_cycle(m, 1, {0, 1, 2}), Error);
}

TEST(Cap, ExceedingTheCapReportsCounts) {
  auto fs = copies(pr_factor(18), 4);
  try {
    or_product(fs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cap_exceeded);
    std::string what = e.what();
    EXPECT_NE(what.find("1679616"), std::string::npos);
    EXPECT_NE(what.find(std::to_string(default_vertex_cap)), std::string::npos);
  }
  EXPECT_THROW(or_product(copies(pr_factor(4), 2), 63), Error);
  EXPECT_NO_THROW(or_product(copies(pr_factor(4), 2), 64));
}

TEST(Cap, EnvironmentOverride) {
  ::setenv("EXCLO_VERTEX_CAP", "100", 1);
  EXPECT_EQ(vertex_cap(), 100U);
  ::setenv("EXCLO_VERTEX_CAP", "junk", 1);
  EXPECT_EQ(vertex_cap(), default_vertex_cap);
  ::unsetenv("EXCLO_VERTEX_CAP");
  EXPECT_EQ(vertex_cap(), default_vertex_cap);
}

TEST(Symmetry, GeneratorsAreWeightPreservingAutomorphisms) {
  oracle::Rng rng(12);
  for (int round = 0; round < 20; ++round) {
    auto f = random_factor(rng, 6);
    std::vector<WeightedGraph> fs{f, f, random_factor(rng, 5)};
    auto j = or_product(fs);
    auto check = [&](const Permutation& p) {
      for (std::size_t u = 0; u < j.order(); ++u) {
        ASSERT_EQ(j.weights[u], j.weights[p[u]]);
        for (std::size_t v = 0; v < j.order(); ++v)
          if (u != v) { ASSERT_EQ(j.graph.has_edge(u, v), j.graph.has_edge(p[u], p[v])); }
      }
    };
    for (const auto& p : product_automorphisms(j)) check(p);
    std::size_t v = oracle::uniform(rng, 0, j.order() - 1);
    for (const auto& p : product_stabilizer(j, v)) {
      check(p);
      EXPECT_EQ(p[v], v);
    }
  }
}

TEST(Json, MultigraphAndJointGraph) {
  auto m = multicolor_product(copies(pr_factor(4), 2));
  auto jm = to_json(m);
  EXPECT_EQ(jm["layers"].size(), 2U);
  EXPECT_EQ(jm["layers"][0]["edges"].size(), 768U);
  auto jj = to_json(flatten(m));
  EXPECT_EQ(jj["vertices"].size(), 64U);
  EXPECT_EQ(jj["vertices"][1]["tuple"], nlohmann::json({0, 1}));
  EXPECT_EQ(jj["vertices"][1]["weight"], "1/4");
}
