#include <gtest/gtest.h>

#include "exclo/scenario.hpp"

using namespace exclo;

TEST(Scenario, ContextsAreCyclicPairs) {
  auto s = make_cycle_scenario(5);
  EXPECT_EQ(s.context(4), std::make_pair(std::size_t{4}, std::size_t{0}));
  EXPECT_EQ(s.contexts_of(0), std::make_pair(std::size_t{4}, std::size_t{0}));
  for (std::size_t n : {0, 1, 2, 3}) {
    try {
      make_cycle_scenario(n);
      FAIL() << "n=" << n << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::degenerate_scenario);
    }
  }
}

TEST(Scenario, JointOutcomeOrderAndParsing) {
  const char* names[] = {"++", "+-", "-+", "--"};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(JointOutcome::from_index(i).str(), names[i]);
    EXPECT_EQ(JointOutcome::parse(names[i]).index(), i);
  }
  EXPECT_TRUE(JointOutcome::parse("--").correlated());
  EXPECT_FALSE(JointOutcome::parse("-+").correlated());
  EXPECT_THROW(JointOutcome::parse("+"), Error);
  EXPECT_THROW(JointOutcome::parse("+x"), Error);
}

TEST(PrBox, CanonicalFourCycleTable) {
  auto box = make_pr_box(PrBoxSpec::canonical(4));
  const Rational h(1, 2), z(0);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(box.table(j), (ContextTable{h, z, z, h})) << j;
  EXPECT_EQ(box.table(3), (ContextTable{z, h, h, z}));
  EXPECT_TRUE(check_no_disturbance(box));
}

TEST(PrBox, ParityAndRangeErrors) {
  try {
    make_pr_box({4, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parity_violation);
  }
  EXPECT_THROW(make_pr_box({4, {}}), Error);
  EXPECT_THROW(make_pr_box({4, {4}}), Error);
  EXPECT_THROW(make_pr_box({5, {1, 1, 2}}), Error);
}

TEST(PrBox, EnumerationCountsAndMarginals) {
  for (std::size_t n = 4; n <= 12; ++n) {
    auto boxes = enumerate_pr_boxes(n);
    EXPECT_EQ(boxes.size(), std::size_t{1} << (n - 1));
    for (const auto& b : boxes) {
      EXPECT_TRUE(check_no_disturbance(b));
      for (std::size_t m = 0; m < n; ++m) EXPECT_EQ(b.marginal_plus(m, m), Rational(1, 2));
    }
  }
}

TEST(Correlation, RejectsBadTables) {
  auto s = make_cycle_scenario(4);
  ContextTable ok{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)};
  ContextTable neg{Rational(-1, 4), Rational(3, 4), Rational(1, 4), Rational(1, 4)};
  ContextTable short_sum{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(0)};
  EXPECT_NO_THROW(Correlation(s, {ok, ok, ok, ok}));
  EXPECT_THROW(Correlation(s, {ok, ok, ok}), Error);
  EXPECT_THROW(Correlation(s, {ok, ok, ok, neg}), Error);
  EXPECT_THROW(Correlation(s, {ok, short_sum, ok, ok}), Error);
}

TEST(Correlation, DisturbanceDetected) {
  auto s = make_cycle_scenario(4);
  const Rational h(1, 2), z(0);
  // Context 0 fixes measurement 1 to +, context 1 leaves it uniform.
  ContextTable fixed{h, z, h, z};
  ContextTable uniform{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)};
  ContextTable pr{h, z, z, h};
  EXPECT_FALSE(check_no_disturbance(Correlation(s, {fixed, pr, pr, pr})));
  EXPECT_TRUE(check_no_disturbance(Correlation(s, {uniform, uniform, uniform, uniform})));
}

TEST(Correlation, JsonRoundTrip) {
  for (const auto& box : enumerate_pr_boxes(5)) EXPECT_EQ(correlation_from_json(to_json(box)), box);
  auto j = to_json(make_pr_box(PrBoxSpec::canonical(4)));
  EXPECT_EQ(j["tables"][3]["probs"]["+-"], "1/2");
  EXPECT_EQ(j["tables"][3]["context"], nlohmann::json({3, 0}));
  auto broken = j;
  broken["tables"][1]["context"] = {1, 3};
  EXPECT_THROW(correlation_from_json(broken), Error);
  broken = j;
  broken["tables"][0]["probs"]["++"] = "1/3";
  EXPECT_THROW(correlation_from_json(broken), Error);
  EXPECT_THROW(correlation_from_json(nlohmann::json::object()), Error);
}
