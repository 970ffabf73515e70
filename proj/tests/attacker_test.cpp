// Copyright 2026 The routegame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "routegame/attacker.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace routegame {
namespace {

using testing::R;

const ParallelNetwork kFiveLink{2, 4, 9, 12, 20};
const FlowProfile kFiveRoute{1, 1, 5, 10, 8};

TEST(BestResponseTest, FiveLinkExample) {
  const auto result = best_response(kFiveLink, kFiveRoute, R(20));
  EXPECT_EQ(result.value, R(14));
  EXPECT_EQ(blocked(kFiveLink, kFiveRoute, result.attack).total, R(14));
  EXPECT_TRUE(is_feasible_route(kFiveLink, R(20), result.attack));
  EXPECT_EQ(testing::brute_best_response(kFiveLink, kFiveRoute, R(20)), R(14));
}

TEST(BestResponseTest, TwoLinkExample) {
  const ParallelNetwork net{3, 6};
  const FlowProfile f{2, 3};
  const auto result = best_response(net, f, R(5));
  EXPECT_EQ(result.value, R(2));
  EXPECT_EQ(testing::lattice_best_response(net, f, R(5), 2), R(2));
}

TEST(BestResponseTest, StructureReportsSaturatedAndPartial) {
  const ParallelNetwork net{3, 6};
  const FlowProfile f{2, 3};
  // Budget 8: S = {1}, partial edge 0 with 2 units blocks 1 more.
  const auto result = best_response(net, f, R(8));
  EXPECT_EQ(result.value, R(4));
  const auto& s = result.structure;
  Rational placed;
  for (int e : s.saturated) placed += net.capacity(e);
  if (s.partial) placed += s.partial->amount;
  for (const auto& [e, amount] : s.dump) placed += amount;
  EXPECT_EQ(placed, R(8));
  EXPECT_LE(s.saturated.size(), net.size());
}

TEST(BestResponseTest, ZeroAndFullBudget) {
  EXPECT_EQ(best_response(kFiveLink, kFiveRoute, R(0)).value, R(0));
  EXPECT_EQ(best_response(kFiveLink, kFiveRoute, R(47)).value, kFiveRoute.total());
}

TEST(BestResponseTest, Errors) {
  try {
    best_response(kFiveLink, kFiveRoute, R(48));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
  EXPECT_THROW(best_response(kFiveLink, FlowProfile{3, 0, 0, 0, 0}, R(1)), Error);
  EXPECT_THROW(best_response(kFiveLink, FlowProfile{1, 1}, R(1)), Error);
  BestResponseOptions tight;
  tight.max_edges = 4;
  try {
    best_response(kFiveLink, kFiveRoute, R(10), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSize);
  }
}

TEST(OracleTest, GridSearchExamples) {
  const ParallelNetwork net{3, 6};
  EXPECT_EQ(best_response_oracle(net, FlowProfile{2, 3}, R(5), 1), R(2));
  EXPECT_EQ(best_response_oracle(net, FlowProfile{2, 3}, R(5), 4), R(2));
  EXPECT_EQ(best_response_oracle(net, FlowProfile{3, 6}, R(11, 2), 2), R(11, 2));
}

TEST(DpTest, MatchesExamples) {
  EXPECT_EQ(best_response_dp(kFiveLink, kFiveRoute, R(20)), R(14));
  EXPECT_EQ(best_response_dp(ParallelNetwork{3, 6}, FlowProfile{2, 3}, R(5)), R(2));
  EXPECT_THROW(best_response_dp(kFiveLink, kFiveRoute, R(20), 10), Error);
}

TEST(SubsetSumsTest, SmallNetwork) {
  EXPECT_EQ(subset_sums(ParallelNetwork{3, 6}), (std::vector<Rational>{0, 3, 6, 9}));
  EXPECT_EQ(subset_sums(ParallelNetwork{1, 1, 2}), (std::vector<Rational>{0, 1, 2, 3, 4}));
}

TEST(CurveTest, TwoLinkBreakpoints) {
  const auto curve = b_star_curve(ParallelNetwork{3, 6}, FlowProfile{2, 3}, R(9));
  const std::vector<std::pair<Rational, Rational>> expected{
      {0, 0}, {1, 0}, {3, 2}, {5, 2}, {6, 3}, {7, 3}, {9, 5}};
  ASSERT_EQ(curve.points().size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(curve.points()[i].x, expected[i].first) << i;
    EXPECT_EQ(curve.points()[i].y, expected[i].second) << i;
  }
  for (const auto& s : curve.slopes()) EXPECT_TRUE(s == R(0) || s == R(1));
}

TEST(CurveTest, ValueOutsideDomain) {
  const auto curve = b_star_curve(ParallelNetwork{3, 6}, FlowProfile{2, 3}, R(9));
  EXPECT_EQ(curve.value_at(R(8)), R(4));
  EXPECT_THROW(curve.value_at(R(10)), Error);
}

// Equivalence with independent oracles on random instances.
TEST(BestResponsePropertyTest, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const auto net = testing::random_network(1 + trial % 7, 10, rng, 0);
    const Rational total = net.total_capacity();
    const FlowProfile f = testing::random_profile(net, testing::random_amount(total, 3, rng), 3, rng);
    const Rational ra = testing::random_amount(total, 3, rng);
    const auto result = best_response(net, f, ra);
    ASSERT_EQ(result.value, testing::brute_best_response(net, f, ra)) << trial;
    EXPECT_EQ(blocked(net, f, result.attack).total, result.value);
    EXPECT_TRUE(is_feasible_route(net, ra, result.attack));
    EXPECT_LE(result.value, f.total());
    EXPECT_LE(result.value, ra);
    EXPECT_EQ(result.value, best_response_dp(net, f, ra));
  }
}

TEST(BestResponsePropertyTest, MatchesLatticeSearch) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const auto net = testing::random_network(1 + trial % 3, 4, rng);
    const Rational total = net.total_capacity();
    const FlowProfile f = testing::random_profile(net, testing::random_amount(total, 1, rng), 1, rng);
    const Rational ra = testing::random_amount(total, 1, rng);
    // Integer data: the optimum sits on the unit lattice.
    EXPECT_EQ(best_response(net, f, ra).value, testing::lattice_best_response(net, f, ra, 1))
        << trial;
    EXPECT_EQ(best_response(net, f, ra).value, best_response_oracle(net, f, ra, 1));
  }
}

TEST(BestResponsePropertyTest, MonotoneAndOneLipschitzInBudget) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = testing::random_network(2 + trial % 5, 9, rng);
    const Rational total = net.total_capacity();
    const FlowProfile f = testing::random_profile(net, testing::random_amount(total, 2, rng), 2, rng);
    Rational prev;
    for (Rational x; x <= total; x += R(1, 2)) {
      const Rational v = best_response(net, f, x).value;
      if (x.sign() > 0) {
        EXPECT_GE(v, prev);
        EXPECT_LE(v - prev, R(1, 2));
      }
      prev = v;
    }
  }
}

TEST(CurvePropertyTest, AgreesWithPointwiseBestResponse) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto net = testing::random_network(1 + trial % 5, 8, rng);
    const Rational total = net.total_capacity();
    const FlowProfile f = testing::random_profile(net, testing::random_amount(total, 2, rng), 2, rng);
    const auto curve = b_star_curve(net, f, total);
    for (const auto& s : curve.slopes()) EXPECT_TRUE(s == R(0) || s == R(1));
    for (Rational x; x <= total; x += R(1, 4)) {
      ASSERT_EQ(curve.value_at(x), best_response(net, f, x).value) << trial << " x=" << x;
    }
  }
}

TEST(BestResponsePropertyTest, Homogeneous) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto net = testing::random_network(1 + trial % 6, 9, rng);
    const Rational total = net.total_capacity();
    const FlowProfile f = testing::random_profile(net, testing::random_amount(total, 2, rng), 2, rng);
    const Rational ra = testing::random_amount(total, 2, rng);
    const Rational k(5, 3);
    std::vector<Rational> c2, f2;
    for (std::size_t e = 0; e < net.size(); ++e) {
      c2.push_back(net.capacity(e) * k);
      f2.push_back(f[e] * k);
    }
    EXPECT_EQ(best_response(ParallelNetwork(c2), FlowProfile(f2), ra * k).value,
              best_response(net, f, ra).value * k);
  }
}

}  // namespace
}  // namespace routegame
