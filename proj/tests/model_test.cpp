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

#include "routegame/model.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace routegame {
namespace {

using testing::R;

const ParallelNetwork kFiveLink{2, 4, 9, 12, 20};

TEST(RationalTest, ParsesDecimalsFractionsAndIntegers) {
  EXPECT_EQ(Rational::parse("6.333"), R(6333, 1000));
  EXPECT_EQ(Rational::parse("19/3"), R(19, 3));
  EXPECT_EQ(Rational::parse("-4/6"), R(-2, 3));
  EXPECT_EQ(Rational::parse(" 47 "), R(47));
  EXPECT_EQ(Rational::parse(".5"), R(1, 2));
  EXPECT_EQ(Rational::parse("1e-3"), R(1, 1000));
  EXPECT_EQ(Rational::parse("2.5E2"), R(250));
  EXPECT_EQ(Rational::parse("0.1"), R(1, 10));  // never a binary float
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1..2", "--1", "1e", "3/4.5"}) {
    try {
      Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse) << bad;
    }
  }
}

TEST(RationalTest, CanonicalFormAndPrinting) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_TRUE(r.denominator() > 0);
  EXPECT_EQ(R(8, 4).str(), "2");
  EXPECT_EQ(Rational::from_double(0.375), R(3, 8));
  EXPECT_THROW(R(1) / R(0), Error);
}

TEST(RationalTest, ToDoubleRoundsToNearest) {
  EXPECT_EQ(R(59, 5).to_double(), 11.8);
  EXPECT_EQ(R(1, 3).to_double(), 1.0 / 3.0);
  EXPECT_EQ(R(-2, 3).to_double(), -2.0 / 3.0);
  EXPECT_EQ(Rational::parse("0.1").to_double(), 0.1);
  EXPECT_EQ(Rational::from_double(0.7).to_double(), 0.7);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> num(-1'000'000'007LL, 1'000'000'007LL), den(1, 999'999'937LL);
  for (int i = 0; i < 2000; ++i) {
    const long long p = num(rng), q = den(rng);
    EXPECT_EQ(R(p, q).to_double(), static_cast<double>(p) / static_cast<double>(q));
  }
}

TEST(RationalTest, BestApproximation) {
  EXPECT_EQ(best_approximation(Rational::from_double(19.0 / 3.0), 100), R(19, 3));
  EXPECT_EQ(best_approximation(Rational::from_double(3.14159265358979), 1000), R(355, 113));
  EXPECT_EQ(best_approximation(R(11, 3), 1), R(4));
  EXPECT_EQ(best_approximation(R(5, 4), 7), R(5, 4));
}

TEST(NetworkTest, RejectsEmptyOrNegative) {
  EXPECT_THROW(ParallelNetwork(std::vector<Rational>{}), Error);
  EXPECT_THROW((ParallelNetwork{1, -1}), Error);
  EXPECT_EQ(kFiveLink.total_capacity(), R(47));
}

TEST(SubsetCapacityTest, Examples) {
  const std::vector<int> pair{2, 3};
  EXPECT_EQ(subset_capacity(kFiveLink, pair), R(21));
  EXPECT_EQ(subset_capacity(kFiveLink, {}), R(0));
  const std::vector<int> all{0, 1, 2, 3, 4};
  EXPECT_EQ(subset_capacity(kFiveLink, all), R(47));
}

TEST(SubsetCapacityTest, OutOfRangeIndex) {
  const std::vector<int> bad{0, 5};
  try {
    subset_capacity(kFiveLink, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidSubset);
  }
  const std::vector<int> negative{-1};
  EXPECT_THROW(subset_capacity(kFiveLink, negative), Error);
}

TEST(BlockedTest, FiveLinkExample) {
  const BlockReport report =
      blocked(kFiveLink, FlowProfile{1, 1, 5, 10, 8}, FlowProfile{2, 4, 4, 4, 6});
  EXPECT_EQ(report.per_edge, (std::vector<Rational>{1, 1, 0, 2, 0}));
  EXPECT_EQ(report.total, R(4));
}

TEST(BlockedTest, StrongerAttack) {
  const BlockReport report =
      blocked(kFiveLink, FlowProfile{1, 1, 5, 10, 8}, FlowProfile{0, 0, 8, 12, 0});
  EXPECT_EQ(report.per_edge, (std::vector<Rational>{0, 0, 4, 10, 0}));
  EXPECT_EQ(report.total, R(14));
}

TEST(BlockedTest, NoAttackBlocksNothing) {
  EXPECT_EQ(blocked(kFiveLink, FlowProfile{2, 4, 9, 12, 20}, FlowProfile::zeros(5)).total, R(0));
}

TEST(BlockedTest, ShapeMismatch) {
  try {
    blocked(kFiveLink, FlowProfile{1, 1}, FlowProfile::zeros(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kShape);
  }
}

TEST(FeasibilityTest, Examples) {
  EXPECT_TRUE(is_feasible_route(kFiveLink, R(25), FlowProfile{1, 1, 5, 10, 8}));
  EXPECT_FALSE(is_feasible_route(kFiveLink, R(25), FlowProfile{3, 1, 5, 8, 8}));  // 3 > c_0
  EXPECT_FALSE(is_feasible_route(kFiveLink, R(26), FlowProfile{1, 1, 5, 10, 8}));  // sum r - 1
  EXPECT_THROW(is_feasible_route(kFiveLink, R(1), FlowProfile{1}), Error);
  EXPECT_THROW(require_feasible(kFiveLink, R(26), FlowProfile{1, 1, 5, 10, 8}, "route"), Error);
}

TEST(GameInstanceTest, Validation) {
  EXPECT_NO_THROW((GameInstance{kFiveLink, R(47), R(0)}.validate()));
  EXPECT_THROW((GameInstance{kFiveLink, R(48), R(0)}.validate()), Error);
  EXPECT_THROW((GameInstance{kFiveLink, R(1), R(-1)}.validate()), Error);
}

// Random feasible pairs: lower bound, symmetry, monotonicity, homogeneity.
TEST(BlockedPropertyTest, RandomFeasiblePairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto net = testing::random_network(1 + trial % 6, 12, rng, 0);
    const Rational r = testing::random_amount(net.total_capacity(), 4, rng);
    const Rational ra = testing::random_amount(net.total_capacity(), 4, rng);
    const FlowProfile f = testing::random_profile(net, r, 4, rng);
    const FlowProfile a = testing::random_profile(net, ra, 4, rng);
    ASSERT_TRUE(is_feasible_route(net, r, f));
    ASSERT_TRUE(is_feasible_route(net, ra, a));

    const BlockReport report = blocked(net, f, a);
    EXPECT_GE(report.total, block_lower_bound(net, r, ra));
    Rational sum;
    for (const auto& b : report.per_edge) {
      EXPECT_GE(b, R(0));
      sum += b;
    }
    EXPECT_EQ(sum, report.total);
    EXPECT_EQ(blocked(net, a, f).per_edge, report.per_edge);

    // Raising one attack entry never lowers blocking.
    std::vector<Rational> bumped(a.flows().begin(), a.flows().end());
    bumped[trial % net.size()] += R(1, 3);
    EXPECT_GE(blocked(net, f, FlowProfile(bumped)).total, report.total);

    // Degree-one homogeneity under joint scaling.
    const Rational k(7, 2);
    std::vector<Rational> c2, f2, a2;
    for (std::size_t e = 0; e < net.size(); ++e) {
      c2.push_back(net.capacity(e) * k);
      f2.push_back(f[e] * k);
      a2.push_back(a[e] * k);
    }
    EXPECT_EQ(blocked(ParallelNetwork(c2), FlowProfile(f2), FlowProfile(a2)).total,
              report.total * k);
  }
}

}  // namespace
}  // namespace routegame
