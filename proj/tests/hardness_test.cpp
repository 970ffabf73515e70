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

#include "routegame/hardness.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "routegame/attacker.hpp"

namespace routegame {
namespace {

using testing::R;

KnapsackInstance three_items(long long W) {
  return {{{R(2), R(3)}, {R(3), R(4)}, {R(4), R(5)}}, R(W)};
}

Rational brute_knapsack(const KnapsackInstance& kp) {
  Rational best;
  for (unsigned mask = 0; mask < (1U << kp.items.size()); ++mask) {
    Rational w, v;
    for (std::size_t i = 0; i < kp.items.size(); ++i) {
      if (mask >> i & 1U) {
        w += kp.items[i].w;
        v += kp.items[i].v;
      }
    }
    if (w <= kp.W && v > best) best = v;
  }
  return best;
}

TEST(EpsilonThresholdTest, Examples) {
  EXPECT_EQ(epsilon_threshold(ParallelNetwork{2, 3}, R(4)), R(1));
  EXPECT_EQ(epsilon_threshold(ParallelNetwork{5, 7}, R(3)), R(3));
  EXPECT_EQ(epsilon_threshold(ParallelNetwork{2, 3, 4}, R(5)), R(1));
  EXPECT_THROW(epsilon_threshold(ParallelNetwork{2, 3}, R(0)), Error);
}

TEST(ReductionTest, ThreeItems) {
  const auto reduced = kp_to_attack(three_items(5));
  ASSERT_FALSE(reduced.degenerate);
  EXPECT_EQ(*reduced.network, (ParallelNetwork{2, 3, 4}));
  EXPECT_EQ(reduced.budget, R(5));
  EXPECT_EQ(reduced.epsilon, R(1, 10));
  EXPECT_EQ(reduced.route, (FlowProfile{R(3, 10), R(4, 10), R(5, 10)}));
}

TEST(ReductionTest, SingleItemAndDegenerate) {
  const auto one = kp_to_attack({{{R(1), R(1)}}, R(1)});
  EXPECT_EQ(*one.network, (ParallelNetwork{1}));
  EXPECT_EQ(one.budget, R(1));
  EXPECT_GT(one.route[0], R(0));
  EXPECT_LE(one.route[0], R(1));
  EXPECT_TRUE(kp_to_attack(three_items(0)).degenerate);
  EXPECT_EQ(solve_kp_via_attack(three_items(0)).value, R(0));
  EXPECT_THROW(kp_to_attack({{{R(0), R(1)}}, R(1)}), Error);
}

TEST(ReductionTest, ExcessBoundKeepsBlockingAllOrNothing) {
  // Threshold alone is 9 here, while C(E) - W = 1.
  const auto reduced = kp_to_attack({{{R(10), R(1)}}, R(9)});
  EXPECT_EQ(reduced.epsilon, R(1, 2));
  const auto br = best_response(*reduced.network, reduced.route, reduced.budget);
  EXPECT_EQ(br.value, R(0));
  EXPECT_EQ(solve_kp_via_attack({{{R(10), R(1)}}, R(9)}).value, R(0));
}

TEST(SolveViaAttackTest, Examples) {
  const auto sol = solve_kp_via_attack(three_items(5));
  EXPECT_EQ(sol.value, R(7));
  EXPECT_EQ(sol.selection, (std::vector<int>{0, 1}));
  const auto all = solve_kp_via_attack(three_items(100));
  EXPECT_EQ(all.value, R(12));
  EXPECT_EQ(all.selection, (std::vector<int>{0, 1, 2}));
  const auto none = solve_kp_via_attack({{{R(4), R(10)}}, R(3)});
  EXPECT_EQ(none.value, R(0));
  EXPECT_TRUE(none.selection.empty());
}

TEST(SolveViaAttackTest, ZeroWeightItemsAreFree) {
  const auto sol = solve_kp_via_attack({{{R(0), R(2)}, {R(3), R(4)}, {R(0), R(1)}}, R(2)});
  EXPECT_EQ(sol.value, R(3));
  EXPECT_EQ(sol.selection, (std::vector<int>{0, 2}));
}

TEST(KnapsackDpTest, Examples) {
  EXPECT_EQ(knapsack_dp(three_items(5)).value, R(7));
  EXPECT_EQ(knapsack_dp(three_items(5)).selection, (std::vector<int>{0, 1}));
  EXPECT_EQ(knapsack_dp({{}, R(5)}).value, R(0));
  EXPECT_EQ(knapsack_dp({{{R(1), R(1)}, {R(1), R(1)}, {R(1), R(1)}}, R(2)}).value, R(2));
  EXPECT_EQ(knapsack_dp({{{R(1, 2), R(3)}, {R(3, 4), R(5)}}, R(5, 4)}).value, R(8));
  EXPECT_THROW(knapsack_dp(three_items(5), 4), Error);
}

TEST(KnapsackPropertyTest, ReductionMatchesDpAndBruteForce) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> count(1, 15), weight(1, 30), value(0, 50);
  for (int trial = 0; trial < 200; ++trial) {
    KnapsackInstance kp;
    const int n = count(rng);
    Rational total;
    for (int i = 0; i < n; ++i) {
      kp.items.push_back({R(weight(rng)), R(value(rng))});
      total += kp.items.back().w;
    }
    kp.W = testing::random_amount(total + R(5), 1, rng);
    const auto via = solve_kp_via_attack(kp);
    ASSERT_EQ(via.value, knapsack_dp(kp).value) << trial;
    if (n <= 12) EXPECT_EQ(via.value, brute_knapsack(kp));
    Rational w, v;
    for (int i : via.selection) {
      w += kp.items[i].w;
      v += kp.items[i].v;
    }
    EXPECT_LE(w, kp.W);
    EXPECT_EQ(v, via.value);

    if (!kp.W.is_zero()) {
      const auto reduced = kp_to_attack(kp);
      const auto br = best_response(*reduced.network, reduced.route, reduced.budget);
      const auto report = blocked(*reduced.network, reduced.route, br.attack);
      for (std::size_t e = 0; e < report.per_edge.size(); ++e) {
        EXPECT_TRUE(report.per_edge[e].is_zero() || report.per_edge[e] == reduced.route[e]);
      }
    }
  }
}

TEST(KnapsackPropertyTest, RationalWeightsStayAllOrNothing) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> count(1, 8), weight(1, 40), value(1, 20);
  for (int trial = 0; trial < 150; ++trial) {
    KnapsackInstance kp;
    Rational total;
    for (int i = 0, n = count(rng); i < n; ++i) {
      kp.items.push_back({R(weight(rng), 4), R(value(rng))});
      total += kp.items.back().w;
    }
    kp.W = testing::random_amount(total, 7, rng);
    if (kp.W.is_zero()) continue;
    const auto reduced = kp_to_attack(kp);
    const auto br = best_response(*reduced.network, reduced.route, reduced.budget);
    const auto report = blocked(*reduced.network, reduced.route, br.attack);
    for (std::size_t e = 0; e < report.per_edge.size(); ++e) {
      EXPECT_TRUE(report.per_edge[e].is_zero() || report.per_edge[e] == reduced.route[e]);
    }
    EXPECT_EQ(solve_kp_via_attack(kp).value, brute_knapsack(kp)) << trial;
  }
}

TEST(KnapsackPropertyTest, ValueScaling) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> weight(1, 20), value(0, 30);
  for (int trial = 0; trial < 50; ++trial) {
    KnapsackInstance kp, scaled;
    for (int i = 0; i < 8; ++i) {
      kp.items.push_back({R(weight(rng)), R(value(rng))});
      scaled.items.push_back({kp.items.back().w, kp.items.back().v * R(7, 3)});
    }
    kp.W = scaled.W = R(weight(rng) * 2);
    const auto a = solve_kp_via_attack(kp);
    const auto b = solve_kp_via_attack(scaled);
    EXPECT_EQ(b.value, a.value * R(7, 3));
    Rational v;
    for (int i : b.selection) v += kp.items[i].v;
    EXPECT_EQ(v, a.value);
  }
}

}  // namespace
}  // namespace routegame
