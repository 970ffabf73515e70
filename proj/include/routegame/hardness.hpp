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

// 0-1 knapsack as a best-response problem: item e becomes an edge with
// c_e = w_e carrying f_e = eps * v_e, and the budget is W. With eps small
// enough every edge is blocked fully or not at all, so the saturated set of a
// best response is an optimal packing.

#ifndef ROUTEGAME_HARDNESS_HPP_
#define ROUTEGAME_HARDNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "routegame/model.hpp"

namespace routegame {

struct KnapsackItem {
  Rational w;
  Rational v;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  Rational W;

  // Throws Error(kDomain) on a negative weight, value or capacity.
  void validate() const;
};

struct KnapsackSolution {
  Rational value;
  std::vector<int> selection;  // ascending item indices
};

// min over E' with r^a - C(E') > 0 of r^a - C(E'). Throws Error(kDomain) for
// a non-positive budget.
Rational epsilon_threshold(const ParallelNetwork& network, const Rational& budget,
                           std::size_t max_edges = 20);

struct ReducedInstance {
  std::optional<ParallelNetwork> network;  // empty when degenerate
  FlowProfile route;
  Rational budget;
  Rational epsilon;
  bool degenerate = false;  // W == 0: nothing fits, value 0
};

// Requires every weight to be positive (zero-weight items are the caller's to
// strip). The budget is min(W, sum w). eps is half of the smallest of the
// threshold above, the smallest positive excess C(E') - r^a and the smallest
// weight, divided by max v.
ReducedInstance kp_to_attack(const KnapsackInstance& kp, std::size_t max_edges = 20);

// Strips zero-weight items, reduces, solves the best response and reads the
// packing off the saturated set.
KnapsackSolution solve_kp_via_attack(const KnapsackInstance& kp, std::size_t max_edges = 20);

// Table over integer capacities after clearing denominators. Throws
// Error(kSize) when the cleared W exceeds max_table.
KnapsackSolution knapsack_dp(const KnapsackInstance& kp, std::int64_t max_table = 1'000'000);

}  // namespace routegame

#endif  // ROUTEGAME_HARDNESS_HPP_
