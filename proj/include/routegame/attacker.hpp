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

// The attacker's best response against a revealed route.
//
// Blocked traffic is a convex function of the attack on every edge (zero up to
// the residual c_e - f_e, then slope one), so its maximum over the attack
// polytope {sum a = r^a, 0 <= a <= c} is attained at a vertex: a saturated set
// S, at most one partially attacked edge carrying r^a - C(S), and nothing
// elsewhere. best_response enumerates those vertices with branch and bound.
// The problem is NP-hard in |E| (0-1 knapsack embeds into it), so the exact
// solvers are capped; best_response_dp and best_response_oracle are
// independent cross-checks.

#ifndef ROUTEGAME_ATTACKER_HPP_
#define ROUTEGAME_ATTACKER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "routegame/curve.hpp"
#include "routegame/model.hpp"

namespace routegame {

struct PartialAttack {
  int edge = -1;
  Rational amount;
  friend bool operator==(const PartialAttack&, const PartialAttack&) = default;
};

struct AttackStructure {
  EdgeSet saturated;                            // attack equals capacity
  std::optional<PartialAttack> partial;         // the one edge blocked partway
  std::vector<std::pair<int, Rational>> dump;   // budget placed without blocking
};

struct BestResponseResult {
  Rational value;  // B*(f, r^a)
  FlowProfile attack;
  AttackStructure structure;
};

struct BestResponseOptions {
  std::size_t max_edges = 20;
};

// Exact best response. Ties between optimal vertices are broken by smaller
// |S|, then lexicographically smaller S, then smaller partial edge (none
// first). Throws Error(kDomain) for an infeasible route or budget and
// Error(kSize) above options.max_edges.
BestResponseResult best_response(const ParallelNetwork& network, const FlowProfile& route,
                                 const Rational& budget, const BestResponseOptions& options = {});

// Value-only best response by a knapsack table over budget units; requires
// capacities and budget to share a common denominator L with budget * L <=
// max_table. Throws Error(kSize) otherwise.
Rational best_response_dp(const ParallelNetwork& network, const FlowProfile& route,
                          const Rational& budget, std::int64_t max_table = 1'000'000);

// Exhaustive search over attacks whose entries are multiples of
// 1/grid_denominator (the last edge takes the remainder). The result lies in
// [B* - |E|/grid_denominator, B*]. Throws Error(kSize) above max_points.
Rational best_response_oracle(const ParallelNetwork& network, const FlowProfile& route,
                              const Rational& budget, std::int64_t grid_denominator,
                              std::int64_t max_points = 20'000'000);

struct CurveOptions {
  std::size_t max_edges = 12;
};

// B*(f, .) on [0, budget_max] as breakpoints. Segments have slope 0 or 1.
PiecewiseLinearCurve b_star_curve(const ParallelNetwork& network, const FlowProfile& route,
                                  const Rational& budget_max, const CurveOptions& options = {});

// Distinct subset capacities {C(E') : E' subset of E}, ascending, 0 included.
// Throws Error(kSize) above max_edges.
std::vector<Rational> subset_sums(const ParallelNetwork& network, std::size_t max_edges = 20);

}  // namespace routegame

#endif  // ROUTEGAME_ATTACKER_HPP_
