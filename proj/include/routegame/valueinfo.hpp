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

// Value of knowing the attack budget.
//
//   risk  R(f, [lo, hi]) = max_{r^a in [lo, hi]} B*(f, r^a) - B^SE(r, r^a)
//   value V([lo, hi])    = min_f R(f, [lo, hi])
//
// B*(f, .) can only turn from slope 1 to slope 0 at a subset capacity, so the
// maximum is attained on the subset sums inside the interval or at an end.

#ifndef ROUTEGAME_VALUEINFO_HPP_
#define ROUTEGAME_VALUEINFO_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "routegame/model.hpp"
#include "routegame/stackelberg.hpp"

namespace routegame {

struct BudgetInterval {
  Rational lo;
  Rational hi;

  // Throws Error(kDomain) unless 0 <= lo <= hi <= C(E).
  void validate(const ParallelNetwork& network) const;
};

// Distinct subset capacities, ascending, 0 included.
std::vector<Rational> candidate_budgets(const ParallelNetwork& network, std::size_t max_edges = 20);

// Subset sums inside the interval plus both ends, ascending and distinct.
std::vector<Rational> risk_candidates(const ParallelNetwork& network, const BudgetInterval& interval,
                                      std::size_t max_edges = 20);

struct RiskPoint {
  Rational ra;
  Rational b_star;
  Rational b_se;        // B^SE found by the solver (exact for two links)
  Rational b_se_lower;  // certified lower bound on B^SE
  Rational diff;        // b_star - b_se
};

struct RiskResult {
  Rational risk;        // max diff
  Rational risk_upper;  // max (b_star - b_se_lower); equals risk when every B^SE is exact
  Rational argmax_budget;  // first candidate attaining risk
  std::vector<RiskPoint> per_candidate;
  bool converged = true;
};

RiskResult risk(const ParallelNetwork& network, const Rational& demand, const FlowProfile& route,
                const BudgetInterval& interval, const StackelbergOptions& options = {});

// |f_1 - (r + r^a - c_2)/2| with edge 1 the smaller capacity. Throws
// Error(kDomain) unless c_1 <= r^a <= c_2.
Rational two_link_gap(const ParallelNetwork& network, const Rational& demand,
                      const FlowProfile& route, const Rational& budget);

enum class VoiMethod {
  kClosedForm,   // quarter-overlap formula confirmed exactly
  kCorrected,    // formula route was not optimal; exact minimizer returned
  kZeroBlock,    // interval below g: f^lo has zero risk
  kNumerical,
};

std::string_view to_string(VoiMethod method);

struct VoiResult {
  Rational value;  // risk of `route` (with solver B^SE values)
  FlowProfile route;
  Rational lower;  // certified lower bound on V
  Rational upper;  // certified upper bound on V
  Rational gap;    // upper - lower
  bool converged = true;
  VoiMethod method = VoiMethod::kNumerical;
  Rational formula_value;  // two-link closed form, when computed
};

// Exact two-link value of information.
VoiResult two_link_voi(const ParallelNetwork& network, const Rational& demand,
                       const BudgetInterval& interval);

struct VoiOptions {
  StackelbergOptions solver;
  bool two_link_closed_form = true;
};

VoiResult value_of_information(const ParallelNetwork& network, const Rational& demand,
                               const BudgetInterval& interval, const VoiOptions& options = {});

}  // namespace routegame

#endif  // ROUTEGAME_VALUEINFO_HPP_
