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

// Nash regimes of the routing game.
//
//   g = max_{E' != {}} (C(E') - r) / |E'|       zero blocking iff r^a <= g
//   h = max_{E' != {}} (r - C(E \ E')) / |E'|   full blocking iff r^a >= C(E) - h
//
// Both maxima are attained on prefixes of the capacities sorted in
// decreasing order, so each is an O(|E| log |E|) scan.

#ifndef ROUTEGAME_EQUILIBRIA_HPP_
#define ROUTEGAME_EQUILIBRIA_HPP_

#include <string_view>
#include <vector>

#include "routegame/model.hpp"

namespace routegame {

struct Threshold {
  Rational value;
  EdgeSet argmax;  // largest maximizing prefix, as sorted edge indices
};

Threshold compute_g(const ParallelNetwork& network, const Rational& demand);
Threshold compute_h(const ParallelNetwork& network, const Rational& demand);

// f^lo_e = max(c_e - g, 0) and f^hi_e = min(c_e, h). Both carry exactly r.
FlowProfile build_flo(const ParallelNetwork& network, const Rational& demand);
FlowProfile build_fhi(const ParallelNetwork& network, const Rational& demand);

enum class Regime { kZeroBlockNE, kFullBlockNE, kNoNE };

std::string_view to_string(Regime regime);  // zero_block_ne, full_block_ne, no_ne

struct RegimeReport {
  Rational g;
  Rational h;
  Rational high_threshold;  // C(E) - h
  Regime regime = Regime::kNoNE;
  bool zero_block = false;  // r^a <= g
  bool full_block = false;  // r^a >= C(E) - h
  // Exact equilibrium value when an NE exists.
  Rational value;
};

RegimeReport classify_regime(const GameInstance& instance);

// True iff the attack is a best response to the route and the blocked total
// equals max(r + r^a - C(E), 0). Throws Error(kDomain) on infeasible input.
bool verify_nash(const GameInstance& instance, const FlowProfile& route, const FlowProfile& attack);

struct RegionCell {
  Rational r;
  Rational ra;
  Regime regime;
};

// Row-major grid over r = 0, step, ... and r^a = 0, step, ..., both clipped
// to C(E).
std::vector<RegionCell> region_map(const ParallelNetwork& network, const Rational& r_max,
                                   const Rational& ra_max, const Rational& step);

}  // namespace routegame

#endif  // ROUTEGAME_EQUILIBRIA_HPP_
