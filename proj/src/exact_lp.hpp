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

// Exact minimization of a maximum of affine minorants over the route polytope
//
//   min z  s.t.  z >= beta_j + sum_{e in T_j} f_e,  sum f = r,  0 <= f <= c
//
// solved through its dual (one row per edge plus one) with a dense rational
// simplex and Bland's rule.

#ifndef ROUTEGAME_SRC_EXACT_LP_HPP_
#define ROUTEGAME_SRC_EXACT_LP_HPP_

#include <vector>

#include "routegame/model.hpp"

namespace routegame::detail {

struct AffineCut {
  std::vector<int> support;  // edges with coefficient one
  Rational beta;
  friend bool operator==(const AffineCut&, const AffineCut&) = default;
};

struct CutModelSolution {
  Rational value;
  FlowProfile route;
};

CutModelSolution minimize_cut_model(const ParallelNetwork& network, const Rational& demand,
                                    const std::vector<AffineCut>& cuts);

}  // namespace routegame::detail

#endif  // ROUTEGAME_SRC_EXACT_LP_HPP_
