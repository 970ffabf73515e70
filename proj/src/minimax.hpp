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

// Minimizes  Phi(f) = max_k ( B*(f, x_k) - o_k )  over feasible routes.
//
// Projected subgradient descent in double from several starts, then exact
// refinement: every evaluated best response yields an affine minorant of
// Phi, and the minimum of those minorants over the route polytope is both the
// next trial route and a certified lower bound.

#ifndef ROUTEGAME_SRC_MINIMAX_HPP_
#define ROUTEGAME_SRC_MINIMAX_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "routegame/model.hpp"
#include "routegame/stackelberg.hpp"

namespace routegame::detail {

struct MinimaxTerm {
  Rational budget;
  Rational offset;
};

struct MinimaxResult {
  FlowProfile route;
  Rational upper;  // Phi(route), exact
  Rational lower;  // certified lower bound on min Phi
  std::size_t term = 0;  // a term attaining Phi(route)
  int iterations = 0;
  int cut_rounds = 0;
};

MinimaxResult minimize_max(const ParallelNetwork& network, const Rational& demand,
                           const std::vector<MinimaxTerm>& terms,
                           const StackelbergOptions& options,
                           const std::vector<FlowProfile>& extra_starts = {});

// Projection of y onto {sum x = r, 0 <= x <= c}.
std::vector<double> project_bounded_simplex(const std::vector<double>& y,
                                            const std::vector<double>& capacity, double demand);

// Nearby feasible route with rational entries of bounded denominator.
FlowProfile snap_route(const ParallelNetwork& network, const Rational& demand,
                       const std::vector<double>& x, std::int64_t max_denominator);

}  // namespace routegame::detail

#endif  // ROUTEGAME_SRC_MINIMAX_HPP_
