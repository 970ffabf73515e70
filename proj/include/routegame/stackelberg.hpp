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

// Stackelberg routing: the router commits to f, the attacker best-responds.
//
//   B^SE(r, r^a) = min_{f feasible} B*(f, r^a)
//
// B*(f, r^a) is convex and piecewise linear in f, so the minimum is found by
// projected subgradient descent plus an exact certificate. Two-link networks
// have a closed form.

#ifndef ROUTEGAME_STACKELBERG_HPP_
#define ROUTEGAME_STACKELBERG_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "routegame/attacker.hpp"
#include "routegame/curve.hpp"
#include "routegame/model.hpp"

namespace routegame {

struct StackelbergOptions {
  double tolerance = 1e-6;
  int max_iterations = 5000;  // subgradient steps per start
  std::uint64_t seed = 0;
  int max_cut_rounds = 400;
  std::size_t max_edges = 20;
  unsigned threads = 0;  // 0: ROUTEGAME_THREADS or hardware concurrency
};

struct Certificate {
  Rational upper;  // B* at the returned route
  Rational lower;  // proven lower bound on B^SE
  Rational gap;    // upper - lower
};

enum class SeMethod {
  kZeroBlockPolicy,     // r^a <= g, route f^lo
  kFullBlockPolicy,     // r^a >= C(E) - h, route f^hi
  kTwoLinkClosedForm,   // case analysis on two links
  kTwoLinkCorrected,    // case route was not optimal; exact 1-D minimizer used
  kNumerical,           // subgradient plus certificate
};

std::string_view to_string(SeMethod method);

struct StackelbergResult {
  FlowProfile route;
  Rational value;  // = certificate.upper
  Certificate certificate;
  bool converged = true;  // certificate.gap <= tolerance
  SeMethod method = SeMethod::kNumerical;
  int iterations = 0;
  int cut_rounds = 0;
};

// Best of the two "fill one edge first" attacks. Throws Error(kShape) unless
// the network has two edges.
BestResponseResult two_link_best_response(const ParallelNetwork& network, const FlowProfile& route,
                                          const Rational& budget);

// Exact two-link Stackelberg route and value (gap 0).
StackelbergResult two_link_se(const ParallelNetwork& network, const Rational& demand,
                              const Rational& budget);

// General solver. Regime instances return f^lo / f^hi with gap 0. A result
// whose gap exceeds the tolerance has converged == false.
StackelbergResult solve_stackelberg(const GameInstance& instance,
                                    const StackelbergOptions& options = {});

struct StackelbergCurve {
  PiecewiseLinearCurve curve;            // (r^a, B^SE) joined linearly
  std::vector<StackelbergResult> points;  // one per breakpoint
  bool converged = true;
};

// B^SE(r, .) at the subset sums in [0, budget_max], the regime thresholds and
// `samples` uniform points. Two-link networks use the closed form.
StackelbergCurve stackelberg_curve(const ParallelNetwork& network, const Rational& demand,
                                   const Rational& budget_max, int samples,
                                   const StackelbergOptions& options = {});

}  // namespace routegame

#endif  // ROUTEGAME_STACKELBERG_HPP_
