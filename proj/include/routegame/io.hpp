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

// Instance documents in, JSON / CSV / SVG out. Numbers in JSON output are
// objects {"exact": "p/q", "approx": double}; inputs accept "p/q" or decimal
// strings and JSON integers.

#ifndef ROUTEGAME_IO_HPP_
#define ROUTEGAME_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "routegame/attacker.hpp"
#include "routegame/equilibria.hpp"
#include "routegame/hardness.hpp"
#include "routegame/model.hpp"
#include "routegame/stackelberg.hpp"
#include "routegame/valueinfo.hpp"

namespace routegame {

struct InstanceDocument {
  explicit InstanceDocument(ParallelNetwork n) : network(std::move(n)) {}

  ParallelNetwork network;
  std::optional<Rational> demand;             // "r"
  std::optional<Rational> budget;             // "r_a" as a number
  std::optional<BudgetInterval> interval;     // "r_a" as {"lo", "hi"}
  std::optional<FlowProfile> route;
  std::optional<FlowProfile> attack;
};

// Throws Error(kParse) with line/column for syntax errors and the field path
// for schema errors.
InstanceDocument parse_instance(std::string_view text);
KnapsackInstance parse_knapsack(std::string_view text);

// Reads a number written by the renderers below, or an input-style number.
Rational parse_number_json(std::string_view text);

std::string block_json(const BlockReport& report);
std::string best_response_json(const Rational& budget, const BestResponseResult& result);
std::string thresholds_json(const ParallelNetwork& network, const Rational& demand);
std::string regime_json(const RegimeReport& report);
std::string stackelberg_json(const Rational& budget, const StackelbergResult& result);
std::string risk_json(const RiskResult& result);
std::string voi_json(const BudgetInterval& interval, const VoiResult& result);
std::string knapsack_json(std::string_view method, const KnapsackSolution& solution);
std::string knapsack_compare_json(const KnapsackSolution& via_attack, const KnapsackSolution& dp);

std::string regions_csv(const std::vector<RegionCell>& cells);
// Rows at every breakpoint of either curve; b_star is omitted when absent.
std::string curve_csv(const PiecewiseLinearCurve& b_se, const PiecewiseLinearCurve* b_star);
std::string risk_csv(const RiskResult& result);

struct SvgSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

std::string svg_line_plot(const std::vector<SvgSeries>& series, std::string_view title,
                          std::string_view x_label, std::string_view y_label);
// One colored cell per (r, r^a) grid point.
std::string svg_region_map(const std::vector<RegionCell>& cells, const Rational& step,
                           std::string_view title);

}  // namespace routegame

#endif  // ROUTEGAME_IO_HPP_
