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

#include "routegame/equilibria.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "routegame/attacker.hpp"

namespace routegame {
namespace {

void require_demand(const ParallelNetwork& network, const Rational& demand) {
  if (demand.sign() < 0) throw Error(ErrorKind::kDomain, "demand r is negative");
  if (demand > network.total_capacity()) {
    throw Error(ErrorKind::kDomain, "demand r = " + demand.str() + " exceeds C(E) = " +
                                        network.total_capacity().str() + "; no feasible route");
  }
}

// max_k (sum of the k largest capacities - offset) / k, largest k on ties.
Threshold prefix_scan(const ParallelNetwork& network, const Rational& offset) {
  std::vector<int> order(network.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return network.capacity(a) > network.capacity(b);
  });
  Rational prefix;
  Rational best;
  std::size_t best_k = 0;
  for (std::size_t k = 1; k <= order.size(); ++k) {
    prefix += network.capacity(order[k - 1]);
    const Rational avg = (prefix - offset) / Rational(static_cast<long long>(k));
    if (best_k == 0 || avg >= best) {
      best = avg;
      best_k = k;
    }
  }
  Threshold t{best, EdgeSet(order.begin(), order.begin() + static_cast<long>(best_k))};
  std::sort(t.argmax.begin(), t.argmax.end());
  return t;
}

void check_policy(const ParallelNetwork& network, const Rational& demand, const FlowProfile& f,
                  const char* name) {
  if (!is_feasible_route(network, demand, f)) {
    throw Error(ErrorKind::kInternal, std::string(name) + " is not a feasible route");
  }
}

}  // namespace

Threshold compute_g(const ParallelNetwork& network, const Rational& demand) {
  require_demand(network, demand);
  return prefix_scan(network, demand);
}

Threshold compute_h(const ParallelNetwork& network, const Rational& demand) {
  require_demand(network, demand);
  return prefix_scan(network, network.total_capacity() - demand);
}

FlowProfile build_flo(const ParallelNetwork& network, const Rational& demand) {
  const Rational g = compute_g(network, demand).value;
  std::vector<Rational> f;
  for (const auto& c : network.capacities()) f.push_back(max(c - g, Rational()));
  FlowProfile out(std::move(f));
  check_policy(network, demand, out, "f^lo");
  return out;
}

FlowProfile build_fhi(const ParallelNetwork& network, const Rational& demand) {
  const Rational h = compute_h(network, demand).value;
  std::vector<Rational> f;
  for (const auto& c : network.capacities()) f.push_back(min(c, h));
  FlowProfile out(std::move(f));
  check_policy(network, demand, out, "f^hi");
  return out;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kZeroBlockNE: return "zero_block_ne";
    case Regime::kFullBlockNE: return "full_block_ne";
    case Regime::kNoNE: return "no_ne";
  }
  return "unknown";
}

RegimeReport classify_regime(const GameInstance& instance) {
  instance.validate();
  const auto& net = instance.network;
  RegimeReport report;
  report.g = compute_g(net, instance.demand).value;
  report.h = compute_h(net, instance.demand).value;
  report.high_threshold = net.total_capacity() - report.h;
  report.zero_block = instance.budget <= report.g;
  report.full_block = instance.budget >= report.high_threshold;
  if (report.zero_block) {
    report.regime = Regime::kZeroBlockNE;
  } else if (report.full_block) {
    report.regime = Regime::kFullBlockNE;
    report.value = block_lower_bound(net, instance.demand, instance.budget);
  }
  return report;
}

bool verify_nash(const GameInstance& instance, const FlowProfile& route,
                 const FlowProfile& attack) {
  instance.validate();
  require_feasible(instance.network, instance.demand, route, "route");
  require_feasible(instance.network, instance.budget, attack, "attack");
  const Rational value = blocked(instance.network, route, attack).total;
  if (value != block_lower_bound(instance.network, instance.demand, instance.budget)) return false;
  return best_response(instance.network, route, instance.budget).value == value;
}

std::vector<RegionCell> region_map(const ParallelNetwork& network, const Rational& r_max,
                                   const Rational& ra_max, const Rational& step) {
  if (step.sign() <= 0) throw Error(ErrorKind::kDomain, "step must be positive");
  const Rational& total = network.total_capacity();
  const Rational r_end = min(r_max, total);
  const Rational ra_end = min(ra_max, total);
  std::vector<RegionCell> cells;
  for (Rational r; r <= r_end; r += step) {
    const Rational g = compute_g(network, r).value;
    const Rational high = total - compute_h(network, r).value;
    for (Rational ra; ra <= ra_end; ra += step) {
      Regime regime = Regime::kNoNE;
      if (ra <= g) {
        regime = Regime::kZeroBlockNE;
      } else if (ra >= high) {
        regime = Regime::kFullBlockNE;
      }
      cells.push_back({r, ra, regime});
    }
  }
  return cells;
}

}  // namespace routegame
