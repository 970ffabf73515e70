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

#include <algorithm>
#include <string>

#include "routegame/attacker.hpp"

namespace routegame {

void KnapsackInstance::validate() const {
  if (W.sign() < 0) throw Error(ErrorKind::kDomain, "knapsack capacity W is negative");
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].w.sign() < 0 || items[i].v.sign() < 0) {
      throw Error(ErrorKind::kDomain, "item " + std::to_string(i) + " has a negative weight or value");
    }
  }
}

Rational epsilon_threshold(const ParallelNetwork& network, const Rational& budget,
                           std::size_t max_edges) {
  if (budget.sign() <= 0) throw Error(ErrorKind::kDomain, "budget must be positive");
  const auto sums = subset_sums(network, max_edges);
  // Sums are ascending; the largest one below the budget is the answer.
  auto it = std::lower_bound(sums.begin(), sums.end(), budget);
  return budget - *std::prev(it);
}

ReducedInstance kp_to_attack(const KnapsackInstance& kp, std::size_t max_edges) {
  kp.validate();
  ReducedInstance out;
  if (kp.items.empty()) throw Error(ErrorKind::kDomain, "knapsack has no items");
  std::vector<Rational> c;
  Rational total, max_v, min_w = kp.items.front().w;
  for (std::size_t i = 0; i < kp.items.size(); ++i) {
    const auto& item = kp.items[i];
    if (item.w.sign() <= 0) {
      throw Error(ErrorKind::kDomain, "item " + std::to_string(i) +
                                          " has zero weight; strip it before reducing");
    }
    c.push_back(item.w);
    total += item.w;
    max_v = max(max_v, item.v);
    min_w = min(min_w, item.w);
  }
  ParallelNetwork network(c);
  out.budget = min(kp.W, total);
  if (out.budget.is_zero()) {
    out.degenerate = true;
    out.route = FlowProfile::zeros(c.size());
    out.network = std::move(network);
    return out;
  }

  const auto sums = subset_sums(network, max_edges);
  auto above = std::upper_bound(sums.begin(), sums.end(), out.budget);
  Rational bound = epsilon_threshold(network, out.budget, max_edges);
  if (above != sums.end()) bound = min(bound, *above - out.budget);
  bound = min(bound, min_w);
  out.epsilon = max_v.is_zero() ? Rational(1) : bound / (Rational(2) * max_v);

  std::vector<Rational> f;
  for (const auto& item : kp.items) f.push_back(out.epsilon * item.v);
  out.route = FlowProfile(std::move(f));
  out.network = std::move(network);
  return out;
}

KnapsackSolution solve_kp_via_attack(const KnapsackInstance& kp, std::size_t max_edges) {
  kp.validate();
  KnapsackSolution solution;
  KnapsackInstance positive;
  positive.W = kp.W;
  std::vector<int> index;
  std::vector<int> free_items;
  for (std::size_t i = 0; i < kp.items.size(); ++i) {
    if (kp.items[i].w.is_zero()) {
      free_items.push_back(static_cast<int>(i));
      solution.value += kp.items[i].v;
    } else {
      positive.items.push_back(kp.items[i]);
      index.push_back(static_cast<int>(i));
    }
  }
  solution.selection = free_items;
  if (positive.items.empty()) return solution;

  const ReducedInstance reduced = kp_to_attack(positive, max_edges);
  if (!reduced.degenerate) {
    BestResponseOptions options;
    options.max_edges = max_edges;
    const auto br = best_response(*reduced.network, reduced.route, reduced.budget, options);
    Rational picked;
    for (int e : br.structure.saturated) {
      solution.selection.push_back(index[e]);
      picked += positive.items[e].v;
    }
    if (picked * reduced.epsilon != br.value) {
      throw Error(ErrorKind::kInternal, "best response on the reduced instance blocks an edge partially");
    }
    solution.value += picked;
  }
  std::sort(solution.selection.begin(), solution.selection.end());
  return solution;
}

KnapsackSolution knapsack_dp(const KnapsackInstance& kp, std::int64_t max_table) {
  kp.validate();
  mpz_class scale = kp.W.denominator();
  for (const auto& item : kp.items) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), item.w.denominator().get_mpz_t());
  }
  const mpz_class cleared = mpz_class(kp.W.numerator() * scale) / kp.W.denominator();
  if (cleared > max_table) {
    throw Error(ErrorKind::kSize, "knapsack table needs " + cleared.get_str() +
                                      " columns; the cap is " + std::to_string(max_table));
  }
  const std::size_t cap = cleared.get_ui();
  const std::size_t n = kp.items.size();
  if (static_cast<double>(n) * static_cast<double>(cap + 1) > 2e8) {
    throw Error(ErrorKind::kSize, "knapsack table too large");
  }
  std::vector<std::size_t> weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class w = mpz_class(kp.items[i].w.numerator() * scale) / kp.items[i].w.denominator();
    weight[i] = w > cleared ? cap + 1 : w.get_ui();
  }

  std::vector<Rational> best(cap + 1);
  std::vector<std::vector<bool>> take(n, std::vector<bool>(cap + 1, false));
  for (std::size_t i = 0; i < n; ++i) {
    if (weight[i] > cap) continue;
    for (std::size_t x = cap + 1; x-- > weight[i];) {
      Rational cand = best[x - weight[i]] + kp.items[i].v;
      if (cand > best[x]) {
        best[x] = std::move(cand);
        take[i][x] = true;
      }
    }
  }
  KnapsackSolution solution;
  solution.value = best[cap];
  std::size_t x = cap;
  for (std::size_t i = n; i-- > 0;) {
    if (take[i][x]) {
      solution.selection.push_back(static_cast<int>(i));
      x -= weight[i];
    }
  }
  std::reverse(solution.selection.begin(), solution.selection.end());
  return solution;
}

}  // namespace routegame
