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

// Vertex enumeration shared by the exact best response (scaled int64 or GMP
// rationals) and the floating-point inner loop of the route solvers.

#ifndef ROUTEGAME_SRC_ATTACK_KERNEL_HPP_
#define ROUTEGAME_SRC_ATTACK_KERNEL_HPP_

#include <bit>
#include <type_traits>
#include <utility>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "routegame/attacker.hpp"
#include "routegame/model.hpp"

namespace routegame::detail {

using EdgeMask = std::uint64_t;
inline constexpr std::size_t kMaxMaskEdges = 63;

// A vertex of the attack polytope: saturated set plus optional partial edge.
template <class T>
struct Vertex {
  T value{};
  EdgeMask saturated = 0;
  int partial = -1;
};

// Tie-break order: larger value, then smaller |S|, then lexicographically
// smaller S, then smaller partial edge (none first).
template <class T>
bool better(const Vertex<T>& a, const Vertex<T>& b) {
  if (a.value != b.value) return a.value > b.value;
  const int pa = std::popcount(a.saturated), pb = std::popcount(b.saturated);
  if (pa != pb) return pa < pb;
  if (a.saturated != b.saturated) {
    const EdgeMask diff = a.saturated ^ b.saturated;
    return (a.saturated & (diff & (~diff + 1))) != 0;
  }
  return a.partial < b.partial;
}

template <class T>
class AttackKernel {
 public:
  // `slack` loosens the budget check for floating-point instantiations.
  AttackKernel(std::vector<T> capacity, std::vector<T> flow, T budget, T slack = T{})
      : capacity_(std::move(capacity)), flow_(std::move(flow)),
        budget_(std::move(budget)), slack_(std::move(slack)) {
    const std::size_t n = capacity_.size();
    threshold_.resize(n);
    suffix_flow_.assign(n + 1, T{});
    for (std::size_t e = 0; e < n; ++e) threshold_[e] = capacity_[e] - flow_[e];
    for (std::size_t e = n; e-- > 0;) suffix_flow_[e] = suffix_flow_[e + 1] + flow_[e];
  }

  std::size_t size() const { return capacity_.size(); }
  const T& budget() const { return budget_; }

  // Blocking gained by pouring `residual` onto a single unsaturated edge.
  T gain(int edge, const T& residual) const {
    T g = residual - threshold_[edge];
    if (g < T{}) return T{};
    if (g > flow_[edge]) return flow_[edge];
    return g;
  }

  // Visits every saturated set S with C(S) <= budget whose optimistic bound
  // reaches `floor`. The visitor gets (mask, C(S), sum of f over S) and may
  // raise `floor` to prune harder.
  template <class Visitor>
  void enumerate(T& floor, Visitor&& visit) const {
    dfs(0, 0, T{}, T{}, T{}, floor, visit);
  }

  Vertex<T> best() const {
    Vertex<T> best_vertex;
    bool found = false;
    T floor{};
    enumerate(floor, [&](EdgeMask mask, const T& used, const T& value) {
      Vertex<T> v = complete(mask, used, value);
      if (!found || better(v, best_vertex)) {
        best_vertex = v;
        found = true;
        floor = best_vertex.value;
      }
    });
    return best_vertex;
  }

  // Best partial edge for a saturated set; partial stays -1 when no edge gains.
  Vertex<T> complete(EdgeMask mask, const T& used, const T& value) const {
    Vertex<T> v;
    v.saturated = mask;
    v.value = value;
    T residual = budget_ - used;
    if (residual < T{}) residual = T{};
    T best_gain{};
    for (std::size_t e = 0; e < size(); ++e) {
      if (mask >> e & 1U) continue;
      T g = gain(static_cast<int>(e), residual);
      if (g > best_gain) {
        best_gain = g;
        v.partial = static_cast<int>(e);
      }
    }
    v.value = v.value + best_gain;
    return v;
  }

 private:
  template <class Visitor>
  void dfs(std::size_t i, EdgeMask mask, const T& used, const T& value, const T& max_excluded,
           T& floor, Visitor& visit) const {
    if (value + suffix_flow_[i] + max_excluded < floor) return;
    if (i == size()) {
      visit(mask, used, value);
      return;
    }
    T with = used + capacity_[i];
    if (!(with > budget_ + slack_)) {
      dfs(i + 1, mask | (EdgeMask{1} << i), with, value + flow_[i], max_excluded, floor, visit);
    }
    const T& excluded = flow_[i] > max_excluded ? flow_[i] : max_excluded;
    dfs(i + 1, mask, used, value, excluded, floor, visit);
  }

  std::vector<T> capacity_;
  std::vector<T> flow_;
  T budget_;
  T slack_;
  std::vector<T> threshold_;
  std::vector<T> suffix_flow_;
};

// Exact vertex search over the given data, using scaled 64-bit integers when
// the common denominator allows and GMP rationals otherwise.
struct ExactVertex {
  Rational value;
  EdgeMask saturated = 0;
  int partial = -1;
};

ExactVertex best_vertex_exact(const ParallelNetwork& network, const FlowProfile& route,
                              const Rational& budget);

// All vertices whose value is at least `floor` (at most `limit` of them, best
// first under the tie-break order). Every partial edge choice is reported.
std::vector<ExactVertex> vertices_at_least(const ParallelNetwork& network,
                                           const FlowProfile& route, const Rational& budget,
                                           const Rational& floor, std::size_t limit);

// The attack profile of a vertex: c_e on S, r^a - C(S) (capped at c_e) on the
// partial edge, and the remainder dumped per the canonical rule.
FlowProfile vertex_attack(const ParallelNetwork& network, const FlowProfile& route,
                          const Rational& budget, EdgeMask saturated, int partial,
                          AttackStructure* structure);

}  // namespace routegame::detail

#endif  // ROUTEGAME_SRC_ATTACK_KERNEL_HPP_
