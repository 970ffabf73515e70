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

// Data model for routing games on parallel source/destination networks.
//
// A parallel network is a list of edge capacities; edges are identified by
// their position. A flow profile assigns traffic to each edge and is used both
// for the router's legitimate traffic and for the attacker's flooding traffic.
// Legitimate traffic that does not fit next to the attack on an edge is
// blocked: B_e = max{f_e + a_e - c_e, 0}.

#ifndef ROUTEGAME_MODEL_HPP_
#define ROUTEGAME_MODEL_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "routegame/error.hpp"
#include "routegame/rational.hpp"

namespace routegame {

using EdgeSet = std::vector<int>;  // sorted, duplicate-free edge indices

class ParallelNetwork {
 public:
  // Throws Error(kDomain) if empty or any capacity is negative.
  explicit ParallelNetwork(std::vector<Rational> capacities);
  ParallelNetwork(std::initializer_list<Rational> capacities)
      : ParallelNetwork(std::vector<Rational>(capacities)) {}

  std::size_t size() const { return capacities_.size(); }
  const Rational& capacity(std::size_t edge) const { return capacities_[edge]; }
  std::span<const Rational> capacities() const { return capacities_; }
  const Rational& total_capacity() const { return total_; }

  friend bool operator==(const ParallelNetwork&, const ParallelNetwork&) = default;

 private:
  std::vector<Rational> capacities_;
  Rational total_;
};

class FlowProfile {
 public:
  FlowProfile() = default;
  // Throws Error(kDomain) if any entry is negative.
  explicit FlowProfile(std::vector<Rational> flows);
  FlowProfile(std::initializer_list<Rational> flows)
      : FlowProfile(std::vector<Rational>(flows)) {}
  static FlowProfile zeros(std::size_t edges);

  std::size_t size() const { return flows_.size(); }
  const Rational& operator[](std::size_t edge) const { return flows_[edge]; }
  std::span<const Rational> flows() const { return flows_; }
  Rational total() const;

  friend bool operator==(const FlowProfile&, const FlowProfile&) = default;

 private:
  std::vector<Rational> flows_;
};

// Network plus legitimate demand r and attack budget r^a.
struct GameInstance {
  ParallelNetwork network;
  Rational demand;
  Rational budget;

  // Throws Error(kDomain) unless 0 <= demand, budget <= C(E).
  void validate() const;
};

struct BlockReport {
  std::vector<Rational> per_edge;
  Rational total;
};

// C(E') for a set of edge indices. Throws Error(kInvalidSubset).
Rational subset_capacity(const ParallelNetwork& network, std::span<const int> subset);

// Pure evaluator: profiles need not be feasible. Throws Error(kShape).
BlockReport blocked(const ParallelNetwork& network, const FlowProfile& route,
                    const FlowProfile& attack);

// Sum equals `amount` exactly and 0 <= f_e <= c_e. Serves both the router's
// set F(c, r) and the attacker's set F^a(c, r^a). Throws Error(kShape).
bool is_feasible_route(const ParallelNetwork& network, const Rational& amount,
                       const FlowProfile& route);

// Throws Error(kDomain) naming the violated constraint if infeasible.
void require_feasible(const ParallelNetwork& network, const Rational& amount,
                      const FlowProfile& profile, const char* what);

// max{r + r^a - C(E), 0}: no pair of feasible profiles blocks less.
Rational block_lower_bound(const ParallelNetwork& network, const Rational& demand,
                           const Rational& budget);

}  // namespace routegame

#endif  // ROUTEGAME_MODEL_HPP_
