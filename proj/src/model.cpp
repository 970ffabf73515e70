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

#include "routegame/model.hpp"

#include <string>
#include <utility>

namespace routegame {

namespace {

void check_shape(const ParallelNetwork& network, const FlowProfile& profile, const char* what) {
  if (profile.size() != network.size()) {
    throw Error(ErrorKind::kShape, std::string(what) + " has " + std::to_string(profile.size()) +
                                       " entries but the network has " +
                                       std::to_string(network.size()) + " edges");
  }
}

}  // namespace

ParallelNetwork::ParallelNetwork(std::vector<Rational> capacities)
    : capacities_(std::move(capacities)) {
  if (capacities_.empty()) throw Error(ErrorKind::kDomain, "network has no edges");
  for (std::size_t e = 0; e < capacities_.size(); ++e) {
    if (capacities_[e].sign() < 0) {
      throw Error(ErrorKind::kDomain, "capacity of edge " + std::to_string(e) + " is negative");
    }
    total_ += capacities_[e];
  }
}

FlowProfile::FlowProfile(std::vector<Rational> flows) : flows_(std::move(flows)) {
  for (std::size_t e = 0; e < flows_.size(); ++e) {
    if (flows_[e].sign() < 0) {
      throw Error(ErrorKind::kDomain, "flow on edge " + std::to_string(e) + " is negative");
    }
  }
}

FlowProfile FlowProfile::zeros(std::size_t edges) {
  return FlowProfile(std::vector<Rational>(edges));
}

Rational FlowProfile::total() const {
  Rational sum;
  for (const auto& f : flows_) sum += f;
  return sum;
}

void GameInstance::validate() const {
  const Rational& total = network.total_capacity();
  if (demand.sign() < 0 || demand > total) {
    throw Error(ErrorKind::kDomain, "demand r = " + demand.str() + " must lie in [0, C(E) = " +
                                        total.str() + "]");
  }
  if (budget.sign() < 0 || budget > total) {
    throw Error(ErrorKind::kDomain, "attack budget r_a = " + budget.str() +
                                        " must lie in [0, C(E) = " + total.str() + "]");
  }
}

Rational subset_capacity(const ParallelNetwork& network, std::span<const int> subset) {
  Rational sum;
  for (int e : subset) {
    if (e < 0 || static_cast<std::size_t>(e) >= network.size()) {
      throw Error(ErrorKind::kInvalidSubset, "edge index " + std::to_string(e) +
                                                 " out of range for a network with " +
                                                 std::to_string(network.size()) + " edges");
    }
    sum += network.capacity(static_cast<std::size_t>(e));
  }
  return sum;
}

BlockReport blocked(const ParallelNetwork& network, const FlowProfile& route,
                    const FlowProfile& attack) {
  check_shape(network, route, "route");
  check_shape(network, attack, "attack");
  BlockReport report;
  report.per_edge.reserve(network.size());
  for (std::size_t e = 0; e < network.size(); ++e) {
    Rational excess = route[e] + attack[e] - network.capacity(e);
    if (excess.sign() < 0) excess = Rational();
    report.total += excess;
    report.per_edge.push_back(std::move(excess));
  }
  return report;
}

bool is_feasible_route(const ParallelNetwork& network, const Rational& amount,
                       const FlowProfile& route) {
  check_shape(network, route, "profile");
  Rational sum;
  for (std::size_t e = 0; e < network.size(); ++e) {
    if (route[e].sign() < 0 || route[e] > network.capacity(e)) return false;
    sum += route[e];
  }
  return sum == amount;
}

void require_feasible(const ParallelNetwork& network, const Rational& amount,
                      const FlowProfile& profile, const char* what) {
  check_shape(network, profile, what);
  for (std::size_t e = 0; e < network.size(); ++e) {
    if (profile[e] > network.capacity(e)) {
      throw Error(ErrorKind::kDomain, std::string(what) + " exceeds the capacity of edge " +
                                          std::to_string(e) + " (" + profile[e].str() + " > " +
                                          network.capacity(e).str() + ")");
    }
  }
  const Rational sum = profile.total();
  if (sum != amount) {
    throw Error(ErrorKind::kDomain, std::string(what) + " sums to " + sum.str() +
                                        " but must sum to " + amount.str());
  }
}

Rational block_lower_bound(const ParallelNetwork& network, const Rational& demand,
                           const Rational& budget) {
  return max(demand + budget - network.total_capacity(), Rational());
}

}  // namespace routegame
