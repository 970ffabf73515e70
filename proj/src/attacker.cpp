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

#include "routegame/attacker.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "attack_kernel.hpp"

namespace routegame {

namespace detail {

namespace {

// Largest magnitude allowed after scaling; leaves headroom for sums of up to
// 63 terms in the kernel.
constexpr long kScaledLimit = 1L << 54;

mpz_class common_denominator(const ParallelNetwork& network, const FlowProfile& route,
                             const Rational& budget) {
  mpz_class l = budget.denominator();
  for (const auto& c : network.capacities()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  for (const auto& f : route.flows()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.denominator().get_mpz_t());
  return l;
}

// Runs fn(kernel, scale) with an int64 kernel when every scaled quantity fits,
// otherwise with a Rational kernel and scale 1.
template <class Fn>
auto with_exact_kernel(const ParallelNetwork& network, const FlowProfile& route,
                       const Rational& budget, Fn&& fn) {
  const mpz_class l = common_denominator(network, route, budget);
  const mpq_class scale(l);
  const mpq_class limit(kScaledLimit);
  const bool fits = network.total_capacity().raw() * scale < limit && budget.raw() * scale < limit;
  if (fits) {
    auto to_int = [&](const Rational& x) {
      const mpq_class s = x.raw() * scale;
      return static_cast<std::int64_t>(mpz_class(s.get_num()).get_si());
    };
    std::vector<std::int64_t> cap, flow;
    for (const auto& c : network.capacities()) cap.push_back(to_int(c));
    for (const auto& f : route.flows()) flow.push_back(to_int(f));
    AttackKernel<std::int64_t> kernel(std::move(cap), std::move(flow), to_int(budget));
    return fn(kernel, Rational(mpq_class(l)));
  }
  std::vector<Rational> cap(network.capacities().begin(), network.capacities().end());
  std::vector<Rational> flow(route.flows().begin(), route.flows().end());
  AttackKernel<Rational> kernel(std::move(cap), std::move(flow), budget);
  return fn(kernel, Rational(1));
}

template <class T>
Rational to_rational(const T& v, const Rational& scale) {
  if constexpr (std::is_same_v<T, Rational>) {
    return v / scale;
  } else {
    return Rational(static_cast<long long>(v)) / scale;
  }
}

}  // namespace

ExactVertex best_vertex_exact(const ParallelNetwork& network, const FlowProfile& route,
                              const Rational& budget) {
  return with_exact_kernel(network, route, budget, [](const auto& kernel, const Rational& scale) {
    const auto v = kernel.best();
    return ExactVertex{to_rational(v.value, scale), v.saturated, v.partial};
  });
}

std::vector<ExactVertex> vertices_at_least(const ParallelNetwork& network,
                                           const FlowProfile& route, const Rational& budget,
                                           const Rational& floor, std::size_t limit) {
  return with_exact_kernel(network, route, budget, [&](const auto& kernel, const Rational& scale) {
    using T = std::decay_t<decltype(kernel.budget())>;
    T scaled_floor;
    if constexpr (std::is_same_v<T, Rational>) {
      scaled_floor = floor;
    } else {
      // Round down so no qualifying vertex is pruned.
      const mpq_class s = floor.raw() * scale.raw();
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
      scaled_floor = static_cast<T>(q.get_si());
    }
    std::vector<Vertex<T>> found;
    T bound = scaled_floor;
    kernel.enumerate(bound, [&](EdgeMask mask, const T& used, const T& value) {
      const T residual = kernel.budget() - used;
      if (!(value < scaled_floor)) found.push_back(Vertex<T>{value, mask, -1});
      for (std::size_t e = 0; e < kernel.size(); ++e) {
        if (mask >> e & 1U) continue;
        const T g = kernel.gain(static_cast<int>(e), residual);
        if (g > T{} && !(value + g < scaled_floor)) {
          found.push_back(Vertex<T>{value + g, mask, static_cast<int>(e)});
        }
      }
    });
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return better(a, b); });
    std::vector<ExactVertex> out;
    for (const auto& v : found) {
      Rational value = to_rational(v.value, scale);
      if (value < floor) continue;
      out.push_back(ExactVertex{std::move(value), v.saturated, v.partial});
      if (out.size() == limit) break;
    }
    return out;
  });
}

FlowProfile vertex_attack(const ParallelNetwork& network, const FlowProfile& route,
                          const Rational& budget, EdgeMask saturated, int partial,
                          AttackStructure* structure) {
  const std::size_t n = network.size();
  std::vector<Rational> attack(n);
  AttackStructure local;
  Rational remaining = budget;
  for (std::size_t e = 0; e < n; ++e) {
    if (saturated >> e & 1U) {
      attack[e] = network.capacity(e);
      remaining -= attack[e];
      local.saturated.push_back(static_cast<int>(e));
    }
  }
  if (remaining.sign() < 0) {
    throw Error(ErrorKind::kInternal, "saturated set exceeds the attack budget");
  }
  if (partial >= 0) {
    const auto p = static_cast<std::size_t>(partial);
    const Rational amount = min(remaining, network.capacity(p));
    attack[p] = amount;
    remaining -= amount;
    if (amount == network.capacity(p)) {
      // Fully attacked after all: report it with the saturated edges.
      local.saturated.insert(std::upper_bound(local.saturated.begin(), local.saturated.end(), partial),
                             partial);
    } else {
      local.partial = PartialAttack{partial, amount};
    }
  }
  auto dump = [&](std::size_t e, const Rational& room) {
    if (remaining.is_zero() || room.sign() <= 0) return;
    const Rational amount = min(room, remaining);
    attack[e] += amount;
    remaining -= amount;
    local.dump.emplace_back(static_cast<int>(e), amount);
  };
  auto outside = [&](std::size_t e) {
    return !(saturated >> e & 1U) && static_cast<int>(e) != partial;
  };
  // Below the blocking threshold first, so the dump blocks nothing.
  for (std::size_t e = 0; e < n; ++e) {
    if (outside(e)) dump(e, network.capacity(e) - route[e] - attack[e]);
  }
  if (partial >= 0) {
    const auto p = static_cast<std::size_t>(partial);
    dump(p, network.capacity(p) - attack[p]);
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (outside(e)) dump(e, network.capacity(e) - attack[e]);
  }
  if (!remaining.is_zero()) {
    throw Error(ErrorKind::kInternal, "attack budget could not be placed");
  }
  // Merge repeated dump entries per edge.
  std::sort(local.dump.begin(), local.dump.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rational>> merged;
  for (auto& [edge, amount] : local.dump) {
    if (!merged.empty() && merged.back().first == edge) {
      merged.back().second += amount;
    } else {
      merged.emplace_back(edge, amount);
    }
  }
  local.dump = std::move(merged);
  if (structure != nullptr) *structure = std::move(local);
  return FlowProfile(std::move(attack));
}

}  // namespace detail

namespace {

void require_attackable(const ParallelNetwork& network, const FlowProfile& route,
                        const Rational& budget) {
  if (route.size() != network.size()) {
    throw Error(ErrorKind::kShape, "route has " + std::to_string(route.size()) +
                                       " entries but the network has " +
                                       std::to_string(network.size()) + " edges");
  }
  for (std::size_t e = 0; e < network.size(); ++e) {
    if (route[e] > network.capacity(e)) {
      throw Error(ErrorKind::kDomain, "route exceeds the capacity of edge " + std::to_string(e));
    }
  }
  if (budget.sign() < 0) throw Error(ErrorKind::kDomain, "attack budget is negative");
  if (budget > network.total_capacity()) {
    throw Error(ErrorKind::kDomain, "no feasible attack: budget " + budget.str() +
                                        " exceeds C(E) = " + network.total_capacity().str());
  }
}

}  // namespace

BestResponseResult best_response(const ParallelNetwork& network, const FlowProfile& route,
                                 const Rational& budget, const BestResponseOptions& options) {
  require_attackable(network, route, budget);
  const std::size_t cap = std::min(options.max_edges, detail::kMaxMaskEdges);
  if (network.size() > cap) {
    throw Error(ErrorKind::kSize, "exact best response is capped at " + std::to_string(cap) +
                                      " edges (network has " + std::to_string(network.size()) +
                                      "); raise the cap with --max-edges or use the dp method");
  }
  const detail::ExactVertex v = detail::best_vertex_exact(network, route, budget);
  BestResponseResult result;
  result.attack = detail::vertex_attack(network, route, budget, v.saturated, v.partial,
                                        &result.structure);
  result.value = blocked(network, route, result.attack).total;
  if (result.value != v.value) {
    throw Error(ErrorKind::kInternal, "witness attack blocks " + result.value.str() +
                                          " but the enumeration found " + v.value.str());
  }
  return result;
}

Rational best_response_dp(const ParallelNetwork& network, const FlowProfile& route,
                          const Rational& budget, std::int64_t max_table) {
  require_attackable(network, route, budget);
  mpz_class l = budget.denominator();
  for (const auto& c : network.capacities()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  }
  const mpq_class scaled_budget = budget.raw() * mpq_class(l);
  if (scaled_budget > mpq_class(static_cast<long>(max_table))) {
    throw Error(ErrorKind::kSize, "dp table would need " + mpq_class(scaled_budget + 1).get_str() +
                                      " cells per row (cap " + std::to_string(max_table) + ")");
  }
  const auto units = static_cast<std::size_t>(mpz_class(scaled_budget.get_num()).get_si());
  const std::size_t n = network.size();
  std::vector<std::size_t> weight(n);
  for (std::size_t e = 0; e < n; ++e) {
    const mpq_class w = network.capacity(e).raw() * mpq_class(l);
    // Items heavier than the budget can never be saturated.
    weight[e] = w > scaled_budget ? units + 1 : static_cast<std::size_t>(mpz_class(w.get_num()).get_si());
  }
  const Rational unit = Rational(mpq_class(1, l));

  Rational best;
  // partial == n means no partial edge.
  for (std::size_t partial = 0; partial <= n; ++partial) {
    // table[b]: max sum of f over saturated sets with scaled capacity exactly b.
    std::vector<std::optional<Rational>> table(units + 1);
    table[0] = Rational();
    for (std::size_t e = 0; e < n; ++e) {
      if (e == partial || weight[e] > units) continue;
      for (std::size_t b = units; b + 1 > weight[e]; --b) {
        const auto& from = table[b - weight[e]];
        if (!from) continue;
        Rational candidate = *from + route[e];
        if (!table[b] || *table[b] < candidate) table[b] = std::move(candidate);
        if (b == 0) break;
      }
    }
    for (std::size_t b = 0; b <= units; ++b) {
      if (!table[b]) continue;
      Rational value = *table[b];
      if (partial < n) {
        const Rational residual = budget - unit * Rational(b);
        Rational g = residual - (network.capacity(partial) - route[partial]);
        value += min(max(g, Rational()), route[partial]);
      }
      if (best < value) best = value;
    }
  }
  return best;
}

Rational best_response_oracle(const ParallelNetwork& network, const FlowProfile& route,
                              const Rational& budget, std::int64_t grid_denominator,
                              std::int64_t max_points) {
  require_attackable(network, route, budget);
  if (grid_denominator < 1) throw Error(ErrorKind::kDomain, "grid denominator must be positive");
  const std::size_t n = network.size();

  mpz_class m = budget.denominator();
  mpz_lcm_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(grid_denominator));
  for (const auto& c : network.capacities()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.denominator().get_mpz_t());
  for (const auto& f : route.flows()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), f.denominator().get_mpz_t());
  if (network.total_capacity().raw() * mpq_class(m) > mpq_class(1L << 60)) {
    throw Error(ErrorKind::kSize, "oracle lattice does not fit in 64-bit arithmetic");
  }
  auto scaled = [&](const Rational& x) {
    return static_cast<std::int64_t>(mpz_class(mpq_class(x.raw() * mpq_class(m)).get_num()).get_si());
  };
  std::vector<std::int64_t> cap(n), flow(n);
  for (std::size_t e = 0; e < n; ++e) {
    cap[e] = scaled(network.capacity(e));
    flow[e] = scaled(route[e]);
  }
  const std::int64_t total_budget = scaled(budget);
  const std::int64_t step = static_cast<std::int64_t>(mpz_class(m / grid_denominator).get_si());

  double points = 1.0;
  for (std::size_t e = 0; e + 1 < n; ++e) points *= static_cast<double>(cap[e] / step + 1);
  if (points > static_cast<double>(max_points)) {
    throw Error(ErrorKind::kSize, "oracle lattice has about " + std::to_string(static_cast<long long>(points)) +
                                      " points (cap " + std::to_string(max_points) + ")");
  }
  std::vector<std::int64_t> suffix_cap(n + 1, 0);
  for (std::size_t e = n; e-- > 0;) suffix_cap[e] = suffix_cap[e + 1] + cap[e];

  std::int64_t best = -1;
  auto excess = [&](std::size_t e, std::int64_t a) { return std::max<std::int64_t>(flow[e] + a - cap[e], 0); };
  auto search = [&](auto&& self, std::size_t e, std::int64_t remaining, std::int64_t value) -> void {
    if (e + 1 == n) {
      if (remaining >= 0 && remaining <= cap[e]) best = std::max(best, value + excess(e, remaining));
      return;
    }
    for (std::int64_t a = 0; a <= cap[e] && a <= remaining; a += step) {
      if (remaining - a > suffix_cap[e + 1]) continue;
      self(self, e + 1, remaining - a, value + excess(e, a));
    }
  };
  search(search, 0, total_budget, 0);
  if (best < 0) {
    throw Error(ErrorKind::kDomain, "no lattice attack sums to the budget");
  }
  return Rational(static_cast<long long>(best)) / Rational(mpq_class(m));
}

std::vector<Rational> subset_sums(const ParallelNetwork& network, std::size_t max_edges) {
  if (network.size() > max_edges) {
    throw Error(ErrorKind::kSize, "subset-sum enumeration is capped at " + std::to_string(max_edges) +
                                      " edges (network has " + std::to_string(network.size()) + ")");
  }
  std::set<Rational> sums{Rational()};
  for (const auto& c : network.capacities()) {
    std::vector<Rational> next;
    next.reserve(sums.size());
    for (const auto& s : sums) next.push_back(s + c);
    sums.insert(next.begin(), next.end());
  }
  return {sums.begin(), sums.end()};
}

PiecewiseLinearCurve b_star_curve(const ParallelNetwork& network, const FlowProfile& route,
                                  const Rational& budget_max, const CurveOptions& options) {
  require_attackable(network, route, budget_max);
  const std::size_t n = network.size();
  if (n > options.max_edges) {
    throw Error(ErrorKind::kSize, "b* curve is capped at " + std::to_string(options.max_edges) +
                                      " edges (network has " + std::to_string(n) + ")");
  }
  // Every vertex value is flat or slope one between the points C(S) and
  // C(S) + c_e - f_e, so B* is linear between consecutive candidates except
  // for at most one flat-to-rising corner.
  std::set<Rational> candidates{Rational(), budget_max};
  const std::size_t subsets = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Rational used;
    for (std::size_t e = 0; e < n; ++e) {
      if (mask >> e & 1U) used += network.capacity(e);
    }
    if (used > budget_max) continue;
    candidates.insert(used);
    for (std::size_t e = 0; e < n; ++e) {
      if (mask >> e & 1U) continue;
      Rational x = used + network.capacity(e) - route[e];
      if (x <= budget_max) candidates.insert(x);
    }
  }
  const BestResponseOptions exact{.max_edges = n};
  auto value_at = [&](const Rational& x) { return best_response(network, route, x, exact).value; };

  std::vector<PiecewiseLinearCurve::Point> points;
  for (const auto& x : candidates) {
    Rational y = value_at(x);
    if (!points.empty()) {
      const auto& left = points.back();
      const Rational rise = y - left.y;
      const Rational run = x - left.x;
      if (rise.sign() > 0 && rise < run) {
        const Rational corner = x - rise;
        const Rational at_corner = value_at(corner);
        if (at_corner != left.y) {
          throw Error(ErrorKind::kInternal, "b* curve is not flat-then-rising between " +
                                                left.x.str() + " and " + x.str());
        }
        points.push_back({corner, at_corner});
      }
    }
    points.push_back({x, std::move(y)});
  }
  PiecewiseLinearCurve curve = PiecewiseLinearCurve(std::move(points)).simplified();
  for (const auto& s : curve.slopes()) {
    if (!(s.is_zero() || s == Rational(1))) {
      throw Error(ErrorKind::kInternal, "b* curve has slope " + s.str());
    }
  }
  return curve;
}

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].x < points_[i].x)) {
      throw Error(ErrorKind::kDomain, "curve breakpoints must have strictly increasing x");
    }
  }
}

Rational PiecewiseLinearCurve::value_at(const Rational& x) const {
  if (points_.empty() || x < points_.front().x || x > points_.back().x) {
    throw Error(ErrorKind::kDomain, "x = " + x.str() + " lies outside the curve's domain");
  }
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const Point& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  const Point& right = *it;
  const Point& left = *(it - 1);
  return left.y + (right.y - left.y) * (x - left.x) / (right.x - left.x);
}

std::vector<Rational> PiecewiseLinearCurve::slopes() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    out.push_back((points_[i].y - points_[i - 1].y) / (points_[i].x - points_[i - 1].x));
  }
  return out;
}

PiecewiseLinearCurve PiecewiseLinearCurve::simplified() const {
  if (points_.size() <= 2) return *this;
  std::vector<Point> kept{points_.front()};
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
    const Point& a = kept.back();
    const Point& b = points_[i];
    const Point& c = points_[i + 1];
    if ((b.y - a.y) * (c.x - b.x) != (c.y - b.y) * (b.x - a.x)) kept.push_back(b);
  }
  kept.push_back(points_.back());
  return PiecewiseLinearCurve(std::move(kept));
}

}  // namespace routegame
