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

#include "routegame/stackelberg.hpp"

#include <algorithm>
#include <string>

#include "minimax.hpp"
#include "two_link.hpp"
#include "parallel.hpp"
#include "routegame/equilibria.hpp"

namespace routegame {
namespace {

void require_two_links(const ParallelNetwork& network) {
  if (network.size() != 2) {
    throw Error(ErrorKind::kShape, "two-link solver called on a network with " +
                                       std::to_string(network.size()) + " edges");
  }
}

Rational positive(const Rational& x) { return x.sign() > 0 ? x : Rational(); }

StackelbergResult exact_result(FlowProfile route, Rational value, SeMethod method) {
  StackelbergResult out;
  out.route = std::move(route);
  out.value = value;
  out.certificate = {value, value, Rational()};
  out.method = method;
  return out;
}

}  // namespace

namespace detail {

Rational TwoLinkProblem::t_min() const { return positive(r_ - c2_); }
Rational TwoLinkProblem::t_max() const { return min(c1_, r_); }

void TwoLinkProblem::add_budget(const Rational& x, const Rational& offset) {
  attacks_.push_back({min(x, c1_), positive(x - c1_), offset});
  attacks_.push_back({positive(x - c2_), min(x, c2_), offset});
}

Rational TwoLinkProblem::piece(const TwoLinkAttack& a, const Rational& t) const {
  return positive(t + a.a1 - c1_) + positive(r_ - t + a.a2 - c2_) - a.offset;
}

Rational TwoLinkProblem::value(const Rational& t) const {
  Rational best = piece(attacks_.front(), t);
  for (const auto& a : attacks_) best = max(best, piece(a, t));
  return best;
}

TwoLinkProblem::Minimum TwoLinkProblem::minimize() const {
  const Rational lo = t_min(), hi = t_max();
  std::vector<Rational> pts{lo, hi};
  for (const auto& a : attacks_) {
    for (const Rational& t : {c1_ - a.a1, r_ + a.a2 - c2_}) {
      if (t >= lo && t <= hi) pts.push_back(t);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Every piece is linear between consecutive breakpoints; the minimum of
  // their maximum sits at an end or where two of them cross.
  const std::size_t base = pts.size();
  for (std::size_t i = 0; i + 1 < base; ++i) {
    const Rational p = pts[i], q = pts[i + 1];
    for (std::size_t j = 0; j < attacks_.size(); ++j) {
      for (std::size_t k = j + 1; k < attacks_.size(); ++k) {
        const Rational dp = piece(attacks_[j], p) - piece(attacks_[k], p);
        const Rational dq = piece(attacks_[j], q) - piece(attacks_[k], q);
        if (dp.sign() * dq.sign() < 0) pts.push_back(p + dp * (q - p) / (dp - dq));
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  Minimum out{value(pts.front()), pts.front(), pts.front()};
  for (const auto& t : pts) {
    const Rational v = value(t);
    if (v < out.value) {
      out = {v, t, t};
    } else if (v == out.value) {
      out.hi = t;
    }
  }
  return out;
}

}  // namespace detail

std::string_view to_string(SeMethod method) {
  switch (method) {
    case SeMethod::kZeroBlockPolicy: return "zero_block_policy";
    case SeMethod::kFullBlockPolicy: return "full_block_policy";
    case SeMethod::kTwoLinkClosedForm: return "two_link_closed_form";
    case SeMethod::kTwoLinkCorrected: return "two_link_corrected";
    case SeMethod::kNumerical: return "numerical";
  }
  return "unknown";
}

BestResponseResult two_link_best_response(const ParallelNetwork& network, const FlowProfile& route,
                                          const Rational& budget) {
  require_two_links(network);
  if (route.size() != 2) throw Error(ErrorKind::kShape, "route must have two entries");
  for (std::size_t e = 0; e < 2; ++e) {
    if (route[e] > network.capacity(e)) {
      throw Error(ErrorKind::kDomain, "route exceeds the capacity of edge " + std::to_string(e));
    }
  }
  if (budget.sign() < 0 || budget > network.total_capacity()) {
    throw Error(ErrorKind::kDomain, "no feasible attack: budget " + budget.str() +
                                        " outside [0, " + network.total_capacity().str() + "]");
  }
  const Rational& c0 = network.capacity(0);
  const Rational& c1 = network.capacity(1);
  const FlowProfile first{min(budget, c0), positive(budget - c0)};
  const FlowProfile second{positive(budget - c1), min(budget, c1)};
  const Rational v1 = blocked(network, route, first).total;
  const Rational v2 = blocked(network, route, second).total;

  BestResponseResult out;
  out.value = max(v1, v2);
  out.attack = v1 >= v2 ? first : second;
  const BlockReport report = blocked(network, route, out.attack);
  for (int e = 0; e < 2; ++e) {
    const Rational& a = out.attack[e];
    if (a.is_zero()) continue;
    if (a == network.capacity(e)) {
      out.structure.saturated.push_back(e);
    } else if (report.per_edge[e].sign() > 0) {
      out.structure.partial = PartialAttack{e, a};
    } else {
      out.structure.dump.emplace_back(e, a);
    }
  }
  return out;
}

StackelbergResult two_link_se(const ParallelNetwork& network, const Rational& demand,
                              const Rational& budget) {
  require_two_links(network);
  GameInstance{network, demand, budget}.validate();
  const int i1 = network.capacity(0) <= network.capacity(1) ? 0 : 1;
  const int i2 = 1 - i1;
  detail::TwoLinkProblem p(network.capacity(i1), network.capacity(i2), demand);
  p.add_budget(budget, Rational());
  const Rational total = network.total_capacity();
  const Rational g = compute_g(network, demand).value;
  const Rational h = compute_h(network, demand).value;
  const Rational lo = p.t_min();
  const Rational hi = p.t_max();

  auto route_of = [&](const Rational& t) {
    std::vector<Rational> f(2);
    f[i1] = t;
    f[i2] = demand - t;
    return FlowProfile(std::move(f));
  };

  Rational t;
  SeMethod method = SeMethod::kTwoLinkClosedForm;
  if (budget <= g) {
    t = build_flo(network, demand)[i1];
    method = SeMethod::kZeroBlockPolicy;
  } else if (budget >= total - h) {
    t = build_fhi(network, demand)[i1];
    method = SeMethod::kFullBlockPolicy;
  } else if (budget < p.c1()) {
    t = build_flo(network, demand)[i1];
  } else if (budget <= p.c2()) {
    t = std::clamp((demand + budget - p.c2()) / Rational(2), lo, hi);
  } else {
    t = build_fhi(network, demand)[i1];
  }

  const auto best = p.minimize();
  if (p.value(t) != best.value) {
    t = std::clamp(t, best.lo, best.hi);
    method = SeMethod::kTwoLinkCorrected;
  }
  return exact_result(route_of(t), best.value, method);
}

StackelbergResult solve_stackelberg(const GameInstance& instance,
                                    const StackelbergOptions& options) {
  instance.validate();
  if (!(options.tolerance > 0)) throw Error(ErrorKind::kDomain, "tolerance must be positive");
  const auto& net = instance.network;
  const RegimeReport regime = classify_regime(instance);
  if (regime.zero_block) {
    return exact_result(build_flo(net, instance.demand), Rational(), SeMethod::kZeroBlockPolicy);
  }
  if (regime.full_block) {
    return exact_result(build_fhi(net, instance.demand), regime.value, SeMethod::kFullBlockPolicy);
  }
  const auto mm = detail::minimize_max(net, instance.demand, {{instance.budget, Rational()}}, options);
  StackelbergResult out;
  out.route = mm.route;
  out.value = mm.upper;
  out.certificate = {mm.upper, mm.lower, mm.upper - mm.lower};
  out.converged = out.certificate.gap <= Rational::from_double(options.tolerance);
  out.method = SeMethod::kNumerical;
  out.iterations = mm.iterations;
  out.cut_rounds = mm.cut_rounds;
  return out;
}

StackelbergCurve stackelberg_curve(const ParallelNetwork& network, const Rational& demand,
                                   const Rational& budget_max, int samples,
                                   const StackelbergOptions& options) {
  if (samples < 2) throw Error(ErrorKind::kDomain, "samples must be at least 2");
  if (budget_max.sign() < 0 || budget_max > network.total_capacity()) {
    throw Error(ErrorKind::kDomain, "budget_max must lie in [0, C(E)]");
  }
  const Rational total = network.total_capacity();
  std::vector<Rational> xs;
  for (const auto& s : subset_sums(network, options.max_edges)) {
    if (s <= budget_max) xs.push_back(s);
  }
  for (int i = 0; i < samples; ++i) {
    xs.push_back(budget_max * Rational(i) / Rational(samples - 1));
  }
  for (const Rational& t : {compute_g(network, demand).value,
                            total - compute_h(network, demand).value}) {
    if (t.sign() >= 0 && t <= budget_max) xs.push_back(t);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  StackelbergCurve out;
  out.points.resize(xs.size());
  detail::parallel_for(xs.size(), options.threads, [&](std::size_t i) {
    out.points[i] = network.size() == 2 ? two_link_se(network, demand, xs[i])
                                        : solve_stackelberg({network, demand, xs[i]}, options);
  });
  std::vector<PiecewiseLinearCurve::Point> pts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pts.push_back({xs[i], out.points[i].value});
    out.converged = out.converged && out.points[i].converged;
  }
  out.curve = PiecewiseLinearCurve(std::move(pts));
  return out;
}

}  // namespace routegame
