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

#include "routegame/valueinfo.hpp"

#include <algorithm>

#include "minimax.hpp"
#include "parallel.hpp"
#include "routegame/attacker.hpp"
#include "routegame/equilibria.hpp"
#include "routegame/error.hpp"
#include "two_link.hpp"

namespace routegame {

namespace {

Rational positive(const Rational& x) { return x.sign() > 0 ? x : Rational(); }

void require_two_links(const ParallelNetwork& network) {
  if (network.size() != 2) throw Error(ErrorKind::kShape, "expected a two-link network");
}

StackelbergResult se_at(const ParallelNetwork& network, const Rational& demand,
                        const Rational& budget, const StackelbergOptions& options) {
  if (network.size() == 2) return two_link_se(network, demand, budget);
  StackelbergOptions inner = options;
  return solve_stackelberg(GameInstance{network, demand, budget}, inner);
}

std::vector<StackelbergResult> se_all(const ParallelNetwork& network, const Rational& demand,
                                      const std::vector<Rational>& budgets,
                                      const StackelbergOptions& options) {
  std::vector<StackelbergResult> out(budgets.size());
  detail::parallel_for(budgets.size(), options.threads, [&](std::size_t k) {
    out[k] = se_at(network, demand, budgets[k], options);
  });
  return out;
}

}  // namespace

void BudgetInterval::validate(const ParallelNetwork& network) const {
  if (lo.sign() < 0 || hi < lo || hi > network.total_capacity()) {
    throw Error(ErrorKind::kDomain, "budget interval must satisfy 0 <= lo <= hi <= C(E)");
  }
}

std::vector<Rational> candidate_budgets(const ParallelNetwork& network, std::size_t max_edges) {
  return subset_sums(network, max_edges);
}

std::vector<Rational> risk_candidates(const ParallelNetwork& network, const BudgetInterval& interval,
                                      std::size_t max_edges) {
  interval.validate(network);
  std::vector<Rational> out{interval.lo, interval.hi};
  for (auto& a : candidate_budgets(network, max_edges)) {
    if (a >= interval.lo && a <= interval.hi) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RiskResult risk(const ParallelNetwork& network, const Rational& demand, const FlowProfile& route,
                const BudgetInterval& interval, const StackelbergOptions& options) {
  require_feasible(network, demand, route, "route");
  const auto xs = risk_candidates(network, interval, options.max_edges);
  const auto se = se_all(network, demand, xs, options);
  BestResponseOptions bro{options.max_edges};

  RiskResult out;
  out.per_candidate.resize(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    RiskPoint& p = out.per_candidate[k];
    p.ra = xs[k];
    p.b_star = best_response(network, route, xs[k], bro).value;
    p.b_se = se[k].value;
    p.b_se_lower = se[k].certificate.lower;
    p.diff = p.b_star - p.b_se;
    out.converged = out.converged && se[k].converged;
    if (k == 0 || p.diff > out.risk) {
      out.risk = p.diff;
      out.argmax_budget = p.ra;
    }
    const Rational up = p.b_star - p.b_se_lower;
    if (k == 0 || up > out.risk_upper) out.risk_upper = up;
  }
  return out;
}

Rational two_link_gap(const ParallelNetwork& network, const Rational& demand,
                      const FlowProfile& route, const Rational& budget) {
  require_two_links(network);
  require_feasible(network, demand, route, "route");
  const int i1 = network.capacity(0) <= network.capacity(1) ? 0 : 1;
  const Rational& c1 = network.capacity(i1);
  const Rational& c2 = network.capacity(1 - i1);
  if (budget < c1 || budget > c2) {
    throw Error(ErrorKind::kDomain, "budget must lie in [c1, c2]");
  }
  return abs(route[i1] - (demand + budget - c2) / Rational(2));
}

std::string_view to_string(VoiMethod method) {
  switch (method) {
    case VoiMethod::kClosedForm: return "closed_form";
    case VoiMethod::kCorrected: return "corrected";
    case VoiMethod::kZeroBlock: return "zero_block";
    case VoiMethod::kNumerical: return "numerical";
  }
  return "unknown";
}

VoiResult two_link_voi(const ParallelNetwork& network, const Rational& demand,
                       const BudgetInterval& interval) {
  require_two_links(network);
  GameInstance{network, demand, Rational()}.validate();
  interval.validate(network);
  const int i1 = network.capacity(0) <= network.capacity(1) ? 0 : 1;
  const Rational& c1 = network.capacity(i1);
  const Rational& c2 = network.capacity(1 - i1);

  detail::TwoLinkProblem p(c1, c2, demand);
  const auto xs = risk_candidates(network, interval);
  for (const auto& x : xs) p.add_budget(x, two_link_se(network, demand, x).value);

  auto route_of = [&](const Rational& t) {
    std::vector<Rational> f(2);
    f[i1] = t;
    f[1 - i1] = demand - t;
    return FlowProfile(std::move(f));
  };

  VoiResult out;
  Rational t;
  if (interval.hi < c1) {
    t = build_flo(network, demand)[i1];
  } else if (interval.lo > c2) {
    t = build_fhi(network, demand)[i1];
  } else {
    const Rational lo = max(c1, interval.lo), hi = min(c2, interval.hi);
    out.formula_value = (hi - lo) / Rational(4);
    t = std::clamp((Rational(2) * demand + lo + hi - Rational(2) * c2) / Rational(4), p.t_min(),
                   p.t_max());
  }

  const auto best = p.minimize();
  const Rational at_formula = p.value(t);
  out.method = VoiMethod::kClosedForm;
  if (at_formula != best.value || out.formula_value != best.value) {
    out.method = VoiMethod::kCorrected;
    t = std::clamp(t, best.lo, best.hi);
  }
  out.route = route_of(t);
  out.value = best.value;
  out.lower = best.value;
  out.upper = best.value;
  return out;
}

VoiResult value_of_information(const ParallelNetwork& network, const Rational& demand,
                               const BudgetInterval& interval, const VoiOptions& options) {
  GameInstance{network, demand, Rational()}.validate();
  interval.validate(network);
  if (options.two_link_closed_form && network.size() == 2) {
    return two_link_voi(network, demand, interval);
  }

  VoiResult out;
  if (interval.hi <= compute_g(network, demand).value) {
    out.route = build_flo(network, demand);
    out.method = VoiMethod::kZeroBlock;
    return out;
  }

  const auto& opt = options.solver;
  const auto xs = risk_candidates(network, interval, opt.max_edges);
  const auto se = se_all(network, demand, xs, opt);
  std::vector<detail::MinimaxTerm> terms;
  std::vector<FlowProfile> starts;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    terms.push_back({xs[k], se[k].value});
    starts.push_back(se[k].route);
  }
  const auto mm = detail::minimize_max(network, demand, terms, opt, starts);

  // Offsets are upper bounds on B^SE, so mm.lower still bounds V from below.
  BestResponseOptions bro{opt.max_edges};
  Rational upper;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Rational b = best_response(network, mm.route, xs[k], bro).value;
    const Rational d = b - se[k].certificate.lower;
    if (k == 0 || d > upper) upper = d;
  }
  out.route = mm.route;
  out.value = mm.upper;
  out.lower = positive(mm.lower);
  out.upper = upper;
  out.gap = out.upper - out.lower;
  out.converged = out.gap.to_double() <= opt.tolerance;
  out.method = VoiMethod::kNumerical;
  return out;
}

}  // namespace routegame
