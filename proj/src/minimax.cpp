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

#include "minimax.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <utility>

#include "attack_kernel.hpp"
#include "exact_lp.hpp"
#include "parallel.hpp"
#include "routegame/equilibria.hpp"

namespace routegame::detail {
namespace {

constexpr int kRandomStarts = 3;

struct DoubleProblem {
  std::vector<double> capacity;
  std::vector<double> budget;
  std::vector<double> offset;
  double demand = 0;
};

// Phi and one subgradient in double.
double evaluate_double(const DoubleProblem& p, const std::vector<double>& f,
                       std::vector<double>* grad) {
  double best = -std::numeric_limits<double>::infinity();
  Vertex<double> arg;
  for (std::size_t k = 0; k < p.budget.size(); ++k) {
    AttackKernel<double> kernel(p.capacity, f, p.budget[k], 1e-9);
    const Vertex<double> v = kernel.best();
    const double value = v.value - p.offset[k];
    if (value > best) {
      best = value;
      arg = v;
    }
  }
  if (grad) {
    grad->assign(f.size(), 0.0);
    for (std::size_t e = 0; e < f.size(); ++e) {
      if ((arg.saturated >> e & 1U) && f[e] > 1e-12) (*grad)[e] = 1.0;
    }
    if (arg.partial >= 0) (*grad)[arg.partial] = 1.0;
  }
  return best;
}

std::vector<double> to_double(const FlowProfile& f) {
  std::vector<double> out;
  for (const auto& x : f.flows()) out.push_back(x.to_double());
  return out;
}

struct Descent {
  std::vector<double> best_point;
  double best_value = 0;
  int iterations = 0;
};

Descent descend(const DoubleProblem& p, std::vector<double> f, int max_iterations) {
  Descent d;
  d.best_point = f;
  std::vector<double> grad;
  d.best_value = evaluate_double(p, f, &grad);
  const double s0 = p.demand;
  for (int k = 1; k <= max_iterations; ++k) {
    double norm = 0;
    for (double g : grad) norm += g * g;
    if (norm == 0) break;
    const double step = s0 / std::sqrt(static_cast<double>(k)) / std::max(1.0, std::sqrt(norm));
    for (std::size_t e = 0; e < f.size(); ++e) f[e] -= step * grad[e];
    f = project_bounded_simplex(f, p.capacity, p.demand);
    const double value = evaluate_double(p, f, &grad);
    d.iterations = k;
    if (value < d.best_value) {
      d.best_value = value;
      d.best_point = f;
    }
  }
  return d;
}

class ExactModel {
 public:
  ExactModel(const ParallelNetwork& network, const Rational& demand,
             const std::vector<MinimaxTerm>& terms, const StackelbergOptions& options)
      : network_(network), demand_(demand), terms_(terms) {
    br_options_.max_edges = options.max_edges;
    for (const auto& t : terms_) {
      add_cut({}, block_lower_bound(network_, demand_, t.budget) - t.offset);
    }
  }

  // Exact Phi at f; records the witness minorants.
  std::pair<Rational, std::size_t> evaluate(const FlowProfile& f) {
    std::optional<Rational> best;
    std::size_t arg = 0;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto br = best_response(network_, f, terms_[k].budget, br_options_);
      const Rational value = br.value - terms_[k].offset;
      if (!best || value > *best) {
        best = value;
        arg = k;
      }
      std::vector<int> strict, loose;
      Rational beta_strict = -terms_[k].offset, beta_loose = -terms_[k].offset;
      for (std::size_t e = 0; e < network_.size(); ++e) {
        const Rational excess = f[e] + br.attack[e] - network_.capacity(e);
        const Rational shift = br.attack[e] - network_.capacity(e);
        if (excess.sign() > 0) {
          strict.push_back(static_cast<int>(e));
          beta_strict += shift;
        }
        if (excess.sign() >= 0) {
          loose.push_back(static_cast<int>(e));
          beta_loose += shift;
        }
      }
      add_cut(std::move(strict), std::move(beta_strict));
      add_cut(std::move(loose), std::move(beta_loose));
    }
    return {*best, arg};
  }

  const std::vector<AffineCut>& cuts() const { return cuts_; }

 private:
  void add_cut(std::vector<int> support, Rational beta) {
    auto key = std::make_pair(support, beta);
    if (!seen_.insert(std::move(key)).second) return;
    cuts_.push_back(AffineCut{std::move(support), std::move(beta)});
  }

  const ParallelNetwork& network_;
  const Rational& demand_;
  const std::vector<MinimaxTerm>& terms_;
  BestResponseOptions br_options_;
  std::vector<AffineCut> cuts_;
  std::set<std::pair<std::vector<int>, Rational>> seen_;
};

}  // namespace

std::vector<double> project_bounded_simplex(const std::vector<double>& y,
                                            const std::vector<double>& capacity, double demand) {
  const std::size_t n = y.size();
  auto filled = [&](double tau) {
    double s = 0;
    for (std::size_t e = 0; e < n; ++e) s += std::clamp(y[e] - tau, 0.0, capacity[e]);
    return s;
  };
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t e = 0; e < n; ++e) {
    lo = std::min(lo, y[e] - capacity[e]);
    hi = std::max(hi, y[e]);
  }
  // filled(lo) = C(E) >= demand >= 0 = filled(hi).
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (filled(mid) > demand ? lo : hi) = mid;
  }
  std::vector<double> x(n);
  const double tau = 0.5 * (lo + hi);
  for (std::size_t e = 0; e < n; ++e) x[e] = std::clamp(y[e] - tau, 0.0, capacity[e]);
  return x;
}

FlowProfile snap_route(const ParallelNetwork& network, const Rational& demand,
                       const std::vector<double>& x, std::int64_t max_denominator) {
  const std::size_t n = network.size();
  std::vector<Rational> f(n);
  Rational sum;
  for (std::size_t e = 0; e < n; ++e) {
    Rational q = std::isfinite(x[e]) ? best_approximation(Rational::from_double(x[e]), max_denominator)
                                     : Rational();
    f[e] = max(Rational(), min(q, network.capacity(e)));
    sum += f[e];
  }
  Rational diff = demand - sum;
  for (std::size_t e = 0; e < n && !diff.is_zero(); ++e) {
    if (diff.sign() > 0) {
      const Rational add = min(diff, network.capacity(e) - f[e]);
      f[e] += add;
      diff -= add;
    } else {
      const Rational cut = min(-diff, f[e]);
      f[e] -= cut;
      diff += cut;
    }
  }
  return FlowProfile(std::move(f));
}

MinimaxResult minimize_max(const ParallelNetwork& network, const Rational& demand,
                           const std::vector<MinimaxTerm>& terms,
                           const StackelbergOptions& options,
                           const std::vector<FlowProfile>& extra_starts) {
  if (terms.empty()) throw Error(ErrorKind::kInternal, "minimax needs at least one term");
  const std::size_t n = network.size();

  // Starting routes: f^lo, f^hi, proportional fill, then seeded random points.
  std::vector<FlowProfile> starts{build_flo(network, demand), build_fhi(network, demand)};
  {
    std::vector<Rational> prop;
    const Rational& total = network.total_capacity();
    for (const auto& c : network.capacities()) {
      prop.push_back(total.is_zero() ? Rational() : demand * c / total);
    }
    starts.emplace_back(std::move(prop));
  }
  DoubleProblem p;
  for (const auto& c : network.capacities()) p.capacity.push_back(c.to_double());
  for (const auto& t : terms) {
    p.budget.push_back(t.budget.to_double());
    p.offset.push_back(t.offset.to_double());
  }
  p.demand = demand.to_double();

  std::vector<std::vector<double>> initial;
  for (const auto& s : starts) initial.push_back(to_double(s));
  for (int i = 0; i < kRandomStarts; ++i) {
    std::mt19937_64 rng(options.seed * 1000003ULL + static_cast<std::uint64_t>(i));
    std::vector<double> y(n);
    for (std::size_t e = 0; e < n; ++e) {
      y[e] = std::uniform_real_distribution<double>(0.0, p.capacity[e])(rng);
    }
    initial.push_back(project_bounded_simplex(y, p.capacity, p.demand));
  }

  std::vector<Descent> runs(initial.size());
  const int steps = demand.is_zero() ? 0 : std::max(0, options.max_iterations);
  parallel_for(initial.size(), options.threads,
               [&](std::size_t i) { runs[i] = descend(p, initial[i], steps); });

  MinimaxResult result;
  for (const auto& run : runs) result.iterations += run.iterations;

  ExactModel model(network, demand, terms, options);
  std::optional<Rational> upper;
  auto consider = [&](const FlowProfile& f) {
    auto [value, term] = model.evaluate(f);
    if (!upper || value < *upper) {
      upper = value;
      result.route = f;
      result.term = term;
    }
  };
  for (const auto& s : starts) consider(s);
  for (const auto& s : extra_starts) consider(s);
  for (const auto& run : runs) {
    for (std::int64_t den : {16, 1024, 1 << 20}) consider(snap_route(network, demand, run.best_point, den));
  }

  const Rational tol = Rational::from_double(options.tolerance);
  Rational lower;
  for (int round = 1; round <= std::max(1, options.max_cut_rounds); ++round) {
    const CutModelSolution sol = minimize_cut_model(network, demand, model.cuts());
    lower = sol.value;
    result.cut_rounds = round;
    if (*upper - lower <= Rational() || (round >= 50 && *upper - lower <= tol)) break;
    const std::size_t before = model.cuts().size();
    consider(sol.route);
    if (model.cuts().size() == before) break;  // no new minorant: nothing left to learn
  }
  result.upper = *upper;
  result.lower = min(lower, *upper);
  return result;
}

}  // namespace routegame::detail
