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

#include "exact_lp.hpp"

#include <cstddef>
#include <string>

namespace routegame::detail {
namespace {

// Dense tableau for min c.x, Ax = b (b >= 0), x >= 0.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c,
          std::vector<int> identity_column)
      : m_(a.size()), n_(c.size()), cost_(std::move(c)) {
    // Rows without a unit column get an artificial variable.
    artificial_start_ = n_;
    std::size_t width = n_;
    unit_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      unit_[i] = identity_column[i] >= 0 ? identity_column[i] : static_cast<int>(width++);
    }
    width_ = width;
    rows_.assign(m_, std::vector<Rational>(width_ + 1));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = std::move(a[i][j]);
      if (unit_[i] >= static_cast<int>(n_)) rows_[i][unit_[i]] = Rational(1);
      rows_[i][width_] = std::move(b[i]);
    }
    basis_ = unit_;
  }

  void solve() {
    // Phase one: drive artificials to zero.
    std::vector<Rational> phase1(width_);
    bool any = false;
    for (std::size_t j = artificial_start_; j < width_; ++j) {
      phase1[j] = Rational(1);
      any = true;
    }
    if (any) {
      run(phase1, width_);
      if (objective(phase1).sign() > 0) {
        throw Error(ErrorKind::kInternal, "cut model is infeasible");
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] < static_cast<int>(artificial_start_)) continue;
        for (std::size_t j = 0; j < artificial_start_; ++j) {
          if (!rows_[i][j].is_zero()) {
            pivot(i, j);
            break;
          }
        }
      }
    }
    std::vector<Rational> phase2(width_);
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = cost_[j];
    run(phase2, artificial_start_);
    cost2_ = std::move(phase2);
  }

  // y = c_B B^{-1}, read from the columns that started as unit vectors.
  std::vector<Rational> duals() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t r = 0; r < m_; ++r) {
        const Rational& entry = rows_[r][unit_[i]];
        if (!entry.is_zero()) y[i] += cost2_[basis_[r]] * entry;
      }
    }
    return y;
  }

 private:
  Rational objective(const std::vector<Rational>& cost) const {
    Rational v;
    for (std::size_t r = 0; r < m_; ++r) v += cost[basis_[r]] * rows_[r][width_];
    return v;
  }

  void run(const std::vector<Rational>& cost, std::size_t allowed) {
    std::vector<Rational> reduced(width_);
    for (int guard = 0;; ++guard) {
      if (guard > 100000) throw Error(ErrorKind::kInternal, "simplex did not terminate");
      // Reduced costs c_j - c_B B^{-1} A_j.
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        Rational rc = cost[j];
        for (std::size_t r = 0; r < m_; ++r) {
          if (!rows_[r][j].is_zero()) rc -= cost[basis_[r]] * rows_[r][j];
        }
        if (rc.sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return;
      std::size_t leaving = m_;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (rows_[r][entering].sign() <= 0) continue;
        Rational ratio = rows_[r][width_] / rows_[r][entering];
        if (leaving == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == m_) throw Error(ErrorKind::kInternal, "cut model is unbounded");
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = rows_[row][col];
    for (auto& v : rows_[row]) {
      if (!v.is_zero()) v /= p;
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || rows_[r][col].is_zero()) continue;
      const Rational factor = rows_[r][col];
      for (std::size_t j = 0; j <= width_; ++j) {
        if (!rows_[row][j].is_zero()) rows_[r][j] -= factor * rows_[row][j];
      }
    }
    basis_[row] = static_cast<int>(col);
  }

  std::size_t m_, n_, width_ = 0, artificial_start_ = 0;
  std::vector<Rational> cost_, cost2_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> unit_, basis_;
};

}  // namespace

CutModelSolution minimize_cut_model(const ParallelNetwork& network, const Rational& demand,
                                    const std::vector<AffineCut>& cuts) {
  if (cuts.empty()) throw Error(ErrorKind::kInternal, "cut model needs at least one cut");
  const std::size_t n = network.size();
  const std::size_t J = cuts.size();
  // Columns: lambda_j, mu+, mu-, nu_e, s_e. Rows: sum lambda = 1, then one per edge.
  const std::size_t cols = J + 2 + 2 * n;
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(cols));
  std::vector<Rational> b(n + 1), c(cols);
  b[0] = Rational(1);
  for (std::size_t j = 0; j < J; ++j) {
    a[0][j] = Rational(1);
    c[j] = -cuts[j].beta;
    for (int e : cuts[j].support) a[1 + e][j] = Rational(-1);
  }
  for (std::size_t e = 0; e < n; ++e) {
    a[1 + e][J] = Rational(1);
    a[1 + e][J + 1] = Rational(-1);
    a[1 + e][J + 2 + e] = Rational(-1);
    a[1 + e][J + 2 + n + e] = Rational(1);
    c[J + 2 + e] = network.capacity(e);
  }
  c[J] = -demand;
  c[J + 1] = demand;
  std::vector<int> unit(n + 1, -1);
  for (std::size_t e = 0; e < n; ++e) unit[1 + e] = static_cast<int>(J + 2 + n + e);

  Tableau tableau(std::move(a), std::move(b), std::move(c), std::move(unit));
  tableau.solve();
  const auto y = tableau.duals();

  std::vector<Rational> f(n);
  for (std::size_t e = 0; e < n; ++e) f[e] = -y[1 + e];
  CutModelSolution out{-y[0], FlowProfile(std::move(f))};

  // The recovered route must be feasible and attain the value.
  if (!is_feasible_route(network, demand, out.route)) {
    throw Error(ErrorKind::kInternal, "cut model returned an infeasible route");
  }
  Rational check;
  bool first = true;
  for (const auto& cut : cuts) {
    Rational v = cut.beta;
    for (int e : cut.support) v += out.route[e];
    if (first || v > check) check = v;
    first = false;
  }
  if (check != out.value) {
    throw Error(ErrorKind::kInternal, "cut model value " + out.value.str() +
                                          " disagrees with its route (" + check.str() + ")");
  }
  return out;
}

}  // namespace routegame::detail
