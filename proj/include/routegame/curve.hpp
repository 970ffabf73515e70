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

#ifndef ROUTEGAME_CURVE_HPP_
#define ROUTEGAME_CURVE_HPP_

#include <span>
#include <vector>

#include "routegame/rational.hpp"

namespace routegame {

// Continuous piecewise-linear function given by its breakpoints; values
// between breakpoints are obtained by linear interpolation.
class PiecewiseLinearCurve {
 public:
  struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point&, const Point&) = default;
  };

  PiecewiseLinearCurve() = default;
  // Throws Error(kDomain) unless x is strictly increasing.
  explicit PiecewiseLinearCurve(std::vector<Point> points);

  std::span<const Point> points() const { return points_; }
  bool empty() const { return points_.empty(); }
  const Rational& x_min() const { return points_.front().x; }
  const Rational& x_max() const { return points_.back().x; }

  // Throws Error(kDomain) outside [x_min, x_max].
  Rational value_at(const Rational& x) const;
  // One slope per segment.
  std::vector<Rational> slopes() const;
  // Same function with collinear interior breakpoints removed.
  PiecewiseLinearCurve simplified() const;

 private:
  std::vector<Point> points_;
};

}  // namespace routegame

#endif  // ROUTEGAME_CURVE_HPP_
