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

// Two links with c1 <= c2 and route (t, r - t). Each attack (a1, a2) blocks
// (t + a1 - c1)^+ + (r - t + a2 - c2)^+, and the best response is the better
// of the two "fill one edge first" attacks, so everything is a maximum of a
// few convex piecewise-linear functions of t.

#ifndef ROUTEGAME_SRC_TWO_LINK_HPP_
#define ROUTEGAME_SRC_TWO_LINK_HPP_

#include <vector>

#include "routegame/rational.hpp"

namespace routegame::detail {

struct TwoLinkAttack {
  Rational a1, a2, offset;
};

class TwoLinkProblem {
 public:
  TwoLinkProblem(Rational c1, Rational c2, Rational demand)
      : c1_(std::move(c1)), c2_(std::move(c2)), r_(std::move(demand)) {}

  const Rational& c1() const { return c1_; }
  const Rational& c2() const { return c2_; }
  Rational t_min() const;
  Rational t_max() const;

  // Adds both candidate attacks for budget x, each shifted down by offset.
  void add_budget(const Rational& x, const Rational& offset);

  Rational value(const Rational& t) const;

  struct Minimum {
    Rational value, lo, hi;  // minimizers form [lo, hi]
  };
  Minimum minimize() const;

 private:
  Rational piece(const TwoLinkAttack& a, const Rational& t) const;

  Rational c1_, c2_, r_;
  std::vector<TwoLinkAttack> attacks_;
};

}  // namespace routegame::detail

#endif  // ROUTEGAME_SRC_TWO_LINK_HPP_
