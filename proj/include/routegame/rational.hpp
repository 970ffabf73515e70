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

#ifndef ROUTEGAME_RATIONAL_HPP_
#define ROUTEGAME_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace routegame {

// Exact rational number in canonical form (denominator > 0, reduced).
// Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value)  // NOLINT(google-explicit-constructor)
      : value_(convert(value)) {}
  Rational(long long numerator, long long denominator);
  explicit Rational(mpq_class value);

  // Accepts "p", "-p", "p/q", decimal "6.333", and scientific "1.5e-3".
  // Decimals are read as exact base-10 rationals. Throws Error(kParse).
  static Rational parse(std::string_view text);
  // Exact value of a finite double (a dyadic rational).
  static Rational from_double(double value);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Nearest double (ties to even).
  double to_double() const;
  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  // Throws Error(kDomain) on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  template <std::integral I>
  static mpq_class convert(I value) {
    if constexpr (std::is_signed_v<I>) {
      return mpq_class(static_cast<long>(value));
    } else {
      return mpq_class(static_cast<unsigned long>(value));
    }
  }

  mpq_class value_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

// Best rational approximation with denominator <= max_denominator
// (continued-fraction convergents and semiconvergents).
Rational best_approximation(const Rational& value, std::int64_t max_denominator);

}  // namespace routegame

#endif  // ROUTEGAME_RATIONAL_HPP_
