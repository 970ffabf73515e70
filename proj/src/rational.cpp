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

#include "routegame/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>

#include "routegame/error.hpp"

namespace routegame {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kInvalidSubset: return "invalid-subset";
    case ErrorKind::kSize: return "size";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

namespace {

[[noreturn]] void parse_failure(std::string_view text, const char* why) {
  throw Error(ErrorKind::kParse,
              "cannot parse rational '" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational::Rational(long long numerator, long long denominator)
    : value_(mpz_class(static_cast<long>(numerator)),
             mpz_class(static_cast<long>(denominator))) {
  if (denominator == 0) throw Error(ErrorKind::kDomain, "rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::kDomain, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) parse_failure(text, "empty");

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) parse_failure(text, "expected p/q with digits");
    mpq_class q{mpz_class(std::string(num)), mpz_class(std::string(den))};
    if (q.get_den() == 0) parse_failure(text, "zero denominator");
    q.canonicalize();
    return Rational(negative ? mpq_class(-q) : q);
  }

  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) parse_failure(text, "bad exponent");
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }

  std::string digits;
  long fraction_digits = 0;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      parse_failure(text, "bad decimal");
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) parse_failure(text, "expected a number");
    digits = std::string(s);
  }

  mpz_class num(digits);
  const long scale = exponent - fraction_digits;
  mpq_class q;
  if (scale >= 0) {
    q = mpq_class(num * pow10(static_cast<unsigned long>(scale)));
  } else {
    q = mpq_class(num, pow10(static_cast<unsigned long>(-scale)));
    q.canonicalize();
  }
  return Rational(negative ? mpq_class(-q) : q);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::kDomain, "non-finite value");
  return Rational(mpq_class(value));
}

std::string Rational::str() const { return value_.get_str(); }

double Rational::to_double() const {
  const double d = value_.get_d();  // truncated toward zero
  if (!std::isfinite(d)) return d;
  const double away = std::nextafter(d, sgn(value_) < 0 ? -HUGE_VAL : HUGE_VAL);
  if (!std::isfinite(away)) return d;
  const mpq_class lo_err = abs(value_ - mpq_class(d));
  const mpq_class hi_err = abs(mpq_class(away) - value_);
  if (hi_err < lo_err) return away;
  if (lo_err < hi_err) return d;
  std::uint64_t bits;
  std::memcpy(&bits, &d, sizeof bits);
  return (bits & 1U) ? away : d;
}

Rational best_approximation(const Rational& value, std::int64_t max_denominator) {
  if (max_denominator < 1) throw Error(ErrorKind::kDomain, "max_denominator must be >= 1");
  const mpz_class limit(static_cast<long>(max_denominator));
  if (value.denominator() <= limit) return value;

  // Continued-fraction expansion keeping the last two convergents.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = value.numerator(), d = value.denominator();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > limit) break;
    const mpz_class p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  // Semiconvergent with the largest admissible partial quotient.
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(limit - q0).get_mpz_t(), q1.get_mpz_t());
  const Rational semi(mpq_class(p0 + k * p1, q0 + k * q1));
  const Rational conv(mpq_class(p1, q1));
  return abs(semi - value) < abs(conv - value) ? semi : conv;
}

}  // namespace routegame
