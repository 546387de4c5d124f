// Copyright 2026 The latsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATSEC_POLYNOMIAL_HPP_
#define LATSEC_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace latsec {

using Rational = mpq_class;

// Parses "p", "p/q" or a decimal integer; throws DomainError otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending order of powers. The zero polynomial has no coefficients and
// degree -1; trailing zero coefficients are never stored.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int power) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  RationalPolynomial derivative() const;
  RationalPolynomial pow(unsigned exponent) const;
  RationalPolynomial monic() const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
  RationalPolynomial operator-() const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form in the given variable, highest power first.
  std::string to_string(char var = 'z') const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};

PolynomialDivision divide(const RationalPolynomial& dividend, const RationalPolynomial& divisor);

// Monic greatest common divisor; gcd(0, 0) is 0.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

// p / gcd(p, p'): same roots as p, all simple.
RationalPolynomial square_free_part(const RationalPolynomial& p);

Rational resultant(const RationalPolynomial& a, const RationalPolynomial& b);

// Closed interval [lo, hi] with rational endpoints; lo == hi marks an exact root.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPolynomial& p);

  int sign_changes(const Rational& x) const;
  int sign_changes_at_neg_infinity() const;
  int sign_changes_at_pos_infinity() const;

  // Number of distinct real roots in the open interval (a, b), a < b.
  int count_open(const Rational& a, const Rational& b) const;
  int count_real_roots() const;

  const RationalPolynomial& base() const { return chain_.front(); }
  std::size_t length() const { return chain_.size(); }

 private:
  std::vector<RationalPolynomial> chain_;
};

// Isolates every real root of p in the open interval (lo, hi). Each returned
// interval contains exactly one root and has width <= max_width; rational
// roots hit during bisection come back as point intervals. Results are in
// increasing order. p must be nonzero.
std::vector<RationalInterval> isolate_real_roots(const RationalPolynomial& p, const Rational& lo,
                                                 const Rational& hi, const Rational& max_width);

// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const RationalPolynomial& p);

}  // namespace latsec

#endif  // LATSEC_POLYNOMIAL_HPP_
