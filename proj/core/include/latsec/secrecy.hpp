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

#ifndef LATSEC_SECRECY_HPP_
#define LATSEC_SECRECY_HPP_

#include <vector>

#include "latsec/polynomial.hpp"
#include "latsec/theta.hpp"

namespace latsec {

// Denominator P(z) of a secrecy function Xi(y) = 1 / P(z(y)), as an exact
// polynomial in z = theta2^4 theta4^4 / theta3^8.
using ZPolynomial = RationalPolynomial;

// Even unimodular lattice of dimension n = 24m + 8k whose theta series is
// E4^{3m+k} + sum_j b_j E4^{3(m-j)+k} Delta^j.
struct ExtremalEvenSpec {
  int n = 0;
  int m = 0;
  int k = 0;
  std::vector<Rational> b;

  // Throws DomainError unless n = 24m + 8k, k in {0,1,2} and |b| = m.
  void validate() const;
};

// Unimodular lattice of dimension n = 8*mu + nu with theta series
// sum_r a_r theta3^{n-8r} Delta8^r.
struct UnimodularThetaSpec {
  int n = 0;
  int mu = 0;
  int nu = 0;
  std::vector<Rational> a;

  void validate() const;
};

ZPolynomial even_unimodular_to_zpoly(const ExtremalEvenSpec& spec);
ZPolynomial unimodular_to_zpoly(const UnimodularThetaSpec& spec);

struct ExtremalTableEntry {
  int dimension;
  ZPolynomial poly;
};

// Secrecy-function denominators of the known extremal even unimodular
// lattices, dimensions 8, 16, ..., 80.
const std::vector<ExtremalTableEntry>& known_extremal_table();

// Throws DomainError for a dimension missing from the table.
const ZPolynomial& extremal_polynomial(int dimension);

// 1 / P(z(y)); throws EvaluationError when P(z(y)) <= 0.
double secrecy_function(const ZPolynomial& poly, double y, double tol = kDefaultThetaTol);

// 1 / P(1/4). This is the secrecy gain once verify_conjecture(poly) holds and
// only the conjectured gain otherwise. Throws DegenerateError if P(1/4) = 0.
Rational secrecy_gain(const ZPolynomial& poly);

}  // namespace latsec

#endif  // LATSEC_SECRECY_HPP_
