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

#include "latsec/secrecy.hpp"

#include <string>

#include "latsec/error.hpp"

namespace latsec {
namespace {

const RationalPolynomial& one_minus_z() {
  static const RationalPolynomial p{Rational(1), Rational(-1)};
  return p;
}

// c * (1 - z)^a * z^b
RationalPolynomial term(const Rational& c, int a, int b) {
  return one_minus_z().pow(static_cast<unsigned>(a)) * RationalPolynomial::monomial(c, b);
}

struct TableTerm {
  long num;
  long den;
  int one_minus_z_power;
  int z_power;
};

struct TableRow {
  int dimension;
  std::vector<TableTerm> terms;
};

ZPolynomial build(const TableRow& row) {
  ZPolynomial p;
  for (const auto& t : row.terms) p += term(Rational(t.num, t.den), t.one_minus_z_power, t.z_power);
  return p;
}

std::vector<ExtremalTableEntry> make_table() {
  const std::vector<TableRow> rows = {
      {8, {{1, 1, 1, 0}}},
      {16, {{1, 1, 2, 0}}},
      {24, {{1, 1, 3, 0}, {-45, 16, 0, 2}}},
      {32, {{1, 1, 4, 0}, {-15, 4, 1, 2}}},
      {40, {{1, 1, 5, 0}, {-75, 16, 2, 2}}},
      {48, {{1, 1, 6, 0}, {-45, 8, 3, 2}, {3915, 2048, 0, 4}}},
      {56, {{1, 1, 7, 0}, {-105, 16, 4, 2}, {21735, 4096, 1, 4}}},
      {64, {{1, 1, 8, 0}, {-15, 2, 5, 2}, {4905, 512, 2, 4}}},
      {72, {{1, 1, 9, 0}, {-135, 16, 6, 2}, {60345, 4096, 3, 4}, {-53325, 32768, 0, 6}}},
      {80, {{1, 1, 10, 0}, {-75, 8, 7, 2}, {42525, 2048, 4, 4}, {-202125, 32768, 1, 6}}},
  };
  std::vector<ExtremalTableEntry> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back({row.dimension, build(row)});
  return out;
}

}  // namespace

void ExtremalEvenSpec::validate() const {
  if (n <= 0 || n % 8 != 0) throw DomainError("even unimodular dimension must be a positive multiple of 8");
  if (k < 0 || k > 2 || m < 0) throw DomainError("need k in {0,1,2} and m >= 0");
  if (n != 24 * m + 8 * k) throw DomainError("dimension does not match 24m + 8k");
  if (b.size() != static_cast<std::size_t>(m)) throw DomainError("expected exactly m coefficients b_j");
}

void UnimodularThetaSpec::validate() const {
  if (n <= 0 || mu < 0 || nu < 0 || nu >= 8) throw DomainError("need n = 8*mu + nu with 0 <= nu < 8");
  if (n != 8 * mu + nu) throw DomainError("dimension does not match 8*mu + nu");
  if (a.size() != static_cast<std::size_t>(mu) + 1) throw DomainError("expected mu + 1 coefficients a_r");
}

ZPolynomial even_unimodular_to_zpoly(const ExtremalEvenSpec& spec) {
  spec.validate();
  const int lead = 3 * spec.m + spec.k;
  ZPolynomial p = term(1, lead, 0);
  Rational scale = 1;
  for (int j = 1; j <= spec.m; ++j) {
    scale *= 256;
    p += term(spec.b[static_cast<std::size_t>(j - 1)] / scale, 3 * (spec.m - j) + spec.k, 2 * j);
  }
  return p;
}

ZPolynomial unimodular_to_zpoly(const UnimodularThetaSpec& spec) {
  spec.validate();
  std::vector<Rational> coeffs(spec.a.size());
  Rational scale = 1;
  for (std::size_t r = 0; r < spec.a.size(); ++r) {
    coeffs[r] = spec.a[r] / scale;
    scale *= 16;
  }
  return ZPolynomial(std::move(coeffs));
}

const std::vector<ExtremalTableEntry>& known_extremal_table() {
  static const std::vector<ExtremalTableEntry> table = make_table();
  return table;
}

const ZPolynomial& extremal_polynomial(int dimension) {
  for (const auto& e : known_extremal_table()) {
    if (e.dimension == dimension) return e.poly;
  }
  throw DomainError("no known extremal even unimodular lattice in dimension " + std::to_string(dimension));
}

double secrecy_function(const ZPolynomial& poly, double y, double tol) {
  const double z = eval_z(y, tol);
  const double denom = poly.evaluate(z);
  if (!(denom > 0.0)) {
    throw EvaluationError("P(z(y)) <= 0 at y = " + std::to_string(y) + "; not the polynomial of a lattice");
  }
  return 1.0 / denom;
}

Rational secrecy_gain(const ZPolynomial& poly) {
  const Rational at_quarter = poly(Rational(1, 4));
  if (at_quarter == 0) throw DegenerateError("P(1/4) = 0; secrecy gain undefined");
  return 1 / at_quarter;
}

}  // namespace latsec
