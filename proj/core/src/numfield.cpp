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

#include "latsec/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "latsec/error.hpp"
#include "short_vectors.hpp"

namespace latsec {

GeneratorMatrix::GeneratorMatrix(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0 || rows_.rows() != rows_.cols()) throw DomainError("generator matrix must be square and nonempty");
  if (!rows_.allFinite()) throw DomainError("generator matrix has non-finite entries");
}

double GeneratorMatrix::abs_det() const { return std::abs(rows_.determinant()); }

double GeneratorMatrix::unitarity_defect() const {
  const Eigen::MatrixXd d = gram() - Eigen::MatrixXd::Identity(rows_.rows(), rows_.cols());
  return d.cwiseAbs().maxCoeff();
}

GeneratorMatrix kronecker(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  const auto na = a.rows().rows();
  const auto nb = b.rows().rows();
  Eigen::MatrixXd k(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) k.block(i * nb, j * nb, nb, nb) = a.rows()(i, j) * b.rows();
  }
  return GeneratorMatrix(std::move(k));
}

RationalPolynomial NumberFieldSpec::polynomial() const {
  std::vector<Rational> c;
  c.reserve(min_poly.size());
  for (long v : min_poly) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

NumberFieldSpec NumberFieldSpec::from_min_poly(std::vector<long> ascending) {
  NumberFieldSpec field;
  field.min_poly = std::move(ascending);
  const RationalPolynomial f = field.polynomial();
  if (f.degree() < 1 || f.leading() != 1) throw DomainError("minimal polynomial must be monic of degree >= 1");
  field.degree = f.degree();
  if (gcd(f, f.derivative()).degree() > 0) throw DomainError("minimal polynomial is not square-free");
  const Rational bound = root_bound(f);
  const auto roots = isolate_real_roots(f, -bound, bound, Rational(1, mpz_class(1) << 60));
  if (static_cast<int>(roots.size()) != field.degree) {
    throw DomainError("field is not totally real: " + std::to_string(roots.size()) + " real roots for degree " +
                      std::to_string(field.degree));
  }
  field.roots.reserve(roots.size());
  for (const auto& iv : roots) field.roots.push_back(iv.midpoint().get_d());
  return field;
}

FieldElement field_reduce(const NumberFieldSpec& field, const FieldElement& x) {
  return divide(x, field.polynomial()).remainder;
}

FieldElement field_multiply(const NumberFieldSpec& field, const FieldElement& a, const FieldElement& b) {
  return field_reduce(field, a * b);
}

FieldElement field_inverse(const NumberFieldSpec& field, const FieldElement& x) {
  // Extended Euclid: s*x + t*f = g with g a nonzero constant.
  const RationalPolynomial f = field.polynomial();
  RationalPolynomial r0 = field_reduce(field, x);
  if (r0.is_zero()) throw DomainError("zero has no inverse");
  RationalPolynomial r1 = f;
  RationalPolynomial s0 = RationalPolynomial::constant(1);
  RationalPolynomial s1;
  while (!r1.is_zero()) {
    const auto qr = divide(r0, r1);
    RationalPolynomial s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = qr.remainder;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw DomainError("element is a zero divisor modulo the minimal polynomial");
  return field_reduce(field, s0 * (Rational(1) / r0.leading()));
}

Rational field_norm(const NumberFieldSpec& field, const FieldElement& x) {
  return resultant(field.polynomial(), field_reduce(field, x));
}

std::vector<double> embed(const NumberFieldSpec& field, const FieldElement& x) {
  std::vector<double> out;
  out.reserve(field.roots.size());
  for (double r : field.roots) out.push_back(x.evaluate(r));
  return out;
}

namespace {

void check_basis(const NumberFieldSpec& field, const std::vector<FieldElement>& basis) {
  const auto n = static_cast<std::size_t>(field.degree);
  if (basis.size() != n) throw DomainError("basis must have exactly degree elements");
  // Exact rank test of the coefficient matrix.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement r = field_reduce(field, basis[i]);
    for (std::size_t j = 0; j < n; ++j) a[i][j] = r.coeff(static_cast<int>(j));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DomainError("basis elements are linearly dependent over Q");
    std::swap(a[pivot], a[col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
}

}  // namespace

GeneratorMatrix canonical_embedding(const NumberFieldSpec& field, const std::vector<FieldElement>& basis) {
  check_basis(field, basis);
  const auto n = static_cast<Eigen::Index>(field.degree);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = embed(field, basis[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return GeneratorMatrix(std::move(m));
}

GeneratorMatrix twisted_embedding(const NumberFieldSpec& field, const FieldElement& twist,
                                  const std::vector<FieldElement>& basis) {
  const auto weights = embed(field, twist);
  for (double w : weights) {
    if (!(w > 0.0)) throw DomainError("twisting element must be totally positive");
  }
  Eigen::MatrixXd m = canonical_embedding(field, basis).rows();
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) *= std::sqrt(weights[static_cast<std::size_t>(j)]);
  return GeneratorMatrix(std::move(m));
}

GeneratorMatrix normalize_unit_volume(const GeneratorMatrix& m) {
  const double det = m.abs_det();
  if (!(det > 0.0)) throw DomainError("cannot normalise a singular generator matrix");
  return GeneratorMatrix(m.rows() / std::pow(det, 1.0 / m.rank()));
}

GeneratorMatrix orthonormal_basis(const GeneratorMatrix& m) {
  const int n = m.rank();
  std::vector<std::vector<long long>> units;
  const Eigen::MatrixXd g = m.gram();
  detail::enumerate_short_vectors(g, 1.0, [&](std::span<const long long> x) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = static_cast<double>(x[static_cast<std::size_t>(i)]);
    if (std::abs(v.dot(g * v) - 1.0) > 1e-9) return;
    // Keep one of each +-pair: first nonzero coefficient positive.
    const auto first = std::find_if(x.begin(), x.end(), [](long long c) { return c != 0; });
    if (first != x.end() && *first > 0) units.emplace_back(x.begin(), x.end());
  });
  if (static_cast<int>(units.size()) != n) {
    throw ConstructionError("lattice is not a rotated Z^" + std::to_string(n) + ": found " +
                            std::to_string(units.size()) + " unit vector pairs");
  }
  std::sort(units.begin(), units.end(), std::greater<>());
  Eigen::MatrixXd t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t(i, j) = static_cast<double>(units[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  if (std::abs(std::abs(t.determinant()) - 1.0) > 1e-9) throw ConstructionError("unit vectors do not form a lattice basis");
  return GeneratorMatrix(t * m.rows());
}

ProductDistance min_product_distance(const GeneratorMatrix& m, int coeff_bound) {
  if (coeff_bound < 1) throw DomainError("coeff_bound must be >= 1");
  if (std::abs(m.abs_det() - 1.0) > 1e-9) throw DomainError("min_product_distance expects a unit-volume generator");
  const int n = m.rank();
  const Eigen::MatrixXd& rows = m.rows();
  ProductDistance best;
  best.coeff_bound = coeff_bound;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<int> z(static_cast<std::size_t>(n), -coeff_bound);
  Eigen::RowVectorXd x(n);
  while (true) {
    if (std::any_of(z.begin(), z.end(), [](int c) { return c != 0; })) {
      x.setZero();
      for (int i = 0; i < n; ++i) x += z[static_cast<std::size_t>(i)] * rows.row(i);
      double prod = 1.0;
      for (int j = 0; j < n; ++j) prod *= std::abs(x(j));
      if (x.cwiseAbs().minCoeff() < 1e-12) {
        std::string coeffs;
        for (int c : z) coeffs += (coeffs.empty() ? "" : ",") + std::to_string(c);
        throw DiversityError("nonzero vector with a zero coordinate at coefficients (" + coeffs + ")");
      }
      if (prod < best.value) {
        best.value = prod;
        best.witness = z;
      }
    }
    int k = n - 1;
    while (k >= 0 && z[static_cast<std::size_t>(k)] == coeff_bound) z[static_cast<std::size_t>(k--)] = -coeff_bound;
    if (k < 0) break;
    ++z[static_cast<std::size_t>(k)];
  }
  return best;
}

}  // namespace latsec
