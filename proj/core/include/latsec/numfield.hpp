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

#ifndef LATSEC_NUMFIELD_HPP_
#define LATSEC_NUMFIELD_HPP_

#include <Eigen/Dense>

#include <vector>

#include "latsec/polynomial.hpp"

namespace latsec {

// Square full-rank real matrix whose rows are lattice basis vectors; the
// lattice is { z * M : z integer }.
class GeneratorMatrix {
 public:
  // Throws DomainError unless the matrix is square, nonempty and finite.
  explicit GeneratorMatrix(Eigen::MatrixXd rows);

  int rank() const { return static_cast<int>(rows_.rows()); }
  const Eigen::MatrixXd& rows() const { return rows_; }
  double operator()(int i, int j) const { return rows_(i, j); }

  double abs_det() const;
  Eigen::MatrixXd gram() const { return rows_ * rows_.transpose(); }
  GeneratorMatrix transposed() const { return GeneratorMatrix(rows_.transpose()); }
  // max_ij |(M M^T - I)_ij|
  double unitarity_defect() const;

 private:
  Eigen::MatrixXd rows_;
};

GeneratorMatrix kronecker(const GeneratorMatrix& a, const GeneratorMatrix& b);

// Field element written as a polynomial in the generator.
using FieldElement = RationalPolynomial;

// Totally real number field Q(x)/(f), f monic integral.
struct NumberFieldSpec {
  int degree = 0;
  std::vector<long> min_poly;  // ascending coefficients, last one is 1
  std::vector<double> roots;   // the real embeddings, ascending

  // Isolates the roots exactly and bisects them to 2^-60. Throws DomainError
  // if f is not monic, not square-free, or has non-real roots.
  static NumberFieldSpec from_min_poly(std::vector<long> ascending);

  RationalPolynomial polynomial() const;
};

FieldElement field_reduce(const NumberFieldSpec& field, const FieldElement& x);
FieldElement field_multiply(const NumberFieldSpec& field, const FieldElement& a, const FieldElement& b);
// Throws DomainError for x = 0.
FieldElement field_inverse(const NumberFieldSpec& field, const FieldElement& x);
// N_{K/Q}(x) = Res(f, x), exact.
Rational field_norm(const NumberFieldSpec& field, const FieldElement& x);

// (sigma_1(x), ..., sigma_n(x)) with the roots in ascending order.
std::vector<double> embed(const NumberFieldSpec& field, const FieldElement& x);

// Row i is the embedding of basis[i]. Throws DomainError when the basis is
// linearly dependent over Q or has the wrong length.
GeneratorMatrix canonical_embedding(const NumberFieldSpec& field, const std::vector<FieldElement>& basis);

// Row i is (sqrt(sigma_j(twist)) * sigma_j(basis[i]))_j, whose Gram matrix is
// the trace form Tr(twist * x * y). twist must be totally positive.
GeneratorMatrix twisted_embedding(const NumberFieldSpec& field, const FieldElement& twist,
                                  const std::vector<FieldElement>& basis);

// M / |det M|^{1/n}; throws DomainError on a singular matrix.
GeneratorMatrix normalize_unit_volume(const GeneratorMatrix& m);

// For a lattice isometric to Z^n: a generator whose rows are the n unit
// vectors of the lattice (so M M^T = I), found by enumerating the norm-1
// vectors. Throws ConstructionError if the lattice is not a rotated Z^n.
GeneratorMatrix orthonormal_basis(const GeneratorMatrix& m);

struct ProductDistance {
  double value = 0.0;
  int coeff_bound = 0;
  std::vector<int> witness;  // coefficient vector attaining the minimum
};

inline constexpr int kDefaultCoeffBound = 5;

// Minimum of prod_i |(zM)_i| over nonzero z in {-B..B}^n. This is a search
// truncation of the minimum product distance; B is reported back. M must
// have unit volume. A nonzero vector with a zero coordinate throws
// DiversityError.
ProductDistance min_product_distance(const GeneratorMatrix& m, int coeff_bound = kDefaultCoeffBound);

}  // namespace latsec

#endif  // LATSEC_NUMFIELD_HPP_
