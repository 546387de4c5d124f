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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "latsec/error.hpp"

namespace latsec {
namespace {

TEST(NumberFieldTest, RootsAreRealAndAscending) {
  const auto f = NumberFieldSpec::from_min_poly({1, 1, -3, -1, 1});
  ASSERT_EQ(f.degree, 4);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(f.polynomial().evaluate(f.roots[i]), 0.0, 1e-12);
    if (i > 0) EXPECT_LT(f.roots[i - 1], f.roots[i]);
  }
}

TEST(NumberFieldTest, RejectsFieldsThatAreNotTotallyReal) {
  EXPECT_THROW(NumberFieldSpec::from_min_poly({1, 0, 1}), DomainError);        // x^2 + 1
  EXPECT_THROW(NumberFieldSpec::from_min_poly({1, -2, 1}), DomainError);       // (x - 1)^2
  EXPECT_THROW(NumberFieldSpec::from_min_poly({-2, 0, 2}), DomainError);       // not monic
}

TEST(NumberFieldTest, NormIsProductOfEmbeddings) {
  const auto f = NumberFieldSpec::from_min_poly({1, 4, -4, -1, 1});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    FieldElement x{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    if (x.is_zero()) continue;
    double product = 1.0;
    for (double v : embed(f, x)) product *= v;
    const double norm = field_norm(f, x).get_d();
    EXPECT_NEAR(norm, product, 1e-9 * std::max(1.0, std::abs(norm))) << x.to_string('x');
    EXPECT_EQ(field_multiply(f, x, field_inverse(f, x)), FieldElement{1}) << x.to_string('x');
  }
}

TEST(NumberFieldTest, MultiplicationReducesModuloMinimalPolynomial) {
  const auto f = NumberFieldSpec::from_min_poly({-2, 0, 1});
  const FieldElement s{0, 1};
  EXPECT_EQ(field_multiply(f, s, s), FieldElement{2});
  EXPECT_EQ(field_norm(f, FieldElement{1, 1}), Rational(-1));  // (1 + s)(1 - s)
  EXPECT_THROW(field_inverse(f, FieldElement{}), DomainError);
}

TEST(GeneratorMatrixTest, KroneckerOfRotationsIsOrthogonal) {
  const double c = std::cos(0.3), s = std::sin(0.3);
  Eigen::MatrixXd r(2, 2);
  r << c, s, -s, c;
  const GeneratorMatrix k = kronecker(GeneratorMatrix(r), GeneratorMatrix(r));
  EXPECT_EQ(k.rank(), 4);
  EXPECT_NEAR(k.abs_det(), 1.0, 1e-14);
  EXPECT_LE(k.unitarity_defect(), 1e-15);
  EXPECT_DOUBLE_EQ(k(0, 3), s * s);
  EXPECT_THROW(GeneratorMatrix(Eigen::MatrixXd(2, 3)), DomainError);
}

TEST(EmbeddingTest, CanonicalEmbeddingOfQuadraticRing) {
  const auto f = NumberFieldSpec::from_min_poly({-2, 0, 1});
  const GeneratorMatrix m = canonical_embedding(f, {FieldElement{1}, FieldElement{0, 1}});
  EXPECT_NEAR(m.abs_det(), 2.0 * std::sqrt(2.0), 1e-14);  // sqrt(disc) = sqrt(8)
  const GeneratorMatrix unit = normalize_unit_volume(m);
  EXPECT_NEAR(unit.abs_det(), 1.0, 1e-14);
  EXPECT_THROW(canonical_embedding(f, {FieldElement{1}, FieldElement{2}}), DomainError);
}

TEST(EmbeddingTest, TwistedTraceFormGivesRotatedZ2) {
  // alpha = 1/(4 + 2 sqrt2) makes Tr(alpha x y) unimodular on Z[sqrt2].
  const auto f = NumberFieldSpec::from_min_poly({-2, 0, 1});
  const FieldElement alpha = field_inverse(f, FieldElement{4, 2});
  const GeneratorMatrix t = twisted_embedding(f, alpha, {FieldElement{1}, FieldElement{0, 1}});
  EXPECT_NEAR(t.abs_det(), 1.0, 1e-13);
  const GeneratorMatrix rot = orthonormal_basis(t);
  EXPECT_LE(rot.unitarity_defect(), 1e-13);
  EXPECT_THROW(twisted_embedding(f, FieldElement{0, 1}, {FieldElement{1}, FieldElement{0, 1}}), DomainError);
}

TEST(EmbeddingTest, OrthonormalBasisNeedsAnIntegralLattice) {
  Eigen::MatrixXd g(2, 2);
  g << 1.0, 0.0, 0.5, std::sqrt(0.75);  // hexagonal: no basis of unit vectors
  EXPECT_THROW(orthonormal_basis(normalize_unit_volume(GeneratorMatrix(g))), ConstructionError);
}

TEST(ProductDistanceTest, QuadraticFieldValue) {
  // Z[sqrt2] at unit volume: min |N(x)| = 1 scaled by 1/sqrt(8).
  const auto f = NumberFieldSpec::from_min_poly({-2, 0, 1});
  const GeneratorMatrix m = normalize_unit_volume(canonical_embedding(f, {FieldElement{1}, FieldElement{0, 1}}));
  const ProductDistance d = min_product_distance(m);
  EXPECT_NEAR(d.value, 1.0 / std::sqrt(8.0), 1e-12);
  EXPECT_EQ(d.witness.size(), 2u);
}

TEST(ProductDistanceTest, DetectsMissingDiversity) {
  EXPECT_THROW(min_product_distance(GeneratorMatrix(Eigen::MatrixXd::Identity(3, 3))), DiversityError);
  EXPECT_THROW(min_product_distance(GeneratorMatrix(2.0 * Eigen::MatrixXd::Identity(2, 2))), DomainError);
}

}  // namespace
}  // namespace latsec
