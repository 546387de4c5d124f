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

#include "latsec/lattices.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "latsec/error.hpp"

namespace latsec {
namespace {

TEST(LatticeCatalogueTest, InvariantsHold) {
  const double expected[] = {1.0 / std::sqrt(725.0), 1.0 / 40.0, 1.0 / std::sqrt(1125.0)};
  int i = 0;
  for (const auto& name : catalogued_lattice_names()) {
    const LatticeSpec spec = build_lattice(name);
    EXPECT_EQ(spec.name, name);
    EXPECT_EQ(spec.generator.rank(), 4);
    EXPECT_NEAR(spec.generator.abs_det(), 1.0, 1e-12) << name;
    const double dp = min_product_distance(spec.generator).value;
    EXPECT_NEAR(dp, expected[i], 1e-6 * expected[i]) << name;
    EXPECT_DOUBLE_EQ(spec.reference_dpmin, expected[i]) << name;
    if (spec.unitary) EXPECT_LE(spec.generator.unitarity_defect(), 1e-9) << name;
    ++i;
  }
}

TEST(LatticeCatalogueTest, OrthogonalAndSkewedLattices) {
  EXPECT_TRUE(build_lambda1().unitary);
  EXPECT_TRUE(build_lambda2().unitary);
  const LatticeSpec l3 = build_lambda3();
  EXPECT_FALSE(l3.unitary);
  EXPECT_GT(l3.generator.unitarity_defect(), 1.0);
}

TEST(LatticeCatalogueTest, CodebookGeneratorFollowsOrientation) {
  const LatticeSpec l1 = build_lambda1();
  ASSERT_EQ(l1.orientation, BasisOrientation::kColumns);
  EXPECT_TRUE(l1.codebook_generator().rows().isApprox(l1.generator.rows().transpose()));
  const LatticeSpec l3 = build_lambda3();
  EXPECT_TRUE(l3.codebook_generator().rows() == l3.generator.rows());
}

TEST(LatticeCatalogueTest, Lambda3IsThePowerBasisOfTheCubicUnitField) {
  // Before scaling the power basis spans a lattice of volume sqrt(1125).
  const LatticeSpec l3 = build_lambda3();
  const double scale = std::pow(1125.0, 0.125);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(l3.generator(0, j) * scale, 1.0, 1e-12);
  ASSERT_EQ(l3.min_polys.size(), 1u);
  EXPECT_EQ(l3.min_polys[0], (std::vector<long>{1, 4, -4, -1, 1}));
}

TEST(LatticeCatalogueTest, Lambda2IsAKroneckerProduct) {
  const LatticeSpec l2 = build_lambda2();
  EXPECT_EQ(l2.min_polys.size(), 2u);
  // Rearranging the 2x2 blocks of A (x) B as rows gives a rank-one matrix.
  const auto& m = l2.generator.rows();
  Eigen::Matrix4d r;
  for (int bi = 0; bi < 2; ++bi) {
    for (int bj = 0; bj < 2; ++bj) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) r(2 * bi + bj, 2 * k + l) = m(2 * bi + k, 2 * bj + l);
      }
    }
  }
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4d>(r).singularValues();
  EXPECT_GT(sv(0), 0.5);
  EXPECT_LT(sv(1), 1e-12);
}

TEST(LatticeCatalogueTest, UnknownNameIsADomainError) {
  EXPECT_THROW(build_lattice("lambda4"), DomainError);
  EXPECT_EQ(parse_orientation("columns"), BasisOrientation::kColumns);
  EXPECT_THROW(parse_orientation("diagonal"), DomainError);
}

TEST(LatticeCatalogueTest, InvariantCheckRejectsPerturbedGenerator) {
  LatticeSpec spec = build_lambda2();
  Eigen::MatrixXd g = spec.generator.rows();
  g(0, 0) += 1e-3;
  spec.generator = GeneratorMatrix(g);
  EXPECT_THROW(check_lattice_invariants(spec), ConstructionError);
}

}  // namespace
}  // namespace latsec
