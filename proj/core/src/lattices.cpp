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
#include <sstream>

#include "latsec/error.hpp"

namespace latsec {
namespace {

std::vector<FieldElement> power_basis(int degree) {
  std::vector<FieldElement> basis;
  for (int k = 0; k < degree; ++k) basis.push_back(RationalPolynomial::monomial(1, k));
  return basis;
}

// Twisted embedding of the power basis, scaled to unit volume and rewritten
// in its orthonormal basis.
GeneratorMatrix rotated_zn(const NumberFieldSpec& field, const FieldElement& twist) {
  return orthonormal_basis(normalize_unit_volume(twisted_embedding(field, twist, power_basis(field.degree))));
}

}  // namespace

std::string_view to_string(BasisOrientation o) { return o == BasisOrientation::kRows ? "rows" : "columns"; }

BasisOrientation parse_orientation(std::string_view text) {
  if (text == "rows") return BasisOrientation::kRows;
  if (text == "columns") return BasisOrientation::kColumns;
  throw DomainError("orientation must be 'rows' or 'columns'");
}

GeneratorMatrix LatticeSpec::codebook_generator() const {
  return orientation == BasisOrientation::kRows ? generator : generator.transposed();
}

LatticeSpec build_lambda1() {
  const auto field = NumberFieldSpec::from_min_poly({1, 1, -3, -1, 1});
  // u = d^3 - d is a totally positive unit over f'(d), and u/f'(d) lies in the
  // codifferent, so Tr(u/f'(d) x y) is an integral unimodular form on Z[d].
  const FieldElement unit{0, -1, 0, 1};
  if (abs(field_norm(field, unit)) != 1) throw ConstructionError("lambda1 twist numerator is not a unit");
  const FieldElement twist = field_multiply(field, unit, field_inverse(field, field.polynomial().derivative()));

  LatticeSpec spec{
      .name = "lambda1",
      .generator = rotated_zn(field, twist),
      .reference_dpmin = 1.0 / std::sqrt(725.0),
      .provenance = "krus_4: twisted canonical embedding of Z[d], d^4-d^3-3d^2+d+1=0, disc 725",
      .min_polys = {field.min_poly},
      .orientation = BasisOrientation::kColumns,
      .unitary = true,
  };
  check_lattice_invariants(spec);
  return spec;
}

LatticeSpec build_lambda2() {
  const auto q2 = NumberFieldSpec::from_min_poly({-2, 0, 1});
  const FieldElement alpha1 = field_inverse(q2, FieldElement{4, 2});  // 1/(2*sqrt2 + 4)
  const auto q5 = NumberFieldSpec::from_min_poly({-1, -1, 1});
  const FieldElement alpha2{3, -1};                                   // 3 - theta

  LatticeSpec spec{
      .name = "lambda2",
      .generator = kronecker(rotated_zn(q2, alpha1), rotated_zn(q5, alpha2)),
      .reference_dpmin = 1.0 / 40.0,
      .provenance = "mixed_2x2: Kronecker product of alpha1*Z[sqrt2] and alpha2*Z[theta], theta=(1+sqrt5)/2",
      .min_polys = {q2.min_poly, q5.min_poly},
      .orientation = BasisOrientation::kRows,
      .unitary = true,
  };
  check_lattice_invariants(spec);
  return spec;
}

LatticeSpec build_lambda3() {
  const auto field = NumberFieldSpec::from_min_poly({1, 4, -4, -1, 1});
  LatticeSpec spec{
      .name = "lambda3",
      .generator = normalize_unit_volume(canonical_embedding(field, power_basis(field.degree))),
      .reference_dpmin = 1.0 / std::sqrt(1125.0),
      .provenance = "canonical embedding of the ring of integers of Q(zeta15)^+, power basis, disc 1125",
      .min_polys = {field.min_poly},
      .orientation = BasisOrientation::kRows,
      .unitary = false,
  };
  check_lattice_invariants(spec);
  return spec;
}

const std::vector<std::string>& catalogued_lattice_names() {
  static const std::vector<std::string> names = {"lambda1", "lambda2", "lambda3"};
  return names;
}

LatticeSpec build_lattice(std::string_view name) {
  if (name == "lambda1") return build_lambda1();
  if (name == "lambda2") return build_lambda2();
  if (name == "lambda3") return build_lambda3();
  throw DomainError("unknown lattice '" + std::string(name) + "' (expected lambda1, lambda2 or lambda3)");
}

void check_lattice_invariants(const LatticeSpec& spec) {
  std::ostringstream why;
  const double det = spec.generator.abs_det();
  if (std::abs(det - 1.0) > 1e-12) why << " |det| = " << det << " is not 1;";
  if (spec.unitary && spec.generator.unitarity_defect() > 1e-9) {
    why << " ||MM^T - I||_max = " << spec.generator.unitarity_defect() << ";";
  }
  if (!why.str().empty()) throw ConstructionError(spec.name + " failed invariants:" + why.str());
  const double dpmin = min_product_distance(spec.generator).value;
  if (std::abs(dpmin - spec.reference_dpmin) > kDpminRelTol * spec.reference_dpmin) {
    why.precision(17);
    why << " d_pmin = " << dpmin << " but reference is " << spec.reference_dpmin << ";";
  }
  if (!why.str().empty()) throw ConstructionError(spec.name + " failed invariants:" + why.str());
}

}  // namespace latsec
