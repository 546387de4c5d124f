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

#ifndef LATSEC_LATTICES_HPP_
#define LATSEC_LATTICES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "latsec/numfield.hpp"

namespace latsec {

// How codewords are formed from the generator: kRows means x = z * M (rows
// are basis vectors), kColumns means x = M * z, the convention of the rotation
// catalogue the first lattice is taken from.
enum class BasisOrientation { kRows, kColumns };

std::string_view to_string(BasisOrientation o);
BasisOrientation parse_orientation(std::string_view text);

struct LatticeSpec {
  std::string name;
  GeneratorMatrix generator;
  double reference_dpmin = 0.0;
  std::string provenance;
  // Minimal polynomials (ascending integer coefficients) of the fields the
  // construction uses; two entries for the Kronecker construction.
  std::vector<std::vector<long>> min_polys;
  BasisOrientation orientation = BasisOrientation::kRows;
  bool unitary = false;

  // Row-basis generator of the codebook lattice.
  GeneratorMatrix codebook_generator() const;
};

// Relative tolerance for the d_pmin acceptance check.
inline constexpr double kDpminRelTol = 1e-6;

// Rotated Z^4 from the totally real quartic field of discriminant 725
// (d^4 - d^3 - 3d^2 + d + 1 = 0), twisted by a codifferent element so the
// trace form is unimodular. d_pmin = 1/sqrt(725).
LatticeSpec build_lambda1();

// Kronecker product of the rotated Z^2 lattices alpha1*Z[sqrt2] and
// alpha2*Z[(1+sqrt5)/2]. d_pmin = 1/40.
LatticeSpec build_lambda2();

// Unit-volume canonical embedding of the ring of integers of Q(zeta15)^+,
// a skewed lattice. d_pmin = 1/sqrt(1125).
LatticeSpec build_lambda3();

// Dispatch on "lambda1" | "lambda2" | "lambda3"; throws DomainError otherwise.
LatticeSpec build_lattice(std::string_view name);
const std::vector<std::string>& catalogued_lattice_names();

// Unit volume within 1e-12, unitarity within 1e-9 where claimed and d_pmin
// within kDpminRelTol of the reference. Throws ConstructionError.
void check_lattice_invariants(const LatticeSpec& spec);

}  // namespace latsec

#endif  // LATSEC_LATTICES_HPP_
