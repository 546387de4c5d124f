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

#ifndef LATSEC_THETA_SERIES_HPP_
#define LATSEC_THETA_SERIES_HPP_

#include <cstdint>
#include <vector>

#include "latsec/polynomial.hpp"

namespace latsec {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct ThetaCoefficient {
  Rational norm;
  std::uint64_t count;

  friend bool operator==(const ThetaCoefficient&, const ThetaCoefficient&) = default;
};

// Counts lattice vectors by squared norm up to max_norm: the leading
// q-expansion coefficients of the lattice theta series. Only norms that occur
// are listed, in increasing order; the zero vector gives (0, 1). Throws
// DomainError unless gram is symmetric positive definite.
std::vector<ThetaCoefficient> theta_series_oracle(const RationalMatrix& gram, long max_norm);

// Gram matrix of E8 in a root basis (the Cartan matrix).
RationalMatrix e8_gram();
RationalMatrix identity_gram(int n);

}  // namespace latsec

#endif  // LATSEC_THETA_SERIES_HPP_
