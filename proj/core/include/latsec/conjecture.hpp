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

#ifndef LATSEC_CONJECTURE_HPP_
#define LATSEC_CONJECTURE_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latsec/polynomial.hpp"
#include "latsec/secrecy.hpp"

namespace latsec {

// Outcome of the exact minimisation of P(z) over [0, 1/4].
struct ConjectureCertificate {
  // True iff P(z) > P(1/4) for every z in [0, 1/4).
  bool holds = false;
  // Isolating intervals for the roots of P' in (0, 1/4).
  std::vector<RationalInterval> critical_points;
  // Where the minimum over [0, 1/4] sits: exact, or an isolating interval
  // around an interior critical point.
  std::variant<Rational, RationalInterval> min_location;
  Rational p_at_quarter;
  Rational p_at_zero;
  std::vector<std::string> method;
};

// Critical points are isolated to width 2^-100 (< 1e-30).
inline const Rational kCriticalIntervalWidth = Rational(1, mpz_class(1) << 100);

// Certifies with exact rational arithmetic whether the minimum of P over
// [0, 1/4] is attained only at z = 1/4. A tie between 1/4 and any other
// point counts as a failure. Throws DomainError for constant P.
ConjectureCertificate verify_conjecture(const ZPolynomial& poly);

// {dimension, holds, critical_intervals: [[lo,hi],...], P_at_quarter:"num/den"}
std::string certificate_to_json(const ConjectureCertificate& cert, std::optional<int> dimension);

}  // namespace latsec

#endif  // LATSEC_CONJECTURE_HPP_
