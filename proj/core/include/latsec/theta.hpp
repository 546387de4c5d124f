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

#ifndef LATSEC_THETA_HPP_
#define LATSEC_THETA_HPP_

namespace latsec {

inline constexpr double kDefaultThetaTol = 1e-14;

// Direct summation is used for y in [kThetaMinY, kThetaMaxY]; outside that
// range the leading asymptotic term is returned and flagged.
inline constexpr double kThetaMinY = 1e-3;
inline constexpr double kThetaMaxY = 1e3;

// Below this point eval_z uses the reflection z(y) = z(1/y): the alternating
// series for theta4 loses relative accuracy to cancellation as y -> 0.
inline constexpr double kZReflectionBelow = 0.25;

// Purely imaginary argument tau = y*i, with nome g = exp(-pi*y).
class ThetaArgument {
 public:
  explicit ThetaArgument(double y);

  double y() const { return y_; }
  double nome() const;

 private:
  double y_;
};

enum class ThetaKind { kTheta2 = 2, kTheta3 = 3, kTheta4 = 4 };

struct ThetaTriple {
  double theta2 = 0.0;
  double theta3 = 0.0;
  double theta4 = 0.0;
  // Absolute truncation bound on each value.
  double tol = 0.0;
  // True when y was outside [kThetaMinY, kThetaMaxY] and the values are
  // asymptotic limits rather than truncated sums.
  bool asymptotic = false;

  // theta2^4 + theta4^4 - theta3^4.
  double jacobi_residual() const;
};

// Throws DomainError if y <= 0 or tol is outside (0, 1).
double eval_theta(ThetaKind kind, double y, double tol = kDefaultThetaTol);
double eval_theta(int kind, double y, double tol = kDefaultThetaTol);

ThetaTriple eval_theta_triple(double y, double tol = kDefaultThetaTol);

// z(y) = theta2^4 theta4^4 / theta3^8, in [0, 1/4]. An overshoot past 1/4
// within 1000*tol is clamped; anything larger throws ConsistencyError.
double eval_z(double y, double tol = kDefaultThetaTol);

}  // namespace latsec

#endif  // LATSEC_THETA_HPP_
