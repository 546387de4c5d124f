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

#include "latsec/theta.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "latsec/error.hpp"

namespace latsec {
namespace {

void check_args(double y, double tol) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("theta argument y must be positive, got " + std::to_string(y));
  if (!(tol > 0.0 && tol < 1.0)) throw DomainError("theta tolerance must lie in (0, 1)");
}

// sum_{n>=1} sign^n exp(-pi*y*(n+shift)^2), stopped once the geometric tail
// bound of the remaining terms drops below tail_tol.
double theta_series(double y, double shift, bool alternate, double tail_tol) {
  const double a = std::numbers::pi * y;
  double sum = 0.0;
  for (long n = shift > 0.0 ? 0 : 1;; ++n) {
    const double x = static_cast<double>(n) + shift;
    const double term = std::exp(-a * x * x);
    sum += (alternate && (n % 2 != 0)) ? -term : term;
    // Successive ratios exp(-a*(2x+1)) shrink, so the tail is at most
    // next / (1 - ratio).
    const double next = std::exp(-a * (x + 1.0) * (x + 1.0));
    const double ratio = std::exp(-a * (2.0 * x + 3.0));
    if (next == 0.0 || next / (1.0 - ratio) <= tail_tol) break;
  }
  return sum;
}

}  // namespace

ThetaArgument::ThetaArgument(double y) : y_(y) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("theta argument y must be positive");
}

double ThetaArgument::nome() const { return std::exp(-std::numbers::pi * y_); }

double ThetaTriple::jacobi_residual() const {
  const auto p4 = [](double v) { return (v * v) * (v * v); };
  return p4(theta2) + p4(theta4) - p4(theta3);
}

ThetaTriple eval_theta_triple(double y, double tol) {
  check_args(y, tol);
  ThetaTriple t;
  t.tol = tol;
  if (y > kThetaMaxY) {
    t.asymptotic = true;
    t.theta3 = 1.0;
    t.theta4 = 1.0;
    t.theta2 = 2.0 * std::exp(-std::numbers::pi * y / 4.0);
    return t;
  }
  if (y < kThetaMinY) {
    // theta3(iy) = y^{-1/2} theta3(i/y), theta2(iy) = y^{-1/2} theta4(i/y),
    // theta4(iy) = y^{-1/2} theta2(i/y); keep leading terms.
    t.asymptotic = true;
    const double s = 1.0 / std::sqrt(y);
    t.theta3 = s;
    t.theta2 = s;
    t.theta4 = 2.0 * s * std::exp(-std::numbers::pi / (4.0 * y));
    return t;
  }
  // Every series is multiplied by 2, so halve the tail budget.
  const double tail = tol / 2.0;
  t.theta3 = 1.0 + 2.0 * theta_series(y, 0.0, false, tail);
  t.theta4 = 1.0 + 2.0 * theta_series(y, 0.0, true, tail);
  t.theta2 = 2.0 * theta_series(y, 0.5, false, tail);
  return t;
}

double eval_theta(ThetaKind kind, double y, double tol) {
  const ThetaTriple t = eval_theta_triple(y, tol);
  switch (kind) {
    case ThetaKind::kTheta2:
      return t.theta2;
    case ThetaKind::kTheta3:
      return t.theta3;
    case ThetaKind::kTheta4:
      return t.theta4;
  }
  throw DomainError("unknown theta kind");
}

double eval_theta(int kind, double y, double tol) {
  if (kind < 2 || kind > 4) throw DomainError("theta kind must be 2, 3 or 4");
  return eval_theta(static_cast<ThetaKind>(kind), y, tol);
}

double eval_z(double y, double tol) {
  check_args(y, tol);
  if (y < kZReflectionBelow) return eval_z(1.0 / y, tol);
  const ThetaTriple t = eval_theta_triple(y, tol);
  const double r = (t.theta2 * t.theta4) / (t.theta3 * t.theta3);
  const double z = (r * r) * (r * r);
  if (z > 0.25 + 1000.0 * tol) {
    throw ConsistencyError("z(y) exceeds 1/4 beyond tolerance at y = " + std::to_string(y));
  }
  return z > 0.25 ? 0.25 : z;
}

}  // namespace latsec
