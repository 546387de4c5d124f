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

#include "short_vectors.hpp"

#include <cmath>
#include <vector>

#include "latsec/error.hpp"

namespace latsec::detail {

void enumerate_short_vectors(const Eigen::MatrixXd& gram, double bound,
                             const std::function<void(std::span<const long long>)>& visit) {
  const auto n = static_cast<int>(gram.rows());
  if (n == 0 || gram.cols() != n) throw DomainError("Gram matrix must be square and nonempty");
  const Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw DomainError("Gram matrix is not positive definite");
  const Eigen::MatrixXd r = llt.matrixU();

  // norm(x) = sum_i q(i,i) * (x_i + sum_{j>i} q(i,j) x_j)^2
  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i) {
    q(i, i) = r(i, i) * r(i, i);
    for (int j = i + 1; j < n; ++j) q(i, j) = r(i, j) / r(i, i);
  }

  const double budget = bound + 1e-9 * std::max(1.0, std::abs(bound));
  std::vector<long long> x(static_cast<std::size_t>(n), 0);
  std::vector<double> remaining(static_cast<std::size_t>(n) + 1, 0.0);
  remaining[static_cast<std::size_t>(n)] = budget;

  const std::function<void(int)> descend = [&](int i) {
    double center = 0.0;
    for (int j = i + 1; j < n; ++j) center -= q(i, j) * static_cast<double>(x[static_cast<std::size_t>(j)]);
    const double left = remaining[static_cast<std::size_t>(i) + 1];
    if (left < 0.0) return;
    const double radius = std::sqrt(left / q(i, i));
    const auto lo = static_cast<long long>(std::ceil(center - radius));
    const auto hi = static_cast<long long>(std::floor(center + radius));
    for (long long v = lo; v <= hi; ++v) {
      const double d = static_cast<double>(v) - center;
      const double rest = left - q(i, i) * d * d;
      if (rest < 0.0) continue;
      x[static_cast<std::size_t>(i)] = v;
      remaining[static_cast<std::size_t>(i)] = rest;
      if (i == 0) {
        visit(std::span<const long long>(x));
      } else {
        descend(i - 1);
      }
    }
    x[static_cast<std::size_t>(i)] = 0;
  };
  descend(n - 1);
}

}  // namespace latsec::detail
