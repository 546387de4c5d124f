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

#include "latsec/theta_series.hpp"

#include <Eigen/Dense>

#include <limits>
#include <map>

#include "latsec/error.hpp"
#include "short_vectors.hpp"

namespace latsec {
namespace {

__extension__ using Int128 = __int128;

void check_positive_definite(const RationalMatrix& gram) {
  const std::size_t n = gram.size();
  if (n == 0) throw DomainError("empty Gram matrix");
  for (const auto& row : gram) {
    if (row.size() != n) throw DomainError("Gram matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw DomainError("Gram matrix must be symmetric");
    }
  }
  // Exact symmetric elimination: every pivot must be positive.
  RationalMatrix a = gram;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) throw DomainError("Gram matrix is not positive definite");
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
}

}  // namespace

std::vector<ThetaCoefficient> theta_series_oracle(const RationalMatrix& gram, long max_norm) {
  if (max_norm < 0) throw DomainError("max_norm must be nonnegative");
  check_positive_definite(gram);
  const std::size_t n = gram.size();

  mpz_class denom = 1;
  for (const auto& row : gram) {
    for (const auto& v : row) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.get_den().get_mpz_t());
  }
  std::vector<std::vector<long long>> scaled(n, std::vector<long long>(n));
  Eigen::MatrixXd approx(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mpz_class s = gram[i][j].get_num() * (denom / gram[i][j].get_den());
      if (!s.fits_slong_p()) throw DomainError("Gram entries too large for exact enumeration");
      scaled[i][j] = s.get_si();
      approx(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = gram[i][j].get_d();
    }
  }
  if (!denom.fits_slong_p()) throw DomainError("Gram denominators too large");
  const Int128 limit = static_cast<Int128>(max_norm) * denom.get_si();

  std::map<long long, std::uint64_t> counts;
  detail::enumerate_short_vectors(approx, static_cast<double>(max_norm), [&](std::span<const long long> x) {
    Int128 norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      Int128 row = 0;
      for (std::size_t j = 0; j < n; ++j) row += static_cast<Int128>(scaled[i][j]) * x[j];
      norm += row * x[i];
    }
    if (norm <= limit) ++counts[static_cast<long long>(norm)];
  });

  std::vector<ThetaCoefficient> out;
  out.reserve(counts.size());
  for (const auto& [scaled_norm, count] : counts) {
    Rational norm(mpz_class(static_cast<long>(scaled_norm)), denom);
    norm.canonicalize();
    out.push_back({norm, count});
  }
  return out;
}

RationalMatrix e8_gram() {
  RationalMatrix g(8, std::vector<Rational>(8, Rational(0)));
  for (int i = 0; i < 8; ++i) g[i][i] = 2;
  // Dynkin diagram: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (const auto& e : edges) {
    g[e[0]][e[1]] = -1;
    g[e[1]][e[0]] = -1;
  }
  return g;
}

RationalMatrix identity_gram(int n) {
  if (n <= 0) throw DomainError("dimension must be positive");
  RationalMatrix g(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) g[i][i] = 1;
  return g;
}

}  // namespace latsec
