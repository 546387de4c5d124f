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

#ifndef LATSEC_CONSTELLATION_HPP_
#define LATSEC_CONSTELLATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latsec/lattices.hpp"
#include "latsec/numfield.hpp"

namespace latsec {

struct Codeword {
  std::span<const int> coeffs;
  std::span<const double> point;
  double energy = 0.0;
};

// Squared-norm cap. An empty cap admits every point of the box.
struct EnergyFilter {
  std::optional<double> p_lim;

  static EnergyFilter unbounded() { return {}; }
  static EnergyFilter capped(double p_lim);  // throws DomainError unless p_lim > 0
  bool admits(double energy) const;
};

struct SumReport {
  std::string lattice_name;
  int n = 0;
  int m = 0;
  std::optional<double> p_lim;
  std::optional<std::int64_t> target_size;
  std::int64_t size = 0;  // zero word included
  double p_max = 0.0;     // over nonzero words, 0 if there are none
  double p_ave = 0.0;     // over all words, zero included
  double s_value = 0.0;
};

// Number of points (2m+1)^n of the m-box; throws DomainError past 2^40.
std::int64_t box_size(int n, int m);

// Visits every z in {-m..m}^n with |zM|^2 admitted by the filter, in
// lexicographic order with z_1 most significant. The zero word is included.
void for_each_codeword(const GeneratorMatrix& m_gen, int m, const EnergyFilter& filter,
                       const std::function<void(const Codeword&)>& visit);

struct EnumeratedWord {
  std::vector<int> coeffs;
  std::vector<double> point;
};
std::vector<EnumeratedWord> enumerate_codebook(const GeneratorMatrix& m_gen, int m, const EnergyFilter& filter);

struct SumOptions {
  int exponent = 3;
  int jobs = 1;
};

SumReport inverse_norm_power_sum(const GeneratorMatrix& m_gen, int m, const EnergyFilter& filter,
                                 const SumOptions& options = {});

SumReport carve_lowest_energy(const GeneratorMatrix& m_gen, int m, std::int64_t target_size,
                              const SumOptions& options = {});

struct SweepRow {
  int m = 1;
  std::optional<double> p_lim;
  std::optional<std::int64_t> target_size;
};

std::vector<SumReport> table_sweep(const LatticeSpec& lattice, const std::vector<SweepRow>& rows,
                                   const SumOptions& options = {});

}  // namespace latsec

#endif  // LATSEC_CONSTELLATION_HPP_
