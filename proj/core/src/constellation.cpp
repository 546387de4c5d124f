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

#include "latsec/constellation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "latsec/error.hpp"

namespace latsec {
namespace {

constexpr double kEnergySlack = 1e-12;
constexpr double kTieRelTol = 1e-9;
constexpr double kZeroCoordinate = 1e-12;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Partial {
  CompensatedSum s;
  CompensatedSum energy;
  std::int64_t count = 0;
  double p_max = 0.0;

  void merge(const Partial& other) {
    s.add(other.s);
    energy.add(other.energy);
    count += other.count;
    p_max = std::max(p_max, other.p_max);
  }
};

void check_m(int m) {
  if (m < 1) throw DomainError("m must be a positive integer, got " + std::to_string(m));
}

std::string describe(std::span<const int> z) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < z.size(); ++i) out << (i ? ", " : "") << z[i];
  out << ')';
  return out.str();
}

double inverse_power(double x, int exponent) {
  double r = 1.0;
  for (int k = 0; k < exponent; ++k) r *= x;
  return r;
}

// Visits the words of the slice with leading coefficient z1.
template <typename Visit>
void visit_slice(const Eigen::MatrixXd& gen, int m, int z1, const EnergyFilter& filter, Visit&& visit) {
  const int n = static_cast<int>(gen.rows());
  std::vector<int> z(n, -m);
  std::vector<double> x(n);
  z[0] = z1;
  while (true) {
    double energy = 0.0;
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += z[k] * gen(k, j);
      x[j] = v;
      energy += v * v;
    }
    if (filter.admits(energy)) visit(Codeword{z, x, energy});
    int k = n - 1;
    while (k >= 1 && z[k] == m) z[k--] = -m;
    if (k < 1) break;
    ++z[k];
  }
}

void accumulate(Partial& acc, const Codeword& w, int exponent) {
  ++acc.count;
  acc.energy.add(w.energy);
  if (std::all_of(w.coeffs.begin(), w.coeffs.end(), [](int c) { return c == 0; })) return;
  acc.p_max = std::max(acc.p_max, w.energy);
  double prod = 1.0;
  for (double xi : w.point) {
    if (std::abs(xi) < kZeroCoordinate) {
      throw DiversityError("codeword " + describe(w.coeffs) + " has a zero coordinate; the lattice is not fully diverse");
    }
    prod *= std::abs(xi);
  }
  acc.s.add(inverse_power(1.0 / prod, exponent));
}

SumReport finish(const Partial& total, int n, int m) {
  SumReport r;
  r.n = n;
  r.m = m;
  r.size = total.count;
  r.p_max = total.p_max;
  r.p_ave = total.count > 0 ? total.energy.value() / static_cast<double>(total.count) : 0.0;
  r.s_value = total.s.value();
  return r;
}

}  // namespace

EnergyFilter EnergyFilter::capped(double p_lim) {
  if (!(p_lim > 0.0)) throw DomainError("p_lim must be positive");
  return EnergyFilter{p_lim};
}

bool EnergyFilter::admits(double energy) const { return !p_lim || energy <= *p_lim * (1.0 + kEnergySlack); }

std::int64_t box_size(int n, int m) {
  check_m(m);
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  std::int64_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > kLimit / (2 * m + 1)) throw DomainError("box is too large to enumerate");
    size *= 2 * m + 1;
  }
  return size;
}

void for_each_codeword(const GeneratorMatrix& m_gen, int m, const EnergyFilter& filter,
                       const std::function<void(const Codeword&)>& visit) {
  box_size(m_gen.rank(), m);
  for (int z1 = -m; z1 <= m; ++z1) visit_slice(m_gen.rows(), m, z1, filter, visit);
}

std::vector<EnumeratedWord> enumerate_codebook(const GeneratorMatrix& m_gen, int m, const EnergyFilter& filter) {
  std::vector<EnumeratedWord> out;
  for_each_codeword(m_gen, m, filter, [&](const Codeword& w) {
    out.push_back({{w.coeffs.begin(), w.coeffs.end()}, {w.point.begin(), w.point.end()}});
  });
  return out;
}

SumReport inverse_norm_power_sum(const GeneratorMatrix& m_gen, int m, const EnergyFilter& filter,
                                 const SumOptions& options) {
  box_size(m_gen.rank(), m);
  if (options.exponent < 1) throw DomainError("exponent must be a positive integer");
  const int slices = 2 * m + 1;
  std::vector<Partial> partials(slices);
  std::vector<std::exception_ptr> errors(slices);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int s; (s = next.fetch_add(1)) < slices;) {
      try {
        visit_slice(m_gen.rows(), m, s - m, filter,
                    [&](const Codeword& w) { accumulate(partials[s], w, options.exponent); });
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  const int jobs = std::clamp(options.jobs, 1, slices);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
  }
  Partial total;
  for (int s = 0; s < slices; ++s) {
    if (errors[s]) std::rethrow_exception(errors[s]);
    total.merge(partials[s]);
  }
  SumReport r = finish(total, m_gen.rank(), m);
  r.p_lim = filter.p_lim;
  return r;
}

SumReport carve_lowest_energy(const GeneratorMatrix& m_gen, int m, std::int64_t target_size,
                              const SumOptions& options) {
  const int n = m_gen.rank();
  const std::int64_t total = box_size(n, m);
  if (target_size < 1 || target_size > total) {
    throw DomainError("target size " + std::to_string(target_size) + " is outside [1, " + std::to_string(total) + "]");
  }
  if (options.exponent < 1) throw DomainError("exponent must be a positive integer");

  struct Ranked {
    double energy;
    std::int64_t index;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(static_cast<std::size_t>(total));
  for_each_codeword(m_gen, m, EnergyFilter::unbounded(), [&](const Codeword& w) {
    ranked.push_back({w.energy, static_cast<std::int64_t>(ranked.size())});
  });
  std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) { return a.energy < b.energy; });
  // Energies that differ only by rounding count as ties and go by index.
  for (std::size_t i = 0; i < ranked.size();) {
    std::size_t j = i + 1;
    const double e0 = ranked[i].energy;
    while (j < ranked.size() && ranked[j].energy - e0 <= kTieRelTol * std::max(e0, 1.0)) ++j;
    std::sort(ranked.begin() + i, ranked.begin() + j, [](const Ranked& a, const Ranked& b) { return a.index < b.index; });
    i = j;
  }

  std::vector<std::int64_t> chosen(target_size);
  for (std::int64_t i = 0; i < target_size; ++i) chosen[i] = ranked[i].index;
  std::sort(chosen.begin(), chosen.end());

  const Eigen::MatrixXd& gen = m_gen.rows();
  std::vector<int> z(n);
  std::vector<double> x(n);
  Partial acc;
  for (std::int64_t idx : chosen) {
    std::int64_t rest = idx;
    for (int k = n - 1; k >= 0; --k) {
      z[k] = static_cast<int>(rest % (2 * m + 1)) - m;
      rest /= 2 * m + 1;
    }
    double energy = 0.0;
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += z[k] * gen(k, j);
      x[j] = v;
      energy += v * v;
    }
    accumulate(acc, Codeword{z, x, energy}, options.exponent);
  }
  SumReport r = finish(acc, n, m);
  r.target_size = target_size;
  return r;
}

std::vector<SumReport> table_sweep(const LatticeSpec& lattice, const std::vector<SweepRow>& rows,
                                   const SumOptions& options) {
  const GeneratorMatrix gen = lattice.codebook_generator();
  std::vector<SumReport> out;
  out.reserve(rows.size());
  for (const SweepRow& row : rows) {
    if (row.p_lim && row.target_size) throw DomainError("a row takes either p_lim or target_size, not both");
    SumReport r = row.target_size
                      ? carve_lowest_energy(gen, row.m, *row.target_size, options)
                      : inverse_norm_power_sum(gen, row.m,
                                               row.p_lim ? EnergyFilter::capped(*row.p_lim) : EnergyFilter::unbounded(),
                                               options);
    r.lattice_name = lattice.name;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace latsec
