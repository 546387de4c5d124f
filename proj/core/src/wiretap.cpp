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

#include "latsec/wiretap.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "latsec/error.hpp"

namespace latsec {

void ChannelParams::validate() const {
  if (!(gamma_e > 0.0) || !std::isfinite(gamma_e)) throw DomainError("gamma_e must be positive");
  if (!(vol_b > 0.0) || !std::isfinite(vol_b)) throw DomainError("vol_b must be positive");
  if (n < 1) throw DomainError("dimension must be positive");
}

double gamma_from_db(double db) { return std::pow(10.0, db / 10.0); }

double eve_correct_probability(const ChannelParams& params, double s_value) {
  params.validate();
  return std::pow(4.0 * params.gamma_e * params.gamma_e, -0.5 * params.n) * params.vol_b * s_value;
}

std::vector<ComparisonEntry> compare_report(const std::vector<ComparisonInput>& inputs, const ChannelParams& params) {
  params.validate();
  std::vector<ComparisonEntry> out;
  for (const auto& in : inputs) {
    if (in.report.n != params.n) {
      throw DomainError(fmt::format("report for {} has dimension {}, expected {}", in.report.lattice_name,
                                    in.report.n, params.n));
    }
    out.push_back({in.report, in.dpmin, eve_correct_probability(params, in.report.s_value)});
  }
  // The prefactor is shared, so ordering by S is ordering by probability even
  // when the prefactor underflows.
  std::stable_sort(out.begin(), out.end(),
                   [](const ComparisonEntry& a, const ComparisonEntry& b) { return a.report.s_value < b.report.s_value; });
  return out;
}

namespace {

std::string codebook_label(const SumReport& r) {
  if (r.target_size) return fmt::format("m={} size={}", r.m, *r.target_size);
  if (r.p_lim) return fmt::format("m={} P_lim={:g}", r.m, *r.p_lim);
  return fmt::format("m={}", r.m);
}

}  // namespace

std::string comparison_to_json(const std::vector<ComparisonEntry>& entries, const ChannelParams& params) {
  nlohmann::json doc;
  doc["gamma_e"] = params.gamma_e;
  doc["vol_b"] = params.vol_b;
  doc["n"] = params.n;
  doc["ranking"] = nlohmann::json::array();
  int rank = 1;
  for (const auto& e : entries) {
    nlohmann::json row{{"rank", rank++},
                       {"lattice", e.report.lattice_name},
                       {"m", e.report.m},
                       {"size", e.report.size},
                       {"p_max", e.report.p_max},
                       {"p_ave", e.report.p_ave},
                       {"s_value", e.report.s_value},
                       {"dpmin", e.dpmin},
                       {"probability", e.probability}};
    row["p_lim"] = e.report.p_lim ? nlohmann::json(*e.report.p_lim) : nlohmann::json(nullptr);
    row["target_size"] = e.report.target_size ? nlohmann::json(*e.report.target_size) : nlohmann::json(nullptr);
    doc["ranking"].push_back(std::move(row));
  }
  return doc.dump(2);
}

std::string comparison_to_text(const std::vector<ComparisonEntry>& entries) {
  std::string out = fmt::format("{:>4}  {:<8}  {:<20}  {:>8}  {:>12}  {:>10}  {:>12}\n", "rank", "lattice", "codebook",
                                "size", "S", "dpmin", "P_c,e");
  int rank = 1;
  for (const auto& e : entries) {
    out += fmt::format("{:>4}  {:<8}  {:<20}  {:>8}  {:>12.5e}  {:>10.6f}  {:>12.5e}\n", rank++, e.report.lattice_name,
                       codebook_label(e.report), e.report.size, e.report.s_value, e.dpmin, e.probability);
  }
  return out;
}

}  // namespace latsec
