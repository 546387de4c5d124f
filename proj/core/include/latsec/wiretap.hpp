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

#ifndef LATSEC_WIRETAP_HPP_
#define LATSEC_WIRETAP_HPP_

#include <string>
#include <vector>

#include "latsec/constellation.hpp"

namespace latsec {

struct ChannelParams {
  double gamma_e = 1.0;  // Eve's average SNR, linear
  double vol_b = 1.0;    // volume of Bob's lattice
  int n = 0;

  void validate() const;  // throws DomainError
};

double gamma_from_db(double db);

// (1/(4 gamma_e^2))^(n/2) * vol_b * s_value
double eve_correct_probability(const ChannelParams& params, double s_value);

struct ComparisonInput {
  SumReport report;
  double dpmin = 0.0;
};

struct ComparisonEntry {
  SumReport report;
  double dpmin = 0.0;
  double probability = 0.0;
};

// Ranks by Eve's correct-decision probability, most confusing first. Every
// report must have dimension params.n.
std::vector<ComparisonEntry> compare_report(const std::vector<ComparisonInput>& inputs, const ChannelParams& params);

std::string comparison_to_json(const std::vector<ComparisonEntry>& entries, const ChannelParams& params);
std::string comparison_to_text(const std::vector<ComparisonEntry>& entries);

}  // namespace latsec

#endif  // LATSEC_WIRETAP_HPP_
