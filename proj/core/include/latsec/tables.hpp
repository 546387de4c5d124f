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

#ifndef LATSEC_TABLES_HPP_
#define LATSEC_TABLES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "latsec/constellation.hpp"

namespace latsec {

// Box codebooks of the two orthogonal lattices, unbounded energy.
struct OrthogonalTableRow {
  int m;
  double p_max;
  double p_ave;
  double s_lambda1;
  double s_lambda2;
};

// Energy-carved codebooks of lambda3. Rows with a target size are carved to
// that many lowest-energy words instead of being capped at p_lim.
struct SkewedTableRow {
  int m;
  double p_lim;
  double p_max;
  double p_ave;
  std::int64_t sphere_size;
  std::int64_t box_reference_size;
  double s_value;
  std::optional<std::int64_t> target_size;
  bool s_asserted;  // false where the printed S is a known copy error
};

const std::vector<OrthogonalTableRow>& orthogonal_table();
const std::vector<SkewedTableRow>& skewed_table();

std::vector<SweepRow> orthogonal_sweep_rows();
std::vector<SweepRow> skewed_sweep_rows();

enum class PublishedTable { kOrthogonal, kSkewed };
PublishedTable parse_table_name(std::string_view name);  // "table1" or "table2"

using LatticeLookup = std::function<LatticeSpec(std::string_view)>;

// Table 1 yields the lambda1 rows followed by the lambda2 rows. Lattices come
// from `lookup`, by default the in-process constructions.
std::vector<SumReport> reproduce_table(PublishedTable table, const SumOptions& options = {},
                                       const LatticeLookup& lookup = build_lattice);

}  // namespace latsec

#endif  // LATSEC_TABLES_HPP_
