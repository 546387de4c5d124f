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

#include "latsec/tables.hpp"

#include <string>

#include "latsec/error.hpp"
#include "latsec/lattices.hpp"

namespace latsec {

const std::vector<OrthogonalTableRow>& orthogonal_table() {
  static const std::vector<OrthogonalTableRow> rows = {
      {1, 4, 2.67, 9.12264e7, 2.83706e6},      {2, 16, 8.00, 2.24565e10, 6.46037e6},
      {3, 36, 16.00, 2.49382e11, 1.16395e7},   {4, 64, 26.67, 2.49829e11, 1.52838e7},
      {5, 100, 40.00, 2.49851e11, 1.99487e7},  {6, 144, 56.00, 2.50437e11, 2.38188e7},
      {7, 196, 74.67, 2.61395e11, 2.69652e7},  {8, 256, 96.00, 2.61736e11, 3.00791e7},
      {9, 324, 120.00, 2.61739e11, 3.42272e7}, {10, 400, 146.67, 2.71764e11, 3.68287e7},
  };
  return rows;
}

const std::vector<SkewedTableRow>& skewed_table() {
  static const std::vector<SkewedTableRow> rows = {
      {8, 4, 3.63, 2.66, 79, 81, 1.89195e6, std::nullopt, true},
      {5, 16, 15.71, 9.18, 555, 625, 4.24298e6, std::nullopt, true},
      {6, 16, 15.71, 9.56, 715, 625, 4.77423e6, std::nullopt, true},
      {7, 36, 35.57, 20.33, 2405, 2401, 7.13024e6, std::nullopt, true},
      {12, 36, 24.00, 15.24, 2401, 2401, 2.29374e6, 2401, true},
      {9, 64, 63.89, 35.67, 6929, 6561, 9.93903e6, std::nullopt, true},
      {10, 100, 99.97, 55.72, 13663, 14641, 1.20680e7, std::nullopt, true},
      {11, 100, 99.97, 55.57, 16053, 14641, 1.29038e7, std::nullopt, true},
      {14, 196, 195.98, 106.63, 50975, 50625, 1.29038e7, std::nullopt, false},
      {18, 324, 323.93, 175.95, 137273, 130321, 2.18703e7, std::nullopt, true},
      {20, 400, 399.90, 217.31, 208411, 194481, 2.40716e7, std::nullopt, true},
  };
  return rows;
}

std::vector<SweepRow> orthogonal_sweep_rows() {
  std::vector<SweepRow> rows;
  for (const auto& r : orthogonal_table()) rows.push_back({r.m, std::nullopt, std::nullopt});
  return rows;
}

std::vector<SweepRow> skewed_sweep_rows() {
  std::vector<SweepRow> rows;
  for (const auto& r : skewed_table()) {
    if (r.target_size) {
      rows.push_back({r.m, std::nullopt, r.target_size});
    } else {
      rows.push_back({r.m, r.p_lim, std::nullopt});
    }
  }
  return rows;
}

PublishedTable parse_table_name(std::string_view name) {
  if (name == "table1") return PublishedTable::kOrthogonal;
  if (name == "table2") return PublishedTable::kSkewed;
  throw DomainError("unknown table '" + std::string(name) + "' (expected table1 or table2)");
}

std::vector<SumReport> reproduce_table(PublishedTable table, const SumOptions& options,
                                       const LatticeLookup& lookup) {
  if (table == PublishedTable::kSkewed) return table_sweep(lookup("lambda3"), skewed_sweep_rows(), options);
  auto out = table_sweep(lookup("lambda1"), orthogonal_sweep_rows(), options);
  auto second = table_sweep(lookup("lambda2"), orthogonal_sweep_rows(), options);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

}  // namespace latsec
