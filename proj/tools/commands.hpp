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

#ifndef LATSEC_TOOLS_COMMANDS_HPP_
#define LATSEC_TOOLS_COMMANDS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace latsec::cli {

struct ThetaOptions {
  double y = 1.0;
  double tol = 1e-14;
  std::string format = "text";
};

struct SecrecyOptions {
  std::string action;  // gain, verify or table
  std::optional<int> dim;
  std::optional<std::string> poly_file;
  bool all = false;
  std::string format = "text";
};

struct SumOptions {
  std::optional<std::string> lattice;
  std::optional<int> m;
  std::optional<double> p_lim;
  std::optional<long long> target_size;
  std::optional<std::string> reproduce;
  int exponent = 3;
  int jobs = 1;
  bool full_precision = false;
  std::string format = "csv";
};

struct CompareOptions {
  std::vector<std::string> rows;  // lattice:m[:p_lim | :tN]
  std::optional<double> gamma_e;
  std::optional<double> gamma_e_db;
  double vol_b = 1.0;
  int exponent = 3;
  int jobs = 1;
  std::string format = "text";
};

struct LatticeOptions {
  std::string action;  // show or export
  std::vector<std::string> names;
  std::string out_dir = ".";
  std::string format = "text";
};

void run_theta(const ThetaOptions& opt, std::ostream& out);
void run_secrecy(const SecrecyOptions& opt, std::ostream& out);
void run_sum(const SumOptions& opt, std::ostream& out);
void run_compare(const CompareOptions& opt, std::ostream& out);
void run_lattice(const LatticeOptions& opt, std::ostream& out);

}  // namespace latsec::cli

#endif  // LATSEC_TOOLS_COMMANDS_HPP_
