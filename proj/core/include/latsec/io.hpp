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

#ifndef LATSEC_IO_HPP_
#define LATSEC_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "latsec/constellation.hpp"
#include "latsec/lattices.hpp"
#include "latsec/secrecy.hpp"

namespace latsec {

// $LATTICESEC_DATA if set, otherwise the directory configured at build time.
std::filesystem::path data_directory();

std::string lattice_to_json(const LatticeSpec& spec);
// Parses and re-checks the invariants; throws ConstructionError on failure.
LatticeSpec lattice_from_json(std::string_view text);

void save_lattice(const LatticeSpec& spec, const std::filesystem::path& path);
LatticeSpec load_lattice_file(const std::filesystem::path& path);

// Reads <data_directory>/<name>.json when present and falls back to the
// in-process construction otherwise.
LatticeSpec load_lattice(std::string_view name);

// {"coeffs": ["1", "-45/16", ...]}, ascending powers of z. Integers are
// accepted in place of strings.
ZPolynomial load_zpolynomial_file(const std::filesystem::path& path);

std::string reports_to_csv(const std::vector<SumReport>& reports, bool full_precision);
std::string reports_to_json(const std::vector<SumReport>& reports);
std::string reports_to_text(const std::vector<SumReport>& reports);

}  // namespace latsec

#endif  // LATSEC_IO_HPP_
