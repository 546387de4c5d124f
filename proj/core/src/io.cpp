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

#include "latsec/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

#include "latsec/error.hpp"

#ifndef LATSEC_DEFAULT_DATA_DIR
#define LATSEC_DEFAULT_DATA_DIR "data/lattices"
#endif

namespace latsec {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(fmt::format("malformed {}: {}", what, e.what()));
  }
}

std::string format_p_lim(const SumReport& r, bool full) {
  if (r.target_size) return "";
  if (!r.p_lim) return "inf";
  return full ? fmt::format("{:.17g}", *r.p_lim) : fmt::format("{:g}", *r.p_lim);
}

}  // namespace

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("LATTICESEC_DATA"); env != nullptr && *env != '\0') return env;
  return LATSEC_DEFAULT_DATA_DIR;
}

std::string lattice_to_json(const LatticeSpec& spec) {
  // Written by hand so that each generator row stays on one line.
  const int n = spec.generator.rank();
  std::vector<std::string> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < n; ++j) row.push_back(fmt::format("{:.17g}", spec.generator(i, j)));
    rows.push_back(fmt::format("    [{}]", fmt::join(row, ", ")));
  }
  std::string out = "{\n";
  out += fmt::format("  \"name\": {},\n", json(spec.name).dump());
  out += fmt::format("  \"n\": {},\n", n);
  out += fmt::format("  \"min_poly\": {},\n", json(spec.min_polys).dump());
  out += fmt::format("  \"generator\": [\n{}\n  ],\n", fmt::join(rows, ",\n"));
  out += fmt::format("  \"dpmin_ref\": {:.17g},\n", spec.reference_dpmin);
  out += fmt::format("  \"orientation\": \"{}\",\n", to_string(spec.orientation));
  out += fmt::format("  \"unitary\": {},\n", spec.unitary);
  out += fmt::format("  \"provenance\": {}\n", json(spec.provenance).dump());
  return out + "}\n";
}

LatticeSpec lattice_from_json(std::string_view text) {
  const json doc = parse_json(text, "lattice file");
  try {
    const int n = doc.at("n").get<int>();
    const auto& rows = doc.at("generator");
    if (static_cast<int>(rows.size()) != n) throw DomainError("generator must have n rows");
    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw DomainError("generator must be square");
      for (int j = 0; j < n; ++j) g(i, j) = rows[i][j].get<double>();
    }
    LatticeSpec spec{
        .name = doc.at("name").get<std::string>(),
        .generator = GeneratorMatrix(std::move(g)),
        .reference_dpmin = doc.at("dpmin_ref").get<double>(),
        .provenance = doc.value("provenance", std::string()),
        .min_polys = doc.value("min_poly", std::vector<std::vector<long>>{}),
        .orientation = parse_orientation(doc.value("orientation", std::string("rows"))),
        .unitary = doc.value("unitary", false),
    };
    check_lattice_invariants(spec);
    return spec;
  } catch (const json::exception& e) {
    throw DomainError(fmt::format("malformed lattice file: {}", e.what()));
  }
}

void save_lattice(const LatticeSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  out << lattice_to_json(spec);
}

LatticeSpec load_lattice_file(const std::filesystem::path& path) { return lattice_from_json(read_file(path)); }

LatticeSpec load_lattice(std::string_view name) {
  const auto path = data_directory() / (std::string(name) + ".json");
  if (std::filesystem::exists(path)) {
    LatticeSpec spec = load_lattice_file(path);
    if (spec.name != name) throw ConstructionError(fmt::format("{} declares name '{}'", path.string(), spec.name));
    return spec;
  }
  return build_lattice(name);
}

ZPolynomial load_zpolynomial_file(const std::filesystem::path& path) {
  const json doc = parse_json(read_file(path), "polynomial file");
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw DomainError("polynomial file needs a \"coeffs\" array");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : doc["coeffs"]) {
    if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(std::to_string(c.get<long long>()));
    } else {
      throw DomainError("polynomial coefficients must be integers or \"p/q\" strings");
    }
  }
  return ZPolynomial(std::move(coeffs));
}

std::string reports_to_csv(const std::vector<SumReport>& reports, bool full_precision) {
  std::string out = "lattice,m,p_lim,size,p_max,p_ave,s_value\n";
  for (const auto& r : reports) {
    if (full_precision) {
      out += fmt::format("{},{},{},{},{:.17g},{:.17g},{:.17g}\n", r.lattice_name, r.m, format_p_lim(r, true), r.size,
                         r.p_max, r.p_ave, r.s_value);
    } else {
      out += fmt::format("{},{},{},{},{:.2f},{:.2f},{:.5e}\n", r.lattice_name, r.m, format_p_lim(r, false), r.size,
                         r.p_max, r.p_ave, r.s_value);
    }
  }
  return out;
}

std::string reports_to_json(const std::vector<SumReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json row{{"lattice", r.lattice_name}, {"n", r.n},         {"m", r.m},         {"size", r.size},
             {"p_max", r.p_max},          {"p_ave", r.p_ave}, {"s_value", r.s_value}};
    row["p_lim"] = r.p_lim ? json(*r.p_lim) : json(nullptr);
    row["target_size"] = r.target_size ? json(*r.target_size) : json(nullptr);
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<SumReport>& reports) {
  std::string out = fmt::format("{:<8}  {:>3}  {:>8}  {:>8}  {:>9}  {:>9}  {:>12}\n", "lattice", "m", "P_lim", "size",
                                "P_max", "P_ave", "S");
  for (const auto& r : reports) {
    const std::string lim = r.target_size ? fmt::format("#{}", *r.target_size) : format_p_lim(r, false);
    out += fmt::format("{:<8}  {:>3}  {:>8}  {:>8}  {:>9.2f}  {:>9.2f}  {:>12.5e}\n", r.lattice_name, r.m, lim, r.size,
                       r.p_max, r.p_ave, r.s_value);
  }
  return out;
}

}  // namespace latsec
