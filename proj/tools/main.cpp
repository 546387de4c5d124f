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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "latsec/error.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy gains and inverse norm power sums of lattice codes"};
  app.require_subcommand(1);

  latsec::cli::ThetaOptions theta;
  auto* theta_cmd = app.add_subcommand("theta", "Jacobi theta values and z at argument yi");
  theta_cmd->add_option("--y", theta.y, "Imaginary part of the argument")->required();
  theta_cmd->add_option("--tol", theta.tol, "Absolute truncation tolerance")->capture_default_str();
  theta_cmd->add_option("--format", theta.format, "text, json or csv")->capture_default_str();

  latsec::cli::SecrecyOptions secrecy;
  auto* secrecy_cmd = app.add_subcommand("secrecy", "Secrecy polynomials of extremal even unimodular lattices");
  secrecy_cmd->add_option("action", secrecy.action, "gain, verify or table")
      ->required()
      ->check(CLI::IsMember({"gain", "verify", "table"}));
  secrecy_cmd->add_option("--dim", secrecy.dim, "Dimension of a tabulated lattice (8, 16, ..., 80)");
  secrecy_cmd->add_option("--poly", secrecy.poly_file, "JSON file with a \"coeffs\" array");
  secrecy_cmd->add_flag("--all", secrecy.all, "All ten tabulated dimensions");
  secrecy_cmd->add_option("--format", secrecy.format, "text or json")->capture_default_str();

  latsec::cli::SumOptions sum;
  auto* sum_cmd = app.add_subcommand("sum", "Truncated inverse norm power sums");
  sum_cmd->add_option("--lattice", sum.lattice, "lambda1, lambda2 or lambda3");
  sum_cmd->add_option("--m", sum.m, "Coefficient bound of the box");
  sum_cmd->add_option("--p-lim", sum.p_lim, "Energy cap");
  sum_cmd->add_option("--target-size", sum.target_size, "Keep this many lowest-energy words");
  sum_cmd->add_option("--exponent", sum.exponent, "Power of the inverse norm")->capture_default_str();
  sum_cmd->add_option("--jobs", sum.jobs, "Enumeration threads")->capture_default_str();
  sum_cmd->add_flag("--full-precision", sum.full_precision, "Print every value with 17 significant digits");
  sum_cmd->add_option("--format", sum.format, "csv, json or text")->capture_default_str();
  sum_cmd->add_option("--reproduce", sum.reproduce, "table1 or table2");

  latsec::cli::CompareOptions compare;
  auto* compare_cmd = app.add_subcommand("compare", "Rank codebooks by Eve's correct-decision probability");
  compare_cmd->add_option("--row", compare.rows, "lattice:m, lattice:m:p_lim or lattice:m:tN")->required();
  compare_cmd->add_option("--gamma-e", compare.gamma_e, "Eve's SNR, linear");
  compare_cmd->add_option("--gamma-e-db", compare.gamma_e_db, "Eve's SNR in dB");
  compare_cmd->add_option("--vol-b", compare.vol_b, "Volume of Bob's lattice")->capture_default_str();
  compare_cmd->add_option("--exponent", compare.exponent)->capture_default_str();
  compare_cmd->add_option("--jobs", compare.jobs)->capture_default_str();
  compare_cmd->add_option("--format", compare.format, "text or json")->capture_default_str();

  latsec::cli::LatticeOptions lattice;
  auto* lattice_cmd = app.add_subcommand("lattice", "Inspect or export the catalogued lattices");
  lattice_cmd->add_option("action", lattice.action, "show or export")
      ->required()
      ->check(CLI::IsMember({"show", "export"}));
  lattice_cmd->add_option("--lattice", lattice.names, "Lattice names (default: all)");
  lattice_cmd->add_option("--out", lattice.out_dir, "Export directory")->capture_default_str();
  lattice_cmd->add_option("--format", lattice.format, "text or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (theta_cmd->parsed()) latsec::cli::run_theta(theta, std::cout);
    if (secrecy_cmd->parsed()) latsec::cli::run_secrecy(secrecy, std::cout);
    if (sum_cmd->parsed()) latsec::cli::run_sum(sum, std::cout);
    if (compare_cmd->parsed()) latsec::cli::run_compare(compare, std::cout);
    if (lattice_cmd->parsed()) latsec::cli::run_lattice(lattice, std::cout);
  } catch (const latsec::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const latsec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
