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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "latsec/conjecture.hpp"
#include "latsec/constellation.hpp"
#include "latsec/error.hpp"
#include "latsec/io.hpp"
#include "latsec/lattices.hpp"
#include "latsec/secrecy.hpp"
#include "latsec/tables.hpp"
#include "latsec/theta.hpp"
#include "latsec/wiretap.hpp"

namespace latsec::cli {
namespace {

void check_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    throw DomainError("unsupported --format '" + format + "'");
  }
}

struct NamedPoly {
  std::optional<int> dimension;
  ZPolynomial poly;
};

std::vector<NamedPoly> select_polynomials(const SecrecyOptions& opt) {
  const int chosen = int(opt.all) + int(opt.dim.has_value()) + int(opt.poly_file.has_value());
  if (chosen != 1) throw DomainError("give exactly one of --dim, --all or --poly");
  std::vector<NamedPoly> out;
  if (opt.all) {
    for (const auto& e : known_extremal_table()) out.push_back({e.dimension, e.poly});
  } else if (opt.dim) {
    out.push_back({*opt.dim, extremal_polynomial(*opt.dim)});
  } else {
    out.push_back({std::nullopt, load_zpolynomial_file(*opt.poly_file)});
  }
  return out;
}

std::string label(const NamedPoly& p) { return p.dimension ? fmt::format("dim {}", *p.dimension) : "poly"; }

std::string join_json(const std::vector<std::string>& items) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) out += items[i] + (i + 1 < items.size() ? ",\n" : "\n");
  return out + "]\n";
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError(fmt::format("cannot parse {} from '{}'", what, text));
  }
  return value;
}

struct CompareRow {
  std::string lattice;
  SweepRow row;
};

CompareRow parse_compare_row(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) throw DomainError(fmt::format("--row '{}' is not lattice:m[:p_lim|:tN]", text));
  CompareRow out{std::string(parts[0]), {parse_number<int>(parts[1], "m"), std::nullopt, std::nullopt}};
  if (parts.size() == 3) {
    if (!parts[2].empty() && parts[2][0] == 't') {
      out.row.target_size = parse_number<long long>(parts[2].substr(1), "target size");
    } else {
      out.row.p_lim = parse_number<double>(parts[2], "p_lim");
    }
  }
  return out;
}

}  // namespace

void run_theta(const ThetaOptions& opt, std::ostream& out) {
  check_format(opt.format, {"text", "json", "csv"});
  const ThetaTriple t = eval_theta_triple(opt.y, opt.tol);
  const double z = eval_z(opt.y, opt.tol);
  if (opt.format == "json") {
    out << fmt::format(
        "{{\"y\": {:.17g}, \"theta2\": {:.17g}, \"theta3\": {:.17g}, \"theta4\": {:.17g}, \"z\": {:.17g}, "
        "\"asymptotic\": {}}}\n",
        opt.y, t.theta2, t.theta3, t.theta4, z, t.asymptotic);
  } else if (opt.format == "csv") {
    out << "y,theta2,theta3,theta4,z\n"
        << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", opt.y, t.theta2, t.theta3, t.theta4, z);
  } else {
    out << fmt::format("y      = {:.17g}\ntheta2 = {:.17g}\ntheta3 = {:.17g}\ntheta4 = {:.17g}\nz      = {:.17g}\n", opt.y,
                       t.theta2, t.theta3, t.theta4, z);
    if (t.asymptotic) out << "(asymptotic limit: y outside [1e-3, 1e3])\n";
  }
}

void run_secrecy(const SecrecyOptions& opt, std::ostream& out) {
  check_format(opt.format, {"text", "json"});
  const bool json = opt.format == "json";
  if (opt.action == "table") {
    std::vector<std::string> items;
    for (const auto& e : known_extremal_table()) {
      if (json) {
        std::vector<std::string> coeffs;
        for (const auto& c : e.poly.coeffs()) coeffs.push_back(quoted(to_string(c)));
        items.push_back(fmt::format("  {{\"dimension\": {}, \"coeffs\": [{}], \"poly\": \"{}\"}}", e.dimension,
                                    fmt::join(coeffs, ", "), e.poly.to_string()));
      } else {
        out << fmt::format("{:>2}  P(z) = {}\n", e.dimension, e.poly.to_string());
      }
    }
    if (json) out << join_json(items);
    return;
  }

  const auto polys = select_polynomials(opt);
  std::vector<std::string> items;
  if (opt.action == "gain") {
    for (const auto& p : polys) {
      const Rational g = secrecy_gain(p.poly);
      if (json) {
        items.push_back(fmt::format("  {{\"dimension\": {}, \"gain\": \"{}\", \"gain_decimal\": {:.17g}}}",
                                    p.dimension ? std::to_string(*p.dimension) : "null", to_string(g), g.get_d()));
      } else {
        out << fmt::format("{}: {} ({:.12g})\n", label(p), to_string(g), g.get_d());
      }
    }
  } else if (opt.action == "verify") {
    for (const auto& p : polys) {
      const ConjectureCertificate cert = verify_conjecture(p.poly);
      if (json) {
        items.push_back(certificate_to_json(cert, p.dimension));
      } else {
        out << fmt::format("{}: holds={} P(1/4)={} critical_points={}\n", label(p), cert.holds,
                           to_string(cert.p_at_quarter), cert.critical_points.size());
      }
    }
  } else {
    throw DomainError("unknown secrecy action '" + opt.action + "'");
  }
  if (json) out << join_json(items);
}

void run_sum(const SumOptions& opt, std::ostream& out) {
  check_format(opt.format, {"csv", "json", "text"});
  const latsec::SumOptions run{opt.exponent, opt.jobs};
  if (opt.jobs < 1) throw DomainError("--jobs must be at least 1");
  std::vector<SumReport> reports;
  if (opt.reproduce) {
    if (opt.lattice || opt.m || opt.p_lim || opt.target_size) {
      throw DomainError("--reproduce cannot be combined with --lattice, --m, --p-lim or --target-size");
    }
    reports = reproduce_table(parse_table_name(*opt.reproduce), run, load_lattice);
  } else {
    if (!opt.lattice || !opt.m) throw DomainError("sum needs --lattice and --m, or --reproduce");
    if (opt.p_lim && opt.target_size) throw DomainError("--p-lim and --target-size are mutually exclusive");
    reports = table_sweep(load_lattice(*opt.lattice), {{*opt.m, opt.p_lim, opt.target_size}}, run);
  }
  if (opt.format == "json") {
    out << reports_to_json(reports);
  } else if (opt.format == "text") {
    out << reports_to_text(reports);
  } else {
    out << reports_to_csv(reports, opt.full_precision);
  }
}

void run_compare(const CompareOptions& opt, std::ostream& out) {
  check_format(opt.format, {"text", "json"});
  if (opt.rows.empty()) throw DomainError("compare needs at least one --row");
  if (opt.gamma_e.has_value() == opt.gamma_e_db.has_value()) {
    throw DomainError("give exactly one of --gamma-e or --gamma-e-db");
  }
  std::vector<ComparisonInput> inputs;
  for (const auto& text : opt.rows) {
    const CompareRow row = parse_compare_row(text);
    const LatticeSpec spec = load_lattice(row.lattice);
    auto reports = table_sweep(spec, {row.row}, {opt.exponent, opt.jobs});
    inputs.push_back({std::move(reports.front()), spec.reference_dpmin});
  }
  ChannelParams params{opt.gamma_e ? *opt.gamma_e : gamma_from_db(*opt.gamma_e_db), opt.vol_b, inputs.front().report.n};
  const auto ranked = compare_report(inputs, params);
  out << (opt.format == "json" ? comparison_to_json(ranked, params) + "\n" : comparison_to_text(ranked));
}

void run_lattice(const LatticeOptions& opt, std::ostream& out) {
  check_format(opt.format, {"text", "json"});
  const std::vector<std::string> names = opt.names.empty() ? catalogued_lattice_names() : opt.names;
  if (opt.action == "export") {
    std::filesystem::create_directories(opt.out_dir);
    for (const auto& name : names) {
      const auto path = std::filesystem::path(opt.out_dir) / (name + ".json");
      save_lattice(build_lattice(name), path);
      out << path.string() << "\n";
    }
    return;
  }
  if (opt.action != "show") throw DomainError("unknown lattice action '" + opt.action + "'");
  for (const auto& name : names) {
    const LatticeSpec spec = load_lattice(name);
    if (opt.format == "json") {
      out << lattice_to_json(spec);
      continue;
    }
    const ProductDistance d = min_product_distance(spec.generator);
    out << fmt::format("{} (n = {}, codebook basis = {})\n  {}\n", spec.name, spec.generator.rank(),
                       to_string(spec.orientation), spec.provenance);
    for (int i = 0; i < spec.generator.rank(); ++i) {
      out << "  [";
      for (int j = 0; j < spec.generator.rank(); ++j) out << fmt::format("{}{:>20.17f}", j ? " " : "", spec.generator(i, j));
      out << " ]\n";
    }
    out << fmt::format("  |det| = {:.15f}  unitarity defect = {:.3e}\n", spec.generator.abs_det(),
                       spec.generator.unitarity_defect());
    out << fmt::format("  d_pmin = {:.12f} (reference {:.12f}, witness [{}])\n", d.value, spec.reference_dpmin,
                       fmt::join(d.witness, ", "));
  }
}

}  // namespace latsec::cli
