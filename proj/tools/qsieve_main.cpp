// Copyright 2026 The qsieve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: enumerate Catalan-family objects, run the cyclic
// sieving verifier, print q-Catalan polynomials and their root-of-unity
// values, and check the counting identities.
//
// Exit codes: 0 = success/verified, 1 = mathematical mismatch,
// 2 = usage or cap error.  Results go to stdout (or --output), diagnostics
// to stderr; JSON output is byte-identical across runs on the same input.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsieve/closed_forms.hpp"
#include "qsieve/cyclotomic.hpp"
#include "qsieve/errors.hpp"
#include "qsieve/families.hpp"
#include "qsieve/qanalogue.hpp"
#include "qsieve/verifier.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qsieve;

// Documented CLI-level defaults; --cap overrides them (config/matching in
// units of n, triangulation in polygon size).
constexpr int kCliConfigCap = 14;
constexpr int kCliMatchingCap = 8;
constexpr int kCliTriangulationGonCap = 12;

struct CommonOpts {
  std::string family;
  int n = 0;
  std::string format = "text";
  std::string output;
  int cap = 0;  // 0 = family default
  bool float_check = false;
};

int emit_output(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return std::cout.good() ? 0 : 2;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return 2;
  }
  file << payload;
  file.flush();
  return file.good() ? 0 : 2;
}

template <typename Fn>
int with_family(const CommonOpts& opts, Fn&& fn) {
  if (opts.family == "config") {
    const int cap = opts.cap > 0 ? opts.cap : kCliConfigCap;
    return fn(ConfigurationFamily(opts.n, cap - 1));
  }
  if (opts.family == "matching") {
    const int cap = opts.cap > 0 ? opts.cap : kCliMatchingCap;
    return fn(MatchingFamily(opts.n, cap));
  }
  const int cap = opts.cap > 0 ? opts.cap : kCliTriangulationGonCap;
  return fn(TriangulationFamily(opts.n, cap));
}

int run_enumerate(const CommonOpts& opts) {
  return with_family(opts, [&](const auto& family) -> int {
    const auto objects = family.enumerate();
    std::string payload;
    if (opts.format == "json") {
      ordered_json doc;
      doc["family"] = family.name();
      doc["n"] = family.size_parameter();
      doc["count"] = objects.size();
      ordered_json listed = ordered_json::array();
      for (const auto& x : objects) listed.push_back(x.to_text());
      doc["objects"] = std::move(listed);
      payload = doc.dump() + "\n";
    } else {
      std::ostringstream out;
      for (const auto& x : objects) out << x.to_text() << "\n";
      out << "count=" << objects.size() << "\n";
      payload = out.str();
    }
    return emit_output(payload, opts.output);
  });
}

template <typename Family>
void log_float_check(const Family& family, const CspReport& report) {
  const Polynomial poly = family.sieving_polynomial();
  for (const CspRow& row : report.rows) {
    const CyclotomicValue exact = eval_at_primitive_root(poly, row.d);
    // exp(2*pi*i*k/N) is a primitive d-th root, so the residue agrees with
    // the polynomial there; the difference measures float error only.
    const std::complex<double> direct =
        eval_complex(poly, report.group_order, row.k);
    const std::complex<double> reduced =
        eval_complex(exact.residue, report.group_order, row.k);
    std::fprintf(stderr, "# float-check k=%d d=%d |direct-reduced|=%.3e\n",
                 row.k, row.d, std::abs(direct - reduced));
  }
}

int run_verify(const CommonOpts& opts) {
  return with_family(opts, [&](const auto& family) -> int {
    const CspReport report = verify_csp(family);
    std::fprintf(stderr, "# verify family=%s n=%d took %.3fs\n",
                 report.family.c_str(), report.n, report.seconds);
    if (opts.float_check) log_float_check(family, report);
    const std::string payload = opts.format == "json"
                                    ? report_to_json(report).dump() + "\n"
                                    : report_to_text(report);
    const int rc = emit_output(payload, opts.output);
    if (rc != 0) return rc;
    return report.csp_holds ? 0 : 1;
  });
}

struct QCatalanOpts {
  int n = 0;
  int d = 0;  // 0 = print coefficients
  std::string form = "standard";
  std::string format = "text";
  std::string output;
};

int run_qcatalan(const QCatalanOpts& opts) {
  CatalanForm form = CatalanForm::kStandard;
  if (opts.form == "nplusone") form = CatalanForm::kNPlusOne;
  if (opts.form == "twon") form = CatalanForm::kTwoN;
  const Polynomial p = q_catalan(opts.n, form);
  std::string payload;
  if (opts.d == 0) {
    if (opts.format == "json") {
      ordered_json doc;
      doc["n"] = opts.n;
      ordered_json coeffs = ordered_json::array();
      for (const BigInt& c : p.coeffs()) coeffs.push_back(c.str());
      if (p.is_zero()) coeffs.push_back("0");
      doc["coeffs"] = std::move(coeffs);
      payload = doc.dump() + "\n";
    } else {
      payload = p.coeff_list_string() + "\n";
    }
  } else {
    const CyclotomicValue value = eval_at_primitive_root(p, opts.d);
    if (opts.format == "json") {
      ordered_json doc;
      doc["n"] = opts.n;
      doc["d"] = opts.d;
      if (value.is_integer()) {
        doc["value"] = value.integer_value().str();
      } else {
        doc["value"] = nullptr;
      }
      doc["residue"] = value.residue.to_string();
      payload = doc.dump() + "\n";
    } else {
      payload = (value.is_integer() ? value.integer_value().str()
                                    : value.residue.to_string()) +
                "\n";
    }
  }
  return emit_output(payload, opts.output);
}

struct IdentityOpts {
  int n = 0;
  std::string format = "text";
  std::string output;
};

int run_identity(const IdentityOpts& opts) {
  const auto [sum, cat] = catalan_sum_identity(opts.n);
  const bool sum_ok = sum == cat;
  const Polynomial difference =
      q_binomial(2 * opts.n, opts.n) - q_binomial(2 * opts.n, opts.n + 1);
  const bool qdiff_ok =
      difference == Polynomial::monomial(opts.n) * q_catalan(opts.n);
  std::string payload;
  if (opts.format == "json") {
    ordered_json doc;
    doc["n"] = opts.n;
    doc["sum"] = sum.str();
    doc["catalan"] = cat.str();
    doc["sum_matches"] = sum_ok;
    doc["qdiff_matches"] = qdiff_ok;
    payload = doc.dump() + "\n";
  } else {
    std::ostringstream out;
    out << "sum=" << sum.str() << " catalan=" << cat.str()
        << " qdiff=" << (qdiff_ok ? "ok" : "mismatch") << "\n";
    payload = out.str();
  }
  const int rc = emit_output(payload, opts.output);
  if (rc != 0) return rc;
  return sum_ok && qdiff_ok ? 0 : 1;
}

struct ReportOpts {
  std::string family = "all";
  int min = -1;
  int max = -1;
  std::string format = "text";
  std::string output;
};

struct ReportRange {
  std::string family;
  int min = 0;
  int max = 0;
};

int run_report(const ReportOpts& opts) {
  std::vector<ReportRange> ranges;
  if (opts.family == "all" || opts.family == "config") {
    ranges.push_back({"config", 1, 12});
  }
  if (opts.family == "all" || opts.family == "matching") {
    ranges.push_back({"matching", 0, 6});
  }
  if (opts.family == "all" || opts.family == "triangulation") {
    ranges.push_back({"triangulation", 1, 8});
  }
  if (opts.min >= 0 || opts.max >= 0) {
    if (opts.family == "all") {
      throw std::invalid_argument(
          "report: --min/--max require a single --family");
    }
    if (opts.min >= 0) ranges[0].min = opts.min;
    if (opts.max >= 0) ranges[0].max = opts.max;
    if (ranges[0].min > ranges[0].max) {
      throw std::invalid_argument("report: --min exceeds --max");
    }
  }
  std::vector<CspReport> reports;
  for (const ReportRange& range : ranges) {
    for (int n = range.min; n <= range.max; ++n) {
      CommonOpts one;
      one.family = range.family;
      one.n = n;
      with_family(one, [&](const auto& family) -> int {
        reports.push_back(verify_csp(family));
        return 0;
      });
      std::fprintf(stderr, "# report family=%s n=%d took %.3fs\n",
                   range.family.c_str(), n, reports.back().seconds);
    }
  }
  bool all_hold = true;
  for (const CspReport& report : reports) all_hold = all_hold && report.csp_holds;
  std::string payload;
  if (opts.format == "json") {
    ordered_json doc;
    ordered_json listed = ordered_json::array();
    for (const CspReport& report : reports) {
      listed.push_back(report_to_json(report));
    }
    doc["reports"] = std::move(listed);
    doc["all_hold"] = all_hold;
    payload = doc.dump() + "\n";
  } else {
    std::ostringstream out;
    for (const CspReport& report : reports) out << report_to_text(report) << "\n";
    out << "all_hold=" << (all_hold ? "true" : "false") << "\n";
    payload = out.str();
  }
  const int rc = emit_output(payload, opts.output);
  if (rc != 0) return rc;
  return all_hold ? 0 : 1;
}

void add_format_options(CLI::App* cmd, std::string& format,
                        std::string& output) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", output,
                  "Write results to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qsieve: exact verification of cyclic sieving on Catalan families"};
  app.require_subcommand(1);

  CommonOpts enum_opts;
  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "List all objects of a family in canonical text form");
  enum_cmd->add_option("--family", enum_opts.family, "Object family")
      ->required()
      ->check(CLI::IsMember({"config", "matching", "triangulation"}));
  enum_cmd->add_option("--n", enum_opts.n, "Catalan index of the family")
      ->required();
  enum_cmd->add_option(
      "--cap", enum_opts.cap,
      "Override the size cap (config/matching: max n, default 14/8; "
      "triangulation: max polygon size, default 12)");
  add_format_options(enum_cmd, enum_opts.format, enum_opts.output);

  CommonOpts verify_opts;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Check |Fix(g^k)| against the exact q-Catalan evaluation for every k");
  verify_cmd->add_option("--family", verify_opts.family, "Object family")
      ->required()
      ->check(CLI::IsMember({"config", "matching", "triangulation"}));
  verify_cmd->add_option("--n", verify_opts.n, "Catalan index of the family")
      ->required();
  verify_cmd->add_option(
      "--cap", verify_opts.cap,
      "Override the size cap (config/matching: max n, default 14/8; "
      "triangulation: max polygon size, default 12)");
  verify_cmd->add_flag(
      "--float-check", verify_opts.float_check,
      "Log floating-point cross-checks of each row to stderr (diagnostic "
      "only; the verdict is always decided by exact arithmetic)");
  add_format_options(verify_cmd, verify_opts.format, verify_opts.output);

  QCatalanOpts qcatalan_opts;
  CLI::App* qcatalan_cmd = app.add_subcommand(
      "qcatalan",
      "Print the q-Catalan polynomial or its value at a primitive root");
  qcatalan_cmd->add_option("--n", qcatalan_opts.n, "Catalan index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  qcatalan_cmd
      ->add_option("--d", qcatalan_opts.d,
                   "Evaluate at a primitive d-th root of unity")
      ->check(CLI::PositiveNumber);
  qcatalan_cmd
      ->add_option("--form", qcatalan_opts.form,
                   "Which quotient presentation to compute")
      ->check(CLI::IsMember({"standard", "nplusone", "twon"}))
      ->capture_default_str();
  add_format_options(qcatalan_cmd, qcatalan_opts.format, qcatalan_opts.output);

  IdentityOpts identity_opts;
  CLI::App* identity_cmd = app.add_subcommand(
      "identity",
      "Check the configuration-count summation identity and the q-binomial "
      "difference identity at n");
  identity_cmd->add_option("--n", identity_opts.n, "Catalan index")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format_options(identity_cmd, identity_opts.format, identity_opts.output);

  ReportOpts report_opts;
  CLI::App* report_cmd = app.add_subcommand(
      "report", "Run the verifier across a range of sizes per family");
  report_cmd
      ->add_option("--family", report_opts.family,
                   "Family to report on, or all")
      ->check(CLI::IsMember({"all", "config", "matching", "triangulation"}))
      ->capture_default_str();
  report_cmd->add_option(
      "--min", report_opts.min,
      "Smallest n (single family only; defaults: config 1, matching 0, "
      "triangulation 1)");
  report_cmd->add_option(
      "--max", report_opts.max,
      "Largest n (single family only; defaults: config 12, matching 6, "
      "triangulation 8)");
  add_format_options(report_cmd, report_opts.format, report_opts.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(enum_cmd)) return run_enumerate(enum_opts);
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_opts);
    if (app.got_subcommand(qcatalan_cmd)) return run_qcatalan(qcatalan_opts);
    if (app.got_subcommand(identity_cmd)) return run_identity(identity_opts);
    if (app.got_subcommand(report_cmd)) return run_report(report_opts);
  } catch (const qsieve::size_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
