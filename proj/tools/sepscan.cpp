// Copyright 2026 The sepscan Authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepscan/criteria.hpp"
#include "sepscan/normalform.hpp"
#include "sepscan/report.hpp"
#include "sepscan/states.hpp"
#include "sepscan/version.hpp"
#include "sepscan/witness.hpp"

namespace {

using sepscan::DensityMatrix;
using sepscan::Error;
using sepscan::ErrorCode;
using sepscan::json;

// Exit codes: 0 success, 2 usage or input-file errors, 3 numerical failures.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadStateFile:
    case ErrorCode::BadParameter:
    case ErrorCode::BadDimension:
    case ErrorCode::BadSubset:
    case ErrorCode::DimMismatch:
    case ErrorCode::BadLoo:
    case ErrorCode::IncompleteCoefficients:
      return 2;
    default:
      return 3;
  }
}

struct StateOptions {
  std::string file;
  std::string family;
  double a = 2.0, b = 3.0, c = 0.6;  // edge-state parameters
  double p = 1.0;                    // noise weight
  int d = 2;                         // isotropic local dimension
  int parties = 3;                   // ghz party count
  std::vector<int> dims = {2, 2};    // random/separable dims
  int terms = 4;                     // separable mixture terms
  std::uint64_t seed = 0;
};

void add_state_options(CLI::App* cmd, StateOptions& opt) {
  cmd->add_option("--file", opt.file, "state file (JSON with dims/re/im)");
  cmd->add_option("--family", opt.family,
                  "state family: acin|isotropic|bell|ghz|random|separable");
  cmd->add_option("--a", opt.a, "edge-state parameter a");
  cmd->add_option("--b", opt.b, "edge-state parameter b");
  cmd->add_option("--c", opt.c, "edge-state parameter c");
  cmd->add_option("--p", opt.p, "noise weight in [0,1]");
  cmd->add_option("--d", opt.d, "isotropic local dimension");
  cmd->add_option("--parties", opt.parties, "ghz party count");
  cmd->add_option("--dims", opt.dims, "local dimensions, e.g. --dims 2 2 2")
      ->delimiter(',');
  cmd->add_option("--terms", opt.terms, "product terms in separable mixtures");
  cmd->add_option("--seed", opt.seed, "random seed");
}

// Family state at noise weight p (used by `scan` to move along the family).
DensityMatrix family_state(const StateOptions& opt, double p) {
  if (opt.family == "acin") {
    return sepscan::mix_noise(sepscan::acin_edge(opt.a, opt.b, opt.c), p);
  }
  if (opt.family == "isotropic") return sepscan::isotropic(opt.d, p);
  if (opt.family == "bell") return sepscan::mix_noise(sepscan::bell(), p);
  if (opt.family == "ghz") {
    return sepscan::mix_noise(sepscan::ghz(opt.parties), p);
  }
  if (opt.family == "random") {
    return sepscan::random_full_rank(opt.dims, opt.seed);
  }
  if (opt.family == "separable") {
    return sepscan::random_separable(opt.dims, opt.terms, opt.seed);
  }
  throw Error(ErrorCode::BadParameter,
              "unknown family '" + opt.family + "'");
}

DensityMatrix resolve_state(const StateOptions& opt) {
  if (!opt.file.empty() && !opt.family.empty()) {
    throw Error(ErrorCode::BadParameter,
                "--file and --family are mutually exclusive");
  }
  if (!opt.file.empty()) return sepscan::load_state_file(opt.file);
  if (!opt.family.empty()) return family_state(opt, opt.p);
  throw Error(ErrorCode::BadParameter, "need --file or --family");
}

void emit(const json& report, bool as_json, const std::string& out_path,
          const std::string& human) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << human;
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      throw Error(ErrorCode::BadStateFile, "cannot write '" + out_path + "'");
    }
    out << report.dump(2) << "\n";
  }
}

std::string describe_subset(const std::optional<std::vector<int>>& subset) {
  if (!subset) return "-";
  std::string out = "{";
  for (size_t i = 0; i < subset->size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string((*subset)[i]);
  }
  return out + "}";
}

int run_check(const StateOptions& opt, const std::string& criterion,
              bool use_nf, bool as_json, const std::string& out_path) {
  DensityMatrix rho = resolve_state(opt);
  std::vector<sepscan::CriterionVerdict> verdicts =
      sepscan::evaluate_criterion(rho, criterion, use_nf);

  json report = sepscan::report_skeleton("check");
  report["dims"] = rho.dims();
  report["criterion"] = criterion;
  report["used_normal_form"] = use_nf;
  json list = json::array();
  bool any = false;
  for (const auto& v : verdicts) {
    list.push_back(sepscan::verdict_to_json(v));
    any = any || v.detected;
  }
  report["verdicts"] = std::move(list);
  report["entangled"] = any;

  std::string human;
  char line[160];
  std::snprintf(line, sizeof(line), "%-6s %-9s %12s %12s %12s  %s\n",
                "crit", "subset", "statistic", "bound", "margin", "detected");
  human += line;
  for (const auto& v : verdicts) {
    std::snprintf(line, sizeof(line), "%-6s %-9s %12.6f %12.6f %+12.6f  %s\n",
                  v.criterion.c_str(), describe_subset(v.subset).c_str(),
                  v.statistic, v.bound, v.margin, v.detected ? "yes" : "no");
    human += line;
  }
  human += any ? "result: ENTANGLED\n" : "result: not detected\n";
  emit(report, as_json, out_path, human);
  return 0;
}

int run_scan(const StateOptions& opt, const std::string& criterion,
             bool use_nf, double p_lo, double p_hi, double tol, bool as_json,
             const std::string& out_path) {
  if (opt.family.empty()) {
    throw Error(ErrorCode::BadParameter, "scan needs --family");
  }
  double threshold = sepscan::scan_threshold(
      [&opt](double p) { return family_state(opt, p); }, criterion, use_nf,
      p_lo, p_hi, tol);

  json report = sepscan::report_skeleton("scan");
  report["family"] = opt.family;
  report["criterion"] = criterion;
  report["used_normal_form"] = use_nf;
  report["p_lo"] = p_lo;
  report["p_hi"] = p_hi;
  report["tol"] = tol;
  report["threshold"] = threshold;

  char line[160];
  std::snprintf(line, sizeof(line),
                "threshold p* = %.6f  (family %s, criterion %s, "
                "normal_form=%s, tol %.1e)\n",
                threshold, opt.family.c_str(), criterion.c_str(),
                use_nf ? "yes" : "no", tol);
  emit(report, as_json, out_path, line);
  return 0;
}

int run_nf(const StateOptions& opt, double tol, int max_sweeps, bool as_json,
           const std::string& out_path) {
  DensityMatrix rho = resolve_state(opt);
  sepscan::NormalFormResult result = sepscan::normal_form(rho, tol, max_sweeps);

  json report = sepscan::report_skeleton("nf");
  report["dims"] = rho.dims();
  report["tol"] = tol;
  report["max_sweeps"] = max_sweeps;
  report["normal_form"] = sepscan::nf_to_json(result);

  char line[200];
  std::snprintf(line, sizeof(line),
                "normal form: converged=%s sweeps=%d residual=%.3e "
                "objective %.6f -> %.6f\n",
                result.converged ? "yes" : "no", result.iterations,
                result.residual, result.objective_trace.front(),
                result.objective_trace.back());
  emit(report, as_json, out_path, line);
  if (!result.converged) {
    std::cerr << "error: NoConvergence: residual " << result.residual
              << " after " << result.iterations << " sweeps\n";
    return 3;
  }
  return 0;
}

int run_witness(const StateOptions& opt, bool canonical, bool as_json,
                const std::string& out_path) {
  json report = sepscan::report_skeleton("witness");
  std::string human;
  char line[200];

  std::optional<DensityMatrix> rho;
  if (!opt.file.empty() || !opt.family.empty()) rho = resolve_state(opt);

  sepscan::Witness w = [&]() {
    if (canonical) {
      std::vector<int> dims = rho ? rho->dims() : opt.dims;
      if (dims.size() < 2) {
        throw Error(ErrorCode::BadSubset,
                    "canonical witness needs >= 2 parties");
      }
      if (dims.size() == 2) {
        return sepscan::bipartite_witness(sepscan::loo_set(dims[0]),
                                          sepscan::loo_set(dims[1]));
      }
      std::vector<int> subset(dims.size());
      std::vector<sepscan::LooSet> loos;
      for (size_t i = 0; i < dims.size(); ++i) {
        subset[i] = static_cast<int>(i);
        loos.push_back(sepscan::loo_set(dims[i]));
      }
      return sepscan::multipartite_witness(subset, loos, dims);
    }
    if (!rho) {
      throw Error(ErrorCode::BadParameter,
                  "witness needs --file or --family (or --canonical --dims)");
    }
    return sepscan::witness_from_state(*rho);
  }();

  report["witness"] = sepscan::witness_to_json(w);
  report["canonical"] = canonical;
  std::snprintf(line, sizeof(line),
                "witness on %zu parties: alpha=%.6f min_eig=%.12f\n",
                w.full_dims.size(), w.alpha, w.min_eigenvalue);
  human += line;
  if (rho) {
    double value = sepscan::expectation(w, *rho);
    report["expectation"] = value;
    std::snprintf(line, sizeof(line), "expectation Tr(W rho) = %.12f  (%s)\n",
                  value, value < 0 ? "entanglement witnessed" : "no detection");
    human += line;
  }
  emit(report, as_json, out_path, human);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sepscan: separability criteria, filtering normal forms and "
               "entanglement witnesses for small multipartite states"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "print the JSON report to stdout");
  app.add_option("--out", out_path, "also write the JSON report to a file");

  StateOptions check_opt, scan_opt, nf_opt, wit_opt;
  std::string check_criterion = "all", scan_criterion = "cm";
  bool check_nf = false, scan_nf = false, wit_canonical = false;
  double scan_lo = 0.0, scan_hi = 0.999, scan_tol = 1e-4;
  double nf_tol = sepscan::policy().nf_tol;
  int nf_max_sweeps = 500;

  CLI::App* check = app.add_subcommand("check", "run separability criteria");
  add_state_options(check, check_opt);
  check->add_option("--criterion", check_criterion,
                    "cm|gcm|lur|ppt|ccnr|all");
  check->add_flag("--normal-form", check_nf, "filter to the normal form first");

  CLI::App* scan = app.add_subcommand(
      "scan", "bisect the noise threshold of a criterion on a family");
  add_state_options(scan, scan_opt);
  scan->add_option("--criterion", scan_criterion, "cm|gcm|lur|ppt|ccnr|all");
  scan->add_flag("--normal-form", scan_nf, "filter to the normal form first");
  scan->add_option("--p-lo", scan_lo, "lower end of the weight interval");
  scan->add_option("--p-hi", scan_hi, "upper end of the weight interval");
  scan->add_option("--tol", scan_tol, "bisection width target");

  CLI::App* nf = app.add_subcommand("nf", "compute the filtering normal form");
  add_state_options(nf, nf_opt);
  nf->add_option("--tol", nf_tol, "residual target");
  nf->add_option("--max-sweeps", nf_max_sweeps, "sweep limit");

  CLI::App* wit = app.add_subcommand(
      "witness", "build an entanglement witness (adapted or canonical)");
  add_state_options(wit, wit_opt);
  wit->add_flag("--canonical", wit_canonical,
                "canonical LOO witness instead of a state-adapted one");
  std::vector<int> wit_multi;
  wit->add_option("--canonical-multi", wit_multi,
                  "canonical witness over these local dimensions")
      ->delimiter(',');
  wit->add_option("--from-state", wit_opt.file, "alias for --file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) {
      return run_check(check_opt, check_criterion, check_nf, as_json,
                       out_path);
    }
    if (scan->parsed()) {
      return run_scan(scan_opt, scan_criterion, scan_nf, scan_lo, scan_hi,
                      scan_tol, as_json, out_path);
    }
    if (nf->parsed()) {
      return run_nf(nf_opt, nf_tol, nf_max_sweeps, as_json, out_path);
    }
    if (wit->parsed()) {
      if (!wit_multi.empty()) {
        wit_canonical = true;
        wit_opt.dims = wit_multi;
      }
      return run_witness(wit_opt, wit_canonical, as_json, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
