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

#include "sepscan/report.hpp"

#include <cmath>
#include <ctime>
#include <fstream>

#include "sepscan/version.hpp"

namespace sepscan {

json state_to_json(const DensityMatrix& rho) {
  json j;
  j["dims"] = rho.dims();
  std::vector<double> re, im;
  const long total = rho.total_dim();
  re.reserve(total * total);
  im.reserve(total * total);
  for (long r = 0; r < total; ++r) {
    for (long c = 0; c < total; ++c) {
      re.push_back(rho.mat()(r, c).real());
      im.push_back(rho.mat()(r, c).imag());
    }
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

DensityMatrix state_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("dims") || !j.contains("re") ||
        !j.contains("im")) {
      throw Error(ErrorCode::BadStateFile,
                  "state file needs 'dims', 're' and 'im' fields");
    }
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    std::vector<double> re = j.at("re").get<std::vector<double>>();
    std::vector<double> im = j.at("im").get<std::vector<double>>();
    long total = 1;
    for (int d : dims) {
      if (d < 2) {
        throw Error(ErrorCode::BadStateFile, "local dimensions must be >= 2");
      }
      total *= d;
    }
    if (static_cast<long>(re.size()) != total * total ||
        static_cast<long>(im.size()) != total * total) {
      throw Error(ErrorCode::BadStateFile,
                  "'re' and 'im' must hold dim^2 row-major entries");
    }
    Mat m(total, total);
    for (long r = 0; r < total; ++r) {
      for (long c = 0; c < total; ++c) {
        double x = re[r * total + c];
        double y = im[r * total + c];
        if (!std::isfinite(x) || !std::isfinite(y)) {
          throw Error(ErrorCode::BadStateFile, "entries must be finite");
        }
        m(r, c) = cplx(x, y);
      }
    }
    return DensityMatrix(std::move(dims), std::move(m));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadStateFile) throw;
    // Validation failures on loaded data are file errors for callers.
    throw Error(ErrorCode::BadStateFile, e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadStateFile, e.what());
  }
}

DensityMatrix load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::BadStateFile, "cannot open '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadStateFile,
                "cannot parse '" + path + "': " + e.what());
  }
  return state_from_json(j);
}

void save_state_file(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::BadStateFile, "cannot write '" + path + "'");
  }
  out << state_to_json(rho).dump(2) << "\n";
}

json verdict_to_json(const CriterionVerdict& v) {
  json j;
  j["criterion"] = v.criterion;
  j["statistic"] = v.statistic;
  j["bound"] = v.bound;
  j["margin"] = v.margin;
  j["detected"] = v.detected;
  j["used_normal_form"] = v.used_normal_form;
  if (v.subset) {
    j["subset"] = *v.subset;
  } else {
    j["subset"] = nullptr;
  }
  return j;
}

json nf_to_json(const NormalFormResult& r) {
  json j;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["residual"] = r.residual;
  j["objective_trace"] = r.objective_trace;
  j["state"] = state_to_json(r.nf);
  json filters = json::array();
  for (const Mat& f : r.filters) {
    json one;
    std::vector<double> re, im;
    for (long i = 0; i < f.rows(); ++i) {
      for (long k = 0; k < f.cols(); ++k) {
        re.push_back(f(i, k).real());
        im.push_back(f(i, k).imag());
      }
    }
    one["dim"] = f.rows();
    one["re"] = std::move(re);
    one["im"] = std::move(im);
    filters.push_back(std::move(one));
  }
  j["filters"] = std::move(filters);
  return j;
}

json witness_to_json(const Witness& w) {
  json j;
  j["full_dims"] = w.full_dims;
  j["subset"] = w.subset;
  j["alpha"] = w.alpha;
  j["min_eigenvalue"] = w.min_eigenvalue;
  j["loo_provenance"] = w.loo_provenance;
  std::vector<double> re, im;
  for (long r = 0; r < w.matrix.rows(); ++r) {
    for (long c = 0; c < w.matrix.cols(); ++c) {
      re.push_back(w.matrix(r, c).real());
      im.push_back(w.matrix(r, c).imag());
    }
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

json policy_to_json() {
  const NumericPolicy& p = policy();
  json j;
  j["herm_tol"] = p.herm_tol;
  j["trace_tol"] = p.trace_tol;
  j["psd_tol"] = p.psd_tol;
  j["imag_tol"] = p.imag_tol;
  j["ortho_tol"] = p.ortho_tol;
  j["loo_tol"] = p.loo_tol;
  j["singular_floor"] = p.singular_floor;
  j["rank_floor"] = p.rank_floor;
  j["nf_tol"] = p.nf_tol;
  j["bloch_nf_tol"] = p.bloch_nf_tol;
  return j;
}

json report_skeleton(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["version"] = kVersion;
  j["command"] = command;
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  j["timestamp"] = buf;
  j["policy"] = policy_to_json();
  return j;
}

}  // namespace sepscan
