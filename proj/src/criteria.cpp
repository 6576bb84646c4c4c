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

#include "sepscan/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "sepscan/bloch.hpp"
#include "sepscan/normalform.hpp"

namespace sepscan {

namespace {

CriterionVerdict make_verdict(std::string criterion, double statistic,
                              double bound,
                              std::optional<std::vector<int>> subset) {
  CriterionVerdict v;
  v.criterion = std::move(criterion);
  v.statistic = statistic;
  v.bound = bound;
  v.margin = statistic - bound;
  v.detected = v.margin > 0.0;
  v.subset = std::move(subset);
  return v;
}

// Apply the normal form when requested; verdicts keep the flag.
DensityMatrix nf_target(const DensityMatrix& rho) {
  NormalFormResult result = normal_form(rho);
  if (!result.converged) {
    throw Error(ErrorCode::NoConvergence,
                "normal form did not converge within the sweep limit");
  }
  return result.nf;
}

void require_bipartite(const DensityMatrix& rho, const char* who) {
  if (rho.parties() != 2) {
    throw Error(ErrorCode::BadSubset,
                std::string(who) + ": state must be bipartite");
  }
}

double real_expect(const Mat& rho, const Mat& op) {
  cplx val = (rho * op).trace();
  if (std::abs(val.imag()) > policy().imag_tol) {
    throw Error(ErrorCode::NotHermitian,
                "expectation has imaginary residue " +
                    std::to_string(val.imag()));
  }
  return val.real();
}

}  // namespace

double cm_kf_bound(int m, int n) {
  if (m < 2 || n < 2) {
    throw Error(ErrorCode::BadDimension, "cm_kf_bound: dims must be >= 2");
  }
  return std::sqrt(static_cast<double>(m) * n * (m - 1) * (n - 1));
}

double gcm_kf_bound(const std::vector<int>& dims) {
  if (dims.size() < 2) {
    throw Error(ErrorCode::BadDimension,
                "gcm_kf_bound: need >= 2 local dimensions");
  }
  double prod = 1.0;
  for (int d : dims) {
    if (d < 2) {
      throw Error(ErrorCode::BadDimension, "gcm_kf_bound: dims must be >= 2");
    }
    prod *= 0.5 * d * (d - 1);
  }
  return std::sqrt(prod);
}

CriterionVerdict cm_bipartite(const DensityMatrix& rho, bool use_nf) {
  require_bipartite(rho, "cm_bipartite");
  if (use_nf) {
    CriterionVerdict v = cm_bipartite(nf_target(rho), false);
    v.used_normal_form = true;
    return v;
  }
  RMat t = correlation_matrix(rho);
  return make_verdict("cm", trace_norm(t),
                      cm_kf_bound(rho.dims()[0], rho.dims()[1]),
                      std::nullopt);
}

CriterionVerdict cm_general(const DensityMatrix& rho,
                            const std::vector<int>& subset, bool use_nf) {
  if (use_nf) {
    CriterionVerdict v = cm_general(nf_target(rho), subset, false);
    v.used_normal_form = true;
    return v;
  }
  CorrelationTensor t = correlation_tensor(rho, subset);
  std::vector<int> sub_dims;
  for (int p : subset) sub_dims.push_back(rho.dims()[p]);
  return make_verdict("gcm", tensor_kf_norm(t), gcm_kf_bound(sub_dims),
                      subset);
}

std::vector<CriterionVerdict> cm_all_subsets(const DensityMatrix& rho,
                                             bool use_nf) {
  const int parties = rho.parties();
  if (parties < 2) {
    throw Error(ErrorCode::BadSubset, "cm_all_subsets: need >= 2 parties");
  }
  DensityMatrix target = use_nf ? nf_target(rho) : rho;
  std::vector<std::vector<int>> subsets;
  for (long mask = 1; mask < (1L << parties); ++mask) {
    std::vector<int> subset;
    for (int p = 0; p < parties; ++p) {
      if (mask & (1L << p)) subset.push_back(p);
    }
    if (subset.size() >= 2) subsets.push_back(std::move(subset));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  std::vector<CriterionVerdict> verdicts;
  for (const std::vector<int>& subset : subsets) {
    CriterionVerdict v = cm_general(target, subset, false);
    v.used_normal_form = use_nf;
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

CriterionVerdict lur_check(const DensityMatrix& rho, const LooSet& loos_a,
                           const LooSet& loos_b) {
  require_bipartite(rho, "lur_check");
  validate_loos(loos_a);
  validate_loos(loos_b);
  const int m = rho.dims()[0];
  const int n = rho.dims()[1];
  if (loos_a.dim != m || loos_b.dim != n) {
    throw Error(ErrorCode::DimMismatch,
                "lur_check: LOO dimensions do not match the state");
  }
  const int count = std::max(m * m, n * n);
  std::vector<Mat> ga = pad_observables(loos_a.observables, count);
  std::vector<Mat> gb = pad_observables(loos_b.observables, count);

  Mat id_a = Mat::Identity(m, m);
  Mat id_b = Mat::Identity(n, n);
  double sum = 0.0;
  for (int k = 0; k < count; ++k) {
    double joint = real_expect(rho.mat(), kron(ga[k], gb[k]));
    double ea = real_expect(rho.mat(), kron(ga[k], id_b));
    double eb = real_expect(rho.mat(), kron(id_a, gb[k]));
    sum += joint + 0.5 * (ea - eb) * (ea - eb);
  }
  // Separable states obey sum <= 1; report statistic = sum - 1 against 0.
  return make_verdict("lur", sum - 1.0, 0.0, std::nullopt);
}

CriterionVerdict lur_check(const DensityMatrix& rho) {
  require_bipartite(rho, "lur_check");
  const int m = rho.dims()[0];
  const int n = rho.dims()[1];
  RMat t = correlation_matrix(rho);
  SvdResult decomp = svd(t);
  LooSet loos_a = rotate_loos(loo_set(m), RMat(decomp.u.transpose()));
  LooSet loos_b = rotate_loos(loo_set(n), RMat(decomp.v.transpose()));
  return lur_check(rho, loos_a, loos_b);
}

LurNfBounds lur_nf_bound_check(int m, int n) {
  if (m < 2 || n < 2) {
    throw Error(ErrorCode::BadDimension,
                "lur_nf_bound_check: dims must be >= 2");
  }
  LurNfBounds out;
  out.cm_bound = cm_kf_bound(m, n);
  out.lur_bound = static_cast<double>(m) * n - 0.5 * (m + n);
  out.cm_le_lur = out.cm_bound <= out.lur_bound + 1e-12;
  return out;
}

CriterionVerdict ppt_check(const DensityMatrix& rho, int party) {
  if (party < 0 || party >= rho.parties()) {
    throw Error(ErrorCode::BadSubset, "ppt_check: party out of range");
  }
  Mat pt = partial_transpose(rho, party);
  double min_eig = herm_eig(pt).eigenvalues.minCoeff();
  // statistic = -(most negative eigenvalue); the bound absorbs round-off so
  // exact-boundary spectra do not flip the verdict.
  return make_verdict("ppt", -min_eig, policy().psd_tol,
                      std::vector<int>{party});
}

CriterionVerdict realignment_check(const DensityMatrix& rho) {
  require_bipartite(rho, "realignment_check");
  return make_verdict("ccnr", trace_norm(realign(rho)), 1.0, std::nullopt);
}

std::vector<CriterionVerdict> evaluate_criterion(const DensityMatrix& rho,
                                                 const std::string& criterion,
                                                 bool use_nf) {
  static const std::vector<std::string> known = {"cm", "gcm", "lur",
                                                 "ppt", "ccnr", "all"};
  if (std::find(known.begin(), known.end(), criterion) == known.end()) {
    throw Error(ErrorCode::BadParameter,
                "unknown criterion '" + criterion + "'");
  }
  const bool bipartite = rho.parties() == 2;
  if (!bipartite && (criterion == "cm" || criterion == "lur" ||
                     criterion == "ccnr")) {
    throw Error(ErrorCode::BadSubset,
                "criterion '" + criterion + "' needs a bipartite state");
  }

  DensityMatrix target = use_nf ? nf_target(rho) : rho;
  std::vector<CriterionVerdict> verdicts;
  auto add = [&](CriterionVerdict v) {
    v.used_normal_form = use_nf;
    verdicts.push_back(std::move(v));
  };

  if (criterion == "cm" || (criterion == "all" && bipartite)) {
    add(cm_bipartite(target, false));
  }
  if (criterion == "gcm" || criterion == "all") {
    for (CriterionVerdict& v : cm_all_subsets(target, false)) {
      add(std::move(v));
    }
  }
  if (criterion == "lur" || (criterion == "all" && bipartite)) {
    add(lur_check(target));
  }
  if (criterion == "ppt" || criterion == "all") {
    for (int p = 0; p < rho.parties(); ++p) add(ppt_check(target, p));
  }
  if (criterion == "ccnr" || (criterion == "all" && bipartite)) {
    add(realignment_check(target));
  }
  return verdicts;
}

double scan_threshold(const std::function<DensityMatrix(double)>& family,
                      const std::string& criterion, bool use_nf, double p_lo,
                      double p_hi, double tol) {
  if (!(p_lo < p_hi) || !(tol > 0.0)) {
    throw Error(ErrorCode::BadParameter,
                "scan_threshold: need p_lo < p_hi and tol > 0");
  }
  auto detects = [&](double p) {
    std::vector<CriterionVerdict> verdicts =
        evaluate_criterion(family(p), criterion, use_nf);
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const CriterionVerdict& v) { return v.detected; });
  };
  bool lo_det = detects(p_lo);
  bool hi_det = detects(p_hi);
  if (lo_det == hi_det) {
    throw Error(ErrorCode::NoSignChange,
                "scan_threshold: detection is identical at both endpoints");
  }
  double lo = p_lo, hi = p_hi;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (detects(mid) == hi_det) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace sepscan
