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

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sepscan/basis.hpp"
#include "sepscan/linalg.hpp"

namespace sepscan {

/// Outcome of one separability test. `detected` means entanglement is
/// certified: statistic - bound > 0 strictly.
struct CriterionVerdict {
  std::string criterion;  // "cm", "gcm", "lur", "ppt" or "ccnr"
  double statistic = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // statistic - bound
  bool detected = false;
  bool used_normal_form = false;
  std::optional<std::vector<int>> subset;  // parties involved, if relevant
};

/// Separable bipartite bound for the correlation-matrix trace norm:
/// sqrt(M N (M-1)(N-1)).
double cm_kf_bound(int m, int n);

/// Separable bound for the correlation-tensor Ky Fan norm over local
/// dimensions d_1..d_m: sqrt(prod_i d_i (d_i - 1) / 2^m).
double gcm_kf_bound(const std::vector<int>& dims);

/// Correlation-matrix criterion on a bipartite state; use_nf filters to the
/// normal form first.
CriterionVerdict cm_bipartite(const DensityMatrix& rho, bool use_nf = false);

/// Correlation-tensor criterion on one party subset (size >= 2).
CriterionVerdict cm_general(const DensityMatrix& rho,
                            const std::vector<int>& subset,
                            bool use_nf = false);

/// cm_general over every subset of >= 2 parties, ordered by subset size then
/// lexicographically.
std::vector<CriterionVerdict> cm_all_subsets(const DensityMatrix& rho,
                                             bool use_nf = false);

/// Local-uncertainty-relation criterion with explicit LOO sets; the shorter
/// set is zero-padded. Detects when 1 - sum_k [ <G^A_k x G^B_k> +
/// (<G^A_k> - <G^B_k>)^2 / 2 ] is negative.
CriterionVerdict lur_check(const DensityMatrix& rho, const LooSet& loos_a,
                           const LooSet& loos_b);

/// LUR criterion with LOOs adapted to the state through the SVD of its
/// correlation matrix.
CriterionVerdict lur_check(const DensityMatrix& rho);

/// Bounds that the CM and LUR criteria place on sum_k xi_k for a bipartite
/// normal form: sqrt(M N (M-1)(N-1)) and M N - (M+N)/2.
struct LurNfBounds {
  double cm_bound = 0.0;
  double lur_bound = 0.0;
  bool cm_le_lur = false;
};
LurNfBounds lur_nf_bound_check(int m, int n);

/// Positive-partial-transpose test with respect to one party.
CriterionVerdict ppt_check(const DensityMatrix& rho, int party);

/// Realignment (CCNR) criterion on a bipartite state.
CriterionVerdict realignment_check(const DensityMatrix& rho);

/// Run a named criterion ("cm", "gcm", "lur", "ppt", "ccnr" or "all") and
/// collect every verdict it produces. With use_nf the normal form is computed
/// once and all verdicts are evaluated on it (NoConvergence on failure).
std::vector<CriterionVerdict> evaluate_criterion(const DensityMatrix& rho,
                                                 const std::string& criterion,
                                                 bool use_nf = false);

/// Bisect the noise weight at which `criterion` starts detecting family(p).
/// Requires the detection flag to differ between p_lo and p_hi.
double scan_threshold(const std::function<DensityMatrix(double)>& family,
                      const std::string& criterion, bool use_nf, double p_lo,
                      double p_hi, double tol);

}  // namespace sepscan
