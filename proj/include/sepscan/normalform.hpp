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

#include <utility>
#include <vector>

#include "sepscan/linalg.hpp"

namespace sepscan {

/// Outcome of the local filtering iteration.
struct NormalFormResult {
  DensityMatrix nf;           // best iterate reached
  std::vector<Mat> filters;   // accumulated local filter per party
  int iterations = 0;         // completed sweeps
  bool converged = false;
  std::vector<double> objective_trace;  // f before sweep 1, then per sweep
  double residual = 0.0;      // max_i || rho_i - I/d_i ||_F at the iterate
};

/// f(tau_1..tau_N) = Tr[rho (tau_1 x ... x tau_N)] / prod_i det(tau_i)^(1/d_i)
/// for positive-definite Hermitian tau_i. The filtering iteration is exact
/// coordinate descent on this function.
double objective_f(const DensityMatrix& rho, const std::vector<Mat>& taus);

/// One filtering step on one party: F = |det rho_party|^(1/2d) rho_party^-1/2
/// applied to that party, then renormalized. Returns the new state and F.
std::pair<DensityMatrix, Mat> filter_once(const DensityMatrix& rho, int party);

/// Cyclic filtering sweeps until every single-party reduction is maximally
/// mixed within tol (Frobenius), or max_sweeps is reached. Requires a
/// full-rank input. Non-convergence is reported in the result, not thrown.
NormalFormResult normal_form(const DensityMatrix& rho,
                             double tol = policy().nf_tol,
                             int max_sweeps = 500);

/// Singular values (descending) of the correlation matrix of a bipartite
/// normal form. Throws NotNormalForm when a local Bloch vector is too large.
RVec xi_values(const DensityMatrix& nf);

}  // namespace sepscan
