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

#include <string>
#include <vector>

#include "sepscan/basis.hpp"
#include "sepscan/linalg.hpp"

namespace sepscan {

/// Entanglement witness W = I - alpha * sum_k (x)_i G^(i)_k, Hermitian on the
/// full Hilbert space, with Tr(W rho) >= 0 for every fully separable rho.
struct Witness {
  Mat matrix;
  std::vector<int> full_dims;
  std::vector<int> subset;  // parties the LOO construction acts on
  double alpha = 0.0;       // prefactor in front of the LOO sum
  double min_eigenvalue = 0.0;
  std::string loo_provenance;
};

/// Bipartite witness from explicit LOO sets (the shorter set is zero-padded):
/// W = I - alpha sum_k G^A_k x G^B_k with
/// alpha = sqrt(MN) / (sqrt((M-1)(N-1)) + 1).
Witness bipartite_witness(const LooSet& loos_a, const LooSet& loos_b);

/// Bipartite witness whose LOOs are rotated into the singular bases of the
/// state's correlation matrix, so that Tr(W rho) < 0 whenever the
/// correlation-matrix criterion detects rho. Throws NotDetected otherwise.
Witness witness_from_state(const DensityMatrix& rho);

/// Multipartite witness over a party subset, identity on the other parties:
/// W = I - beta sum_k G^(1)_k x ... x G^(m)_k with
/// beta = sqrt(prod d_i) / (1 + sqrt(prod (d_i - 1))). Every LOO set is
/// zero-padded to max_i d_i^2 observables.
Witness multipartite_witness(const std::vector<int>& subset,
                             const std::vector<LooSet>& loos,
                             const std::vector<int>& full_dims);

/// Tr(W rho), real within the policy imaginary-residue tolerance.
double expectation(const Witness& w, const DensityMatrix& rho);

/// Smallest eigenvalue of the witness matrix.
double min_eig(const Witness& w);

}  // namespace sepscan
