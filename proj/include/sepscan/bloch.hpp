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

#include <vector>

#include "sepscan/basis.hpp"
#include "sepscan/linalg.hpp"

namespace sepscan {

/// Local Bloch vector of one party, v_a = (d/2) Tr(rho_party lambda_a),
/// stated in the Tr(lambda_k lambda_l) = 2 delta_kl convention.
struct BlochVector {
  int party = 0;
  RVec coefficients;  // length d^2 - 1
};

/// Dense real correlation tensor over a party subset. Entries are stored
/// row-major with the last mode fastest.
struct CorrelationTensor {
  std::vector<int> subset;      // strictly increasing party indices
  std::vector<int> mode_sizes;  // d_i^2 - 1 per mode
  std::vector<double> data;

  double at(const std::vector<int>& idx) const;
  long size() const { return static_cast<long>(data.size()); }
};

/// Bloch vector of one party's reduced state in the given basis.
BlochVector local_bloch(const DensityMatrix& rho, int party,
                        const OperatorBasis& basis);
BlochVector local_bloch(const DensityMatrix& rho, int party);

/// Bipartite correlation matrix T_ij = M N Tr(rho lambda_i x lambda_j) for
/// orthonormal (c = 1) bases.
RMat correlation_matrix(const DensityMatrix& rho, const OperatorBasis& basis_a,
                        const OperatorBasis& basis_b);
RMat correlation_matrix(const DensityMatrix& rho);

/// Correlation tensor over a party subset for c = 2 bases:
/// T_{a1..am} = (prod d_i / 2^m) Tr(rho_subset lambda_a1 x ... x lambda_am).
CorrelationTensor correlation_tensor(const DensityMatrix& rho,
                                     const std::vector<int>& subset,
                                     const std::vector<OperatorBasis>& bases);
CorrelationTensor correlation_tensor(const DensityMatrix& rho,
                                     const std::vector<int>& subset);

/// Mode-n unfolding (mode is 1-based). Rows run over the selected mode;
/// columns run over the remaining modes in ascending order, last fastest.
RMat unfold(const CorrelationTensor& t, int mode);

/// max_n || unfold(t, n) ||_tr, the matrixization Ky Fan norm of the tensor.
double tensor_kf_norm(const CorrelationTensor& t);

/// Rebuild a density matrix from complete Bloch data: one BlochVector per
/// party and one CorrelationTensor per party subset of size >= 2 (all in the
/// c = 2 convention). Throws IncompleteCoefficients when pieces are missing.
DensityMatrix reconstruct(const std::vector<int>& dims,
                          const std::vector<BlochVector>& blochs,
                          const std::vector<CorrelationTensor>& tensors);

}  // namespace sepscan
