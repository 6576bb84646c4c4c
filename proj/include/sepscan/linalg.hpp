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

#include "sepscan/numeric.hpp"

namespace sepscan {

/// A validated multipartite density matrix.
///
/// Index convention: basis states are ordered row-major with party 0 as the
/// most significant index, i.e. the flat index of |i_0 i_1 ... i_{N-1}> is
/// i_0*d_1*...*d_{N-1} + ... + i_{N-1}. This matches kron(party0, party1, ...)
/// throughout the library.
class DensityMatrix {
 public:
  /// Validates dims (each >= 2), squareness, Hermiticity, unit trace and
  /// positive semidefiniteness (within policy tolerances).
  DensityMatrix(std::vector<int> dims, Mat matrix);

  const std::vector<int>& dims() const { return dims_; }
  const Mat& mat() const { return mat_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  int total_dim() const { return static_cast<int>(mat_.rows()); }

 private:
  std::vector<int> dims_;
  Mat mat_;
};

struct EigResult {
  RVec eigenvalues;  // ascending
  Mat eigenvectors;  // columns, unitary
};

struct SvdResult {
  RVec singular_values;  // descending, non-negative
  RMat u;
  RMat v;  // m = u * diag(s) * v^T
};

/// Eigendecomposition of a Hermitian matrix (eigenvalues ascending).
EigResult herm_eig(const Mat& m);

/// m^p for positive-definite Hermitian m via its spectral decomposition.
Mat herm_power(const Mat& m, double p);

/// Full SVD of a real matrix (singular values descending).
SvdResult svd(const RMat& m);

/// Sum of singular values (Ky Fan / trace norm).
double trace_norm(const Mat& m);
double trace_norm(const RMat& m);

/// Kronecker product, left factor most significant.
Mat kron(const Mat& a, const Mat& b);
Mat kron(const std::vector<Mat>& factors);

/// Trace out every party not listed in keep (0-based, strictly increasing).
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

/// Transpose the indices of one party.
Mat partial_transpose(const DensityMatrix& rho, int party);

/// Realignment map for a bipartite matrix: the (i,j)/(k,l) block structure is
/// reshuffled so that R[(i,j),(k,l)] = m[(i,k),(j,l)] with i,j in [0,da) and
/// k,l in [0,db).
Mat realign(const Mat& m, int da, int db);
Mat realign(const DensityMatrix& rho);

}  // namespace sepscan
