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

#include "sepscan/numeric.hpp"

namespace sepscan {

/// Traceless Hermitian operator basis with a fixed normalization constant:
/// Tr(lambda_k lambda_l) = c * delta_kl.
struct OperatorBasis {
  int dim = 0;
  double norm_constant = 0.0;
  std::vector<Mat> ops;  // d^2 - 1 matrices, each dim x dim
};

/// Complete set of local orthogonal observables: d^2 Hermitian matrices with
/// Tr(G_k G_l) = delta_kl. Element 0 is I/sqrt(d); the rest are traceless.
struct LooSet {
  int dim = 0;
  std::vector<Mat> observables;  // d^2 matrices
};

/// Generalized Gell-Mann basis of su(d), ordered: symmetric pair operators
/// (lexicographic over j < k), antisymmetric pair operators (same order),
/// then the d-1 diagonal operators.
OperatorBasis gellmann(int dim, double norm_constant);

/// Canonical LOO set: I/sqrt(d) followed by gellmann(dim, 1).
LooSet loo_set(int dim);

/// Rotate the traceless part of an LOO set by an orthogonal matrix r of size
/// (d^2-1) x (d^2-1): G'_k = sum_l r(k,l) G_l. G_0 stays fixed.
LooSet rotate_loos(const LooSet& loos, const RMat& r);

/// Pad a list of observables with zero matrices up to `count` entries.
std::vector<Mat> pad_observables(const std::vector<Mat>& observables,
                                 int count);

/// Validate an LOO set: element count, G_0 = I/sqrt(d), and orthonormality
/// of the Gram matrix within policy().loo_tol. Throws BadLoo otherwise.
void validate_loos(const LooSet& loos);

}  // namespace sepscan
