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

#include <cstdint>
#include <random>
#include <vector>

#include "sepscan/linalg.hpp"

namespace sepscan {

/// Deterministic random stream. Gaussian draws use Box-Muller on top of
/// mt19937_64 so the sequence is identical across platforms and standard
/// library versions for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal.
  double gaussian();

  /// gaussian() + i * gaussian(), real part drawn first.
  cplx complex_gaussian();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Three-qubit edge-state family: corners of the 8x8 matrix set to 1 and
/// diagonal (1, a, b, c, 1/c, 1/b, 1/a, 1), normalized. PPT with respect to
/// every party yet entangled. Parameters must be positive.
DensityMatrix acin_edge(double a, double b, double c);

/// p * rho + (1 - p) * I/D for p in [0, 1].
DensityMatrix mix_noise(const DensityMatrix& rho, double p);

/// Two-qubit Bell state (|00> + |11>)/sqrt(2) as a density matrix.
DensityMatrix bell();

/// n-qubit GHZ state (|0...0> + |1...1>)/sqrt(2), n >= 2.
DensityMatrix ghz(int n_parties);

/// Isotropic state on d x d: p |phi+><phi+| + (1 - p) I/d^2 with the
/// maximally entangled |phi+> = sum_i |ii>/sqrt(d).
DensityMatrix isotropic(int d, double p);

/// Tensor product of the given states; dims are concatenated in order.
DensityMatrix product(const std::vector<DensityMatrix>& factors);

/// Full-rank random state: Ginibre matrix G, rho = G G^dag / Tr, then mixed
/// with white noise at weight 1e-3 to bound the condition number.
DensityMatrix random_full_rank(const std::vector<int>& dims,
                               std::uint64_t seed);

/// Random fully separable state: average of `terms` random pure product
/// states, mixed with white noise at weight 1e-3. terms >= 1.
DensityMatrix random_separable(const std::vector<int>& dims, int terms,
                               std::uint64_t seed);

}  // namespace sepscan
