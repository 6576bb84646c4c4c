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

#include "sepscan/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sepscan {

namespace {

constexpr double kNoiseFloor = 1e-3;  // white-noise weight in random states

long total_dim(const std::vector<int>& dims) {
  long total = 1;
  for (int d : dims) total *= d;
  return total;
}

Mat white_noise_mix(const Mat& m, long total, double eps) {
  return (1.0 - eps) * m +
         eps * Mat::Identity(total, total) / static_cast<double>(total);
}

}  // namespace

double Rng::uniform() {
  // Top 53 bits -> [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 is shifted into (0, 1] to keep the log finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

cplx Rng::complex_gaussian() {
  double re = gaussian();
  double im = gaussian();
  return cplx(re, im);
}

DensityMatrix acin_edge(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw Error(ErrorCode::BadParameter,
                "acin_edge: parameters must be positive");
  }
  Mat m = Mat::Zero(8, 8);
  const double diag[8] = {1.0, a, b, c, 1.0 / c, 1.0 / b, 1.0 / a, 1.0};
  for (int i = 0; i < 8; ++i) m(i, i) = diag[i];
  m(0, 7) = cplx(1.0, 0.0);
  m(7, 0) = cplx(1.0, 0.0);
  m /= m.trace();
  return DensityMatrix({2, 2, 2}, std::move(m));
}

DensityMatrix mix_noise(const DensityMatrix& rho, double p) {
  if (p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::BadParameter,
                "mix_noise: p must lie in [0, 1], got " + std::to_string(p));
  }
  const long total = rho.total_dim();
  Mat m = p * rho.mat() +
          (1.0 - p) * Mat::Identity(total, total) /
              static_cast<double>(total);
  return DensityMatrix(rho.dims(), std::move(m));
}

DensityMatrix bell() { return ghz(2); }

DensityMatrix ghz(int n_parties) {
  if (n_parties < 2) {
    throw Error(ErrorCode::BadParameter, "ghz: need >= 2 parties");
  }
  const long total = 1L << n_parties;
  Vec psi = Vec::Zero(total);
  psi(0) = cplx(std::numbers::sqrt2 / 2.0, 0.0);
  psi(total - 1) = psi(0);
  return DensityMatrix(std::vector<int>(n_parties, 2),
                       psi * psi.adjoint());
}

DensityMatrix isotropic(int d, double p) {
  if (d < 2) {
    throw Error(ErrorCode::BadDimension, "isotropic: d must be >= 2");
  }
  if (p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::BadParameter,
                "isotropic: p must lie in [0, 1], got " + std::to_string(p));
  }
  Vec psi = Vec::Zero(static_cast<long>(d) * d);
  for (int i = 0; i < d; ++i) {
    psi(static_cast<long>(i) * d + i) = cplx(1.0 / std::sqrt(d), 0.0);
  }
  Mat pure = psi * psi.adjoint();
  Mat m = p * pure + (1.0 - p) *
                         Mat::Identity(psi.size(), psi.size()) /
                         static_cast<double>(psi.size());
  return DensityMatrix({d, d}, std::move(m));
}

DensityMatrix product(const std::vector<DensityMatrix>& factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::BadParameter, "product: empty factor list");
  }
  std::vector<int> dims;
  std::vector<Mat> mats;
  for (const DensityMatrix& f : factors) {
    dims.insert(dims.end(), f.dims().begin(), f.dims().end());
    mats.push_back(f.mat());
  }
  return DensityMatrix(std::move(dims), kron(mats));
}

DensityMatrix random_full_rank(const std::vector<int>& dims,
                               std::uint64_t seed) {
  if (dims.empty()) {
    throw Error(ErrorCode::BadDimension, "random_full_rank: empty dims");
  }
  const long total = total_dim(dims);
  Rng rng(seed);
  // Entries row by row, real part before imaginary part.
  Mat g(total, total);
  for (long i = 0; i < total; ++i) {
    for (long j = 0; j < total; ++j) g(i, j) = rng.complex_gaussian();
  }
  Mat m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(dims, white_noise_mix(m, total, kNoiseFloor));
}

DensityMatrix random_separable(const std::vector<int>& dims, int terms,
                               std::uint64_t seed) {
  if (dims.empty()) {
    throw Error(ErrorCode::BadDimension, "random_separable: empty dims");
  }
  if (terms < 1) {
    throw Error(ErrorCode::BadParameter, "random_separable: terms must be >= 1");
  }
  const long total = total_dim(dims);
  Rng rng(seed);
  Mat sum = Mat::Zero(total, total);
  for (int t = 0; t < terms; ++t) {
    std::vector<Mat> factors;
    for (int d : dims) {
      Vec psi(d);
      for (int i = 0; i < d; ++i) psi(i) = rng.complex_gaussian();
      psi.normalize();
      factors.push_back(psi * psi.adjoint());
    }
    sum += kron(factors);
  }
  sum /= static_cast<double>(terms);
  return DensityMatrix(dims, white_noise_mix(sum, total, kNoiseFloor));
}

}  // namespace sepscan
