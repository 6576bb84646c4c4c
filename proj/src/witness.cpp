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

#include "sepscan/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sepscan/bloch.hpp"
#include "sepscan/criteria.hpp"

namespace sepscan {

namespace {

std::string join_ints(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Witness bipartite_witness(const LooSet& loos_a, const LooSet& loos_b) {
  validate_loos(loos_a);
  validate_loos(loos_b);
  const int m = loos_a.dim;
  const int n = loos_b.dim;
  const int count = std::max(m * m, n * n);
  std::vector<Mat> ga = pad_observables(loos_a.observables, count);
  std::vector<Mat> gb = pad_observables(loos_b.observables, count);

  const double alpha =
      std::sqrt(static_cast<double>(m) * n) /
      (std::sqrt(static_cast<double>(m - 1) * (n - 1)) + 1.0);
  Mat w = Mat::Identity(static_cast<long>(m) * n, static_cast<long>(m) * n);
  for (int k = 0; k < count; ++k) w -= alpha * kron(ga[k], gb[k]);

  Witness out;
  out.matrix = std::move(w);
  out.full_dims = {m, n};
  out.subset = {0, 1};
  out.alpha = alpha;
  out.min_eigenvalue = herm_eig(out.matrix).eigenvalues.minCoeff();
  out.loo_provenance = "explicit LOO pair on " + join_ints(out.full_dims, "x");
  return out;
}

Witness witness_from_state(const DensityMatrix& rho) {
  if (rho.parties() != 2) {
    throw Error(ErrorCode::BadSubset,
                "witness_from_state: state must be bipartite");
  }
  CriterionVerdict verdict = cm_bipartite(rho, false);
  if (!verdict.detected) {
    throw Error(ErrorCode::NotDetected,
                "witness_from_state: correlation-matrix criterion does not "
                "detect this state (margin " +
                    std::to_string(verdict.margin) + ")");
  }
  // Rotate the canonical LOOs into the singular bases of T = U S V^T; the
  // witness expectation then contracts T to -sum of singular values.
  SvdResult decomp = svd(correlation_matrix(rho));
  LooSet loos_a =
      rotate_loos(loo_set(rho.dims()[0]), RMat(decomp.u.transpose()));
  LooSet loos_b =
      rotate_loos(loo_set(rho.dims()[1]), RMat(decomp.v.transpose()));
  Witness out = bipartite_witness(loos_a, loos_b);
  out.loo_provenance =
      "LOOs adapted to the state correlation matrix (SVD bases)";
  return out;
}

Witness multipartite_witness(const std::vector<int>& subset,
                             const std::vector<LooSet>& loos,
                             const std::vector<int>& full_dims) {
  const int parties = static_cast<int>(full_dims.size());
  if (subset.size() < 2) {
    throw Error(ErrorCode::BadSubset,
                "multipartite_witness: subset needs >= 2 parties");
  }
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= parties) {
      throw Error(ErrorCode::BadSubset,
                  "multipartite_witness: party index out of range");
    }
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw Error(ErrorCode::BadSubset,
                  "multipartite_witness: subset must be strictly increasing");
    }
  }
  if (loos.size() != subset.size()) {
    throw Error(ErrorCode::BadLoo,
                "multipartite_witness: one LOO set per subset party required");
  }
  long total = 1;
  for (int d : full_dims) {
    if (d < 2) {
      throw Error(ErrorCode::BadDimension,
                  "multipartite_witness: dims must be >= 2");
    }
    total *= d;
  }
  int count = 0;
  double prod_d = 1.0, prod_dm1 = 1.0;
  for (size_t i = 0; i < subset.size(); ++i) {
    validate_loos(loos[i]);
    const int d = full_dims[subset[i]];
    if (loos[i].dim != d) {
      throw Error(ErrorCode::DimMismatch,
                  "multipartite_witness: LOO dimension does not match party");
    }
    count = std::max(count, d * d);
    prod_d *= d;
    prod_dm1 *= d - 1.0;
  }
  const double beta = std::sqrt(prod_d) / (1.0 + std::sqrt(prod_dm1));

  std::vector<std::vector<Mat>> padded;
  for (const LooSet& l : loos) {
    padded.push_back(pad_observables(l.observables, count));
  }

  Mat w = Mat::Identity(total, total);
  for (int k = 0; k < count; ++k) {
    std::vector<Mat> factors;
    factors.reserve(parties);
    for (int p = 0; p < parties; ++p) {
      auto it = std::find(subset.begin(), subset.end(), p);
      if (it == subset.end()) {
        factors.push_back(Mat::Identity(full_dims[p], full_dims[p]));
      } else {
        factors.push_back(padded[it - subset.begin()][k]);
      }
    }
    w -= beta * kron(factors);
  }

  Witness out;
  out.matrix = std::move(w);
  out.full_dims = full_dims;
  out.subset = subset;
  out.alpha = beta;
  out.min_eigenvalue = herm_eig(out.matrix).eigenvalues.minCoeff();
  out.loo_provenance = "explicit LOO sets on parties {" +
                       join_ints(subset, ",") + "} of " +
                       join_ints(full_dims, "x");
  return out;
}

double expectation(const Witness& w, const DensityMatrix& rho) {
  if (rho.dims() != w.full_dims) {
    throw Error(ErrorCode::DimMismatch,
                "expectation: state dims do not match the witness");
  }
  cplx val = (rho.mat() * w.matrix).trace();
  if (std::abs(val.imag()) > policy().imag_tol) {
    throw Error(ErrorCode::NotHermitian,
                "expectation: imaginary residue " +
                    std::to_string(val.imag()));
  }
  return val.real();
}

double min_eig(const Witness& w) {
  return herm_eig(w.matrix).eigenvalues.minCoeff();
}

}  // namespace sepscan
