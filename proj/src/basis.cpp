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

#include "sepscan/basis.hpp"

#include <cmath>
#include <string>

namespace sepscan {

OperatorBasis gellmann(int dim, double norm_constant) {
  if (dim < 2) {
    throw Error(ErrorCode::BadDimension,
                "gellmann: dim must be >= 2, got " + std::to_string(dim));
  }
  if (!(norm_constant > 0.0)) {
    throw Error(ErrorCode::BadParameter,
                "gellmann: norm constant must be positive");
  }
  // The unscaled operators below satisfy Tr(x^2) = 2.
  const double scale = std::sqrt(norm_constant / 2.0);
  OperatorBasis basis;
  basis.dim = dim;
  basis.norm_constant = norm_constant;

  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      Mat m = Mat::Zero(dim, dim);
      m(j, k) = cplx(1.0, 0.0);
      m(k, j) = cplx(1.0, 0.0);
      basis.ops.push_back(scale * m);
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      Mat m = Mat::Zero(dim, dim);
      m(j, k) = cplx(0.0, -1.0);
      m(k, j) = cplx(0.0, 1.0);
      basis.ops.push_back(scale * m);
    }
  }
  for (int l = 1; l < dim; ++l) {
    Mat m = Mat::Zero(dim, dim);
    const double w = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int j = 0; j < l; ++j) m(j, j) = cplx(w, 0.0);
    m(l, l) = cplx(-w * l, 0.0);
    basis.ops.push_back(scale * m);
  }
  return basis;
}

LooSet loo_set(int dim) {
  LooSet loos;
  loos.dim = dim;
  loos.observables.push_back(Mat::Identity(dim, dim) / std::sqrt(dim));
  OperatorBasis basis = gellmann(dim, 1.0);
  for (Mat& m : basis.ops) loos.observables.push_back(std::move(m));
  return loos;
}

void validate_loos(const LooSet& loos) {
  const int d = loos.dim;
  if (d < 2 ||
      loos.observables.size() != static_cast<size_t>(d) * d) {
    throw Error(ErrorCode::BadLoo,
                "LOO set must contain d^2 observables of dimension d >= 2");
  }
  Mat id_scaled = Mat::Identity(d, d) / std::sqrt(d);
  if ((loos.observables[0] - id_scaled).cwiseAbs().maxCoeff() >
      policy().loo_tol) {
    throw Error(ErrorCode::BadLoo, "element 0 must equal I/sqrt(d)");
  }
  const size_t n = loos.observables.size();
  for (size_t k = 0; k < n; ++k) {
    const Mat& gk = loos.observables[k];
    if (gk.rows() != d || gk.cols() != d) {
      throw Error(ErrorCode::BadLoo, "observable has wrong dimension");
    }
    if ((gk - gk.adjoint()).cwiseAbs().maxCoeff() > policy().herm_tol) {
      throw Error(ErrorCode::BadLoo, "observable is not Hermitian");
    }
    for (size_t l = k; l < n; ++l) {
      cplx g = (gk * loos.observables[l]).trace();
      double want = (k == l) ? 1.0 : 0.0;
      if (std::abs(g - cplx(want, 0.0)) > policy().loo_tol) {
        throw Error(ErrorCode::BadLoo,
                    "Gram matrix deviates from identity at (" +
                        std::to_string(k) + "," + std::to_string(l) + ")");
      }
    }
  }
}

LooSet rotate_loos(const LooSet& loos, const RMat& r) {
  validate_loos(loos);
  const int n = loos.dim * loos.dim - 1;
  if (r.rows() != n || r.cols() != n) {
    throw Error(ErrorCode::DimMismatch,
                "rotate_loos: rotation must be (d^2-1) x (d^2-1)");
  }
  RMat dev = r * r.transpose() - RMat::Identity(n, n);
  if (dev.cwiseAbs().maxCoeff() > policy().ortho_tol) {
    throw Error(ErrorCode::NotOrthogonal,
                "rotate_loos: r r^T deviates from identity by " +
                    std::to_string(dev.cwiseAbs().maxCoeff()));
  }
  LooSet out;
  out.dim = loos.dim;
  out.observables.push_back(loos.observables[0]);
  for (int k = 0; k < n; ++k) {
    Mat g = Mat::Zero(loos.dim, loos.dim);
    for (int l = 0; l < n; ++l) g += r(k, l) * loos.observables[l + 1];
    out.observables.push_back(std::move(g));
  }
  return out;
}

std::vector<Mat> pad_observables(const std::vector<Mat>& observables,
                                 int count) {
  if (observables.empty()) {
    throw Error(ErrorCode::BadParameter, "pad_observables: empty input");
  }
  if (count < static_cast<int>(observables.size())) {
    throw Error(ErrorCode::BadParameter,
                "pad_observables: count smaller than the input set");
  }
  std::vector<Mat> out = observables;
  const long d = observables[0].rows();
  while (static_cast<int>(out.size()) < count) {
    out.push_back(Mat::Zero(d, d));
  }
  return out;
}

}  // namespace sepscan
