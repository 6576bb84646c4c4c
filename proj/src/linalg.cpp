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

#include "sepscan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace sepscan {

namespace {

void require_square(const Mat& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::BadDimension,
                std::string(who) + ": matrix must be square and non-empty");
  }
}

void require_hermitian(const Mat& m, const char* who) {
  require_square(m, who);
  double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > policy().herm_tol) {
    throw Error(ErrorCode::NotHermitian,
                std::string(who) + ": |m - m^dag| = " + std::to_string(dev));
  }
}

// Strides of the row-major multi-index: party 0 most significant.
std::vector<long> index_strides(const std::vector<int>& dims) {
  std::vector<long> strides(dims.size());
  long acc = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    strides[i] = acc;
    acc *= dims[i];
  }
  return strides;
}

}  // namespace

DensityMatrix::DensityMatrix(std::vector<int> dims, Mat matrix)
    : dims_(std::move(dims)), mat_(std::move(matrix)) {
  if (dims_.empty()) {
    throw Error(ErrorCode::BadDimension, "density matrix needs >= 1 party");
  }
  long total = 1;
  for (int d : dims_) {
    if (d < 2) {
      throw Error(ErrorCode::BadDimension,
                  "each local dimension must be >= 2, got " +
                      std::to_string(d));
    }
    total *= d;
  }
  if (mat_.rows() != total || mat_.cols() != total) {
    throw Error(ErrorCode::DimMismatch,
                "matrix is " + std::to_string(mat_.rows()) + "x" +
                    std::to_string(mat_.cols()) + " but dims give " +
                    std::to_string(total));
  }
  require_hermitian(mat_, "DensityMatrix");
  double tr_dev = std::abs(mat_.trace() - cplx(1.0, 0.0));
  if (tr_dev > policy().trace_tol) {
    throw Error(ErrorCode::BadParameter,
                "trace deviates from 1 by " + std::to_string(tr_dev));
  }
  // Hermitian within tolerance; validate the spectrum of the symmetrized
  // matrix so round-off in the input cannot flip the PSD verdict.
  Mat sym = 0.5 * (mat_ + mat_.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.eigenvalues().minCoeff() < -policy().psd_tol) {
    throw Error(ErrorCode::BadParameter,
                "matrix has eigenvalue " +
                    std::to_string(es.eigenvalues().minCoeff()) +
                    " below -psd_tol");
  }
}

EigResult herm_eig(const Mat& m) {
  require_hermitian(m, "herm_eig");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NotHermitian, "herm_eig: eigensolver failed");
  }
  return EigResult{es.eigenvalues(), es.eigenvectors()};
}

Mat herm_power(const Mat& m, double p) {
  EigResult eig = herm_eig(m);
  double max_abs = eig.eigenvalues.cwiseAbs().maxCoeff();
  if (max_abs <= 0.0 ||
      eig.eigenvalues.minCoeff() <= policy().singular_floor * max_abs) {
    throw Error(ErrorCode::SingularMatrix,
                "herm_power: eigenvalue " +
                    std::to_string(eig.eigenvalues.minCoeff()) +
                    " at or below the singular floor");
  }
  RVec powered = eig.eigenvalues.array().pow(p);
  return eig.eigenvectors * powered.asDiagonal() *
         eig.eigenvectors.adjoint();
}

SvdResult svd(const RMat& m) {
  Eigen::JacobiSVD<RMat> solver(m,
                                Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdResult{solver.singularValues(), solver.matrixU(),
                   solver.matrixV()};
}

double trace_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> solver(m);
  return solver.singularValues().sum();
}

double trace_norm(const RMat& m) {
  Eigen::JacobiSVD<RMat> solver(m);
  return solver.singularValues().sum();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat kron(const std::vector<Mat>& factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::BadParameter, "kron: empty factor list");
  }
  Mat out = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

namespace {

void validate_subset(const std::vector<int>& subset, int parties,
                     const char* who, bool allow_full = true) {
  if (subset.empty()) {
    throw Error(ErrorCode::BadSubset, std::string(who) + ": empty subset");
  }
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= parties) {
      throw Error(ErrorCode::BadSubset,
                  std::string(who) + ": party index " +
                      std::to_string(subset[i]) + " out of range");
    }
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw Error(ErrorCode::BadSubset,
                  std::string(who) + ": subset must be strictly increasing");
    }
  }
  if (!allow_full && static_cast<int>(subset.size()) >= parties) {
    throw Error(ErrorCode::BadSubset,
                std::string(who) + ": subset must be proper");
  }
}

// Advance a mixed-radix counter; returns false after the last combination.
bool next_index(std::vector<int>& idx, const std::vector<int>& dims) {
  for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
    if (++idx[i] < dims[i]) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  const std::vector<int>& dims = rho.dims();
  const int parties = rho.parties();
  validate_subset(keep, parties, "partial_trace");

  std::vector<int> drop;
  for (int i = 0; i < parties; ++i) {
    if (std::find(keep.begin(), keep.end(), i) == keep.end())
      drop.push_back(i);
  }
  std::vector<long> strides = index_strides(dims);

  std::vector<int> keep_dims, drop_dims;
  for (int i : keep) keep_dims.push_back(dims[i]);
  for (int i : drop) drop_dims.push_back(dims[i]);
  long out_dim = 1;
  for (int d : keep_dims) out_dim *= d;

  // Flat offsets of the kept row/col multi-indices within the full index.
  auto offsets = [&strides](const std::vector<int>& parties_sel,
                            const std::vector<int>& sel_dims) {
    std::vector<long> out;
    std::vector<int> idx(sel_dims.size(), 0);
    if (sel_dims.empty()) return std::vector<long>{0};
    do {
      long off = 0;
      for (size_t i = 0; i < idx.size(); ++i)
        off += static_cast<long>(idx[i]) * strides[parties_sel[i]];
      out.push_back(off);
    } while (next_index(idx, sel_dims));
    return out;
  };
  std::vector<long> keep_off = offsets(keep, keep_dims);
  std::vector<long> drop_off = offsets(drop, drop_dims);

  Mat out = Mat::Zero(out_dim, out_dim);
  for (long r = 0; r < out_dim; ++r) {
    for (long c = 0; c < out_dim; ++c) {
      cplx sum(0.0, 0.0);
      for (long e : drop_off) sum += rho.mat()(keep_off[r] + e, keep_off[c] + e);
      out(r, c) = sum;
    }
  }
  return DensityMatrix(keep_dims, std::move(out));
}

Mat partial_transpose(const DensityMatrix& rho, int party) {
  const std::vector<int>& dims = rho.dims();
  if (party < 0 || party >= rho.parties()) {
    throw Error(ErrorCode::BadSubset,
                "partial_transpose: party " + std::to_string(party) +
                    " out of range");
  }
  std::vector<long> strides = index_strides(dims);
  const long stride = strides[party];
  const int d = dims[party];
  const long total = rho.total_dim();

  Mat out(total, total);
  for (long r = 0; r < total; ++r) {
    int rp = static_cast<int>((r / stride) % d);
    for (long c = 0; c < total; ++c) {
      int cp = static_cast<int>((c / stride) % d);
      // Swap the party's row and column digits.
      long rr = r + static_cast<long>(cp - rp) * stride;
      long cc = c + static_cast<long>(rp - cp) * stride;
      out(rr, cc) = rho.mat()(r, c);
    }
  }
  return out;
}

Mat realign(const Mat& m, int da, int db) {
  if (da < 2 || db < 2 || m.rows() != static_cast<long>(da) * db ||
      m.cols() != m.rows()) {
    throw Error(ErrorCode::DimMismatch,
                "realign: matrix does not factor as " + std::to_string(da) +
                    "x" + std::to_string(db));
  }
  Mat out(static_cast<long>(da) * da, static_cast<long>(db) * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      for (int k = 0; k < db; ++k) {
        for (int l = 0; l < db; ++l) {
          out(static_cast<long>(i) * da + j, static_cast<long>(k) * db + l) =
              m(static_cast<long>(i) * db + k, static_cast<long>(j) * db + l);
        }
      }
    }
  }
  return out;
}

Mat realign(const DensityMatrix& rho) {
  if (rho.parties() != 2) {
    throw Error(ErrorCode::BadSubset,
                "realign: defined for bipartite states only");
  }
  return realign(rho.mat(), rho.dims()[0], rho.dims()[1]);
}

}  // namespace sepscan
