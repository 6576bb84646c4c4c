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

#include "sepscan/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sepscan {

namespace {

// Tr(rho * op) with a guard on the imaginary residue; Hermitian pairs must
// give real expectations up to round-off.
double real_expectation(const Mat& rho, const Mat& op, const char* who) {
  cplx val = (rho * op).trace();
  if (std::abs(val.imag()) > policy().imag_tol) {
    throw Error(ErrorCode::NotHermitian,
                std::string(who) + ": expectation has imaginary residue " +
                    std::to_string(val.imag()));
  }
  return val.real();
}

void require_norm_constant(const OperatorBasis& basis, double want,
                           const char* who) {
  if (std::abs(basis.norm_constant - want) > 1e-12) {
    throw Error(ErrorCode::BadParameter,
                std::string(who) + ": basis must use norm constant " +
                    std::to_string(want));
  }
}

void require_subset(const std::vector<int>& subset, int parties,
                    const char* who) {
  if (subset.size() < 2) {
    throw Error(ErrorCode::BadSubset,
                std::string(who) + ": subset needs >= 2 parties");
  }
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= parties) {
      throw Error(ErrorCode::BadSubset,
                  std::string(who) + ": party index out of range");
    }
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw Error(ErrorCode::BadSubset,
                  std::string(who) + ": subset must be strictly increasing");
    }
  }
}

bool next_index(std::vector<int>& idx, const std::vector<int>& sizes) {
  for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
    if (++idx[i] < sizes[i]) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace

double CorrelationTensor::at(const std::vector<int>& idx) const {
  if (idx.size() != mode_sizes.size()) {
    throw Error(ErrorCode::BadSubset, "tensor index has wrong rank");
  }
  long flat = 0;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= mode_sizes[i]) {
      throw Error(ErrorCode::BadSubset, "tensor index out of range");
    }
    flat = flat * mode_sizes[i] + idx[i];
  }
  return data[flat];
}

BlochVector local_bloch(const DensityMatrix& rho, int party,
                        const OperatorBasis& basis) {
  if (party < 0 || party >= rho.parties()) {
    throw Error(ErrorCode::BadSubset,
                "local_bloch: party " + std::to_string(party) +
                    " out of range");
  }
  if (basis.dim != rho.dims()[party]) {
    throw Error(ErrorCode::DimMismatch,
                "local_bloch: basis dimension " + std::to_string(basis.dim) +
                    " does not match party dimension " +
                    std::to_string(rho.dims()[party]));
  }
  DensityMatrix red = partial_trace(rho, {party});
  const double d = basis.dim;
  BlochVector v;
  v.party = party;
  v.coefficients.resize(static_cast<long>(basis.ops.size()));
  for (size_t a = 0; a < basis.ops.size(); ++a) {
    v.coefficients[static_cast<long>(a)] =
        0.5 * d * real_expectation(red.mat(), basis.ops[a], "local_bloch");
  }
  return v;
}

BlochVector local_bloch(const DensityMatrix& rho, int party) {
  if (party < 0 || party >= rho.parties()) {
    throw Error(ErrorCode::BadSubset, "local_bloch: party out of range");
  }
  return local_bloch(rho, party, gellmann(rho.dims()[party], 2.0));
}

RMat correlation_matrix(const DensityMatrix& rho, const OperatorBasis& basis_a,
                        const OperatorBasis& basis_b) {
  if (rho.parties() != 2) {
    throw Error(ErrorCode::BadSubset,
                "correlation_matrix: state must be bipartite");
  }
  require_norm_constant(basis_a, 1.0, "correlation_matrix");
  require_norm_constant(basis_b, 1.0, "correlation_matrix");
  const int m = rho.dims()[0];
  const int n = rho.dims()[1];
  if (basis_a.dim != m || basis_b.dim != n) {
    throw Error(ErrorCode::DimMismatch,
                "correlation_matrix: basis dimensions do not match state");
  }
  RMat t(m * m - 1, n * n - 1);
  for (int i = 0; i < m * m - 1; ++i) {
    for (int j = 0; j < n * n - 1; ++j) {
      t(i, j) = static_cast<double>(m) * n *
                real_expectation(rho.mat(),
                                 kron(basis_a.ops[i], basis_b.ops[j]),
                                 "correlation_matrix");
    }
  }
  return t;
}

RMat correlation_matrix(const DensityMatrix& rho) {
  if (rho.parties() != 2) {
    throw Error(ErrorCode::BadSubset,
                "correlation_matrix: state must be bipartite");
  }
  return correlation_matrix(rho, gellmann(rho.dims()[0], 1.0),
                            gellmann(rho.dims()[1], 1.0));
}

CorrelationTensor correlation_tensor(const DensityMatrix& rho,
                                     const std::vector<int>& subset,
                                     const std::vector<OperatorBasis>& bases) {
  require_subset(subset, rho.parties(), "correlation_tensor");
  if (bases.size() != subset.size()) {
    throw Error(ErrorCode::DimMismatch,
                "correlation_tensor: one basis per subset party required");
  }
  double prefactor = 1.0;
  std::vector<int> sizes;
  for (size_t i = 0; i < subset.size(); ++i) {
    const int d = rho.dims()[subset[i]];
    require_norm_constant(bases[i], 2.0, "correlation_tensor");
    if (bases[i].dim != d) {
      throw Error(ErrorCode::DimMismatch,
                  "correlation_tensor: basis dimension does not match party");
    }
    prefactor *= 0.5 * d;
    sizes.push_back(d * d - 1);
  }

  DensityMatrix red = partial_trace(rho, subset);
  CorrelationTensor t;
  t.subset = subset;
  t.mode_sizes = sizes;
  long total = 1;
  for (int s : sizes) total *= s;
  t.data.resize(total);

  std::vector<int> idx(subset.size(), 0);
  long flat = 0;
  do {
    std::vector<Mat> factors;
    factors.reserve(subset.size());
    for (size_t i = 0; i < subset.size(); ++i) {
      factors.push_back(bases[i].ops[idx[i]]);
    }
    t.data[flat++] = prefactor * real_expectation(red.mat(), kron(factors),
                                                  "correlation_tensor");
  } while (next_index(idx, sizes));
  return t;
}

CorrelationTensor correlation_tensor(const DensityMatrix& rho,
                                     const std::vector<int>& subset) {
  require_subset(subset, rho.parties(), "correlation_tensor");
  std::vector<OperatorBasis> bases;
  for (int p : subset) bases.push_back(gellmann(rho.dims()[p], 2.0));
  return correlation_tensor(rho, subset, bases);
}

RMat unfold(const CorrelationTensor& t, int mode) {
  const int rank = static_cast<int>(t.mode_sizes.size());
  if (mode < 1 || mode > rank) {
    throw Error(ErrorCode::BadSubset,
                "unfold: mode " + std::to_string(mode) + " out of range");
  }
  const int m = mode - 1;
  long cols = 1;
  for (int i = 0; i < rank; ++i) {
    if (i != m) cols *= t.mode_sizes[i];
  }
  RMat out(t.mode_sizes[m], cols);

  std::vector<int> idx(rank, 0);
  long flat = 0;
  do {
    long col = 0;
    for (int i = 0; i < rank; ++i) {
      if (i == m) continue;
      col = col * t.mode_sizes[i] + idx[i];
    }
    out(idx[m], col) = t.data[flat++];
  } while (next_index(idx, t.mode_sizes));
  return out;
}

double tensor_kf_norm(const CorrelationTensor& t) {
  double best = 0.0;
  for (int mode = 1; mode <= static_cast<int>(t.mode_sizes.size()); ++mode) {
    best = std::max(best, trace_norm(unfold(t, mode)));
  }
  return best;
}

DensityMatrix reconstruct(const std::vector<int>& dims,
                          const std::vector<BlochVector>& blochs,
                          const std::vector<CorrelationTensor>& tensors) {
  const int parties = static_cast<int>(dims.size());
  if (parties < 1) {
    throw Error(ErrorCode::BadDimension, "reconstruct: empty dims");
  }
  long total = 1;
  for (int d : dims) total *= d;

  std::vector<OperatorBasis> bases;
  for (int d : dims) bases.push_back(gellmann(d, 2.0));

  // Every party must contribute exactly one Bloch vector.
  std::vector<const BlochVector*> by_party(parties, nullptr);
  for (const BlochVector& v : blochs) {
    if (v.party < 0 || v.party >= parties || by_party[v.party] != nullptr) {
      throw Error(ErrorCode::IncompleteCoefficients,
                  "reconstruct: Bloch vectors must cover each party once");
    }
    if (v.coefficients.size() !=
        static_cast<long>(dims[v.party]) * dims[v.party] - 1) {
      throw Error(ErrorCode::DimMismatch,
                  "reconstruct: Bloch vector has wrong length");
    }
    by_party[v.party] = &v;
  }
  for (int p = 0; p < parties; ++p) {
    if (by_party[p] == nullptr) {
      throw Error(ErrorCode::IncompleteCoefficients,
                  "reconstruct: missing Bloch vector for party " +
                      std::to_string(p));
    }
  }

  // Every subset of size >= 2 must contribute exactly one tensor.
  std::vector<std::vector<int>> wanted;
  for (long mask = 1; mask < (1L << parties); ++mask) {
    std::vector<int> subset;
    for (int p = 0; p < parties; ++p) {
      if (mask & (1L << p)) subset.push_back(p);
    }
    if (subset.size() >= 2) wanted.push_back(std::move(subset));
  }
  std::vector<const CorrelationTensor*> by_subset(wanted.size(), nullptr);
  for (const CorrelationTensor& t : tensors) {
    auto it = std::find(wanted.begin(), wanted.end(), t.subset);
    if (it == wanted.end()) {
      throw Error(ErrorCode::BadSubset,
                  "reconstruct: tensor subset is not a valid party subset");
    }
    size_t slot = static_cast<size_t>(it - wanted.begin());
    if (by_subset[slot] != nullptr) {
      throw Error(ErrorCode::IncompleteCoefficients,
                  "reconstruct: duplicate tensor for a subset");
    }
    for (size_t i = 0; i < t.subset.size(); ++i) {
      if (t.mode_sizes[i] != dims[t.subset[i]] * dims[t.subset[i]] - 1) {
        throw Error(ErrorCode::DimMismatch,
                    "reconstruct: tensor mode size does not match party");
      }
    }
    by_subset[slot] = &t;
  }
  for (size_t i = 0; i < wanted.size(); ++i) {
    if (by_subset[i] == nullptr) {
      throw Error(ErrorCode::IncompleteCoefficients,
                  "reconstruct: missing tensor for a party subset");
    }
  }

  // Sum coefficient * (basis ops on the subset, identity elsewhere).
  auto embed = [&](const std::vector<int>& subset,
                   const std::vector<int>& idx) {
    std::vector<Mat> factors;
    factors.reserve(parties);
    for (int p = 0; p < parties; ++p) {
      auto it = std::find(subset.begin(), subset.end(), p);
      if (it == subset.end()) {
        factors.push_back(Mat::Identity(dims[p], dims[p]));
      } else {
        factors.push_back(bases[p].ops[idx[it - subset.begin()]]);
      }
    }
    return kron(factors);
  };

  Mat acc = Mat::Identity(total, total);
  for (int p = 0; p < parties; ++p) {
    const BlochVector& v = *by_party[p];
    for (long a = 0; a < v.coefficients.size(); ++a) {
      acc += v.coefficients[a] * embed({p}, {static_cast<int>(a)});
    }
  }
  for (const CorrelationTensor* t : by_subset) {
    std::vector<int> idx(t->subset.size(), 0);
    long flat = 0;
    do {
      acc += t->data[flat++] * embed(t->subset, idx);
    } while (next_index(idx, t->mode_sizes));
  }
  return DensityMatrix(dims, acc / static_cast<double>(total));
}

}  // namespace sepscan
