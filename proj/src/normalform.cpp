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

#include "sepscan/normalform.hpp"

#include <cmath>
#include <string>

#include "sepscan/bloch.hpp"

namespace sepscan {

namespace {

Mat embed_at(const std::vector<int>& dims, int party, const Mat& op) {
  std::vector<Mat> factors;
  factors.reserve(dims.size());
  for (size_t p = 0; p < dims.size(); ++p) {
    if (static_cast<int>(p) == party) {
      factors.push_back(op);
    } else {
      factors.push_back(Mat::Identity(dims[p], dims[p]));
    }
  }
  return kron(factors);
}

double residual_of(const DensityMatrix& rho) {
  double worst = 0.0;
  for (int p = 0; p < rho.parties(); ++p) {
    const int d = rho.dims()[p];
    Mat dev = partial_trace(rho, {p}).mat() -
              Mat::Identity(d, d) / static_cast<double>(d);
    worst = std::max(worst, dev.norm());
  }
  return worst;
}

}  // namespace

double objective_f(const DensityMatrix& rho, const std::vector<Mat>& taus) {
  if (static_cast<int>(taus.size()) != rho.parties()) {
    throw Error(ErrorCode::DimMismatch,
                "objective_f: one tau per party required");
  }
  double det_factor = 1.0;
  for (int p = 0; p < rho.parties(); ++p) {
    const int d = rho.dims()[p];
    if (taus[p].rows() != d || taus[p].cols() != d) {
      throw Error(ErrorCode::DimMismatch,
                  "objective_f: tau dimension does not match party " +
                      std::to_string(p));
    }
    RVec eigs = herm_eig(taus[p]).eigenvalues;
    double max_abs = eigs.cwiseAbs().maxCoeff();
    if (max_abs <= 0.0 ||
        eigs.minCoeff() <= policy().singular_floor * max_abs) {
      throw Error(ErrorCode::SingularMatrix,
                  "objective_f: tau for party " + std::to_string(p) +
                      " is singular or not positive definite");
    }
    double log_det = 0.0;
    for (long i = 0; i < eigs.size(); ++i) log_det += std::log(eigs[i]);
    det_factor *= std::exp(log_det / d);
  }
  cplx val = (rho.mat() * kron(taus)).trace();
  return val.real() / det_factor;
}

std::pair<DensityMatrix, Mat> filter_once(const DensityMatrix& rho,
                                          int party) {
  if (party < 0 || party >= rho.parties()) {
    throw Error(ErrorCode::BadSubset,
                "filter_once: party " + std::to_string(party) +
                    " out of range");
  }
  const int d = rho.dims()[party];
  Mat red = partial_trace(rho, {party}).mat();
  EigResult eig = herm_eig(red);
  double max_abs = eig.eigenvalues.cwiseAbs().maxCoeff();
  if (max_abs <= 0.0 ||
      eig.eigenvalues.minCoeff() <= policy().singular_floor * max_abs) {
    throw Error(ErrorCode::SingularReduction,
                "filter_once: party " + std::to_string(party) +
                    " has a singular reduction");
  }
  const RVec& eigs = eig.eigenvalues;

  // F = |det(red)|^(1/2d) * red^(-1/2); the prefactor makes |det F| = 1 so
  // accumulated filters stay well scaled.
  double log_det = 0.0;
  for (long i = 0; i < eigs.size(); ++i) log_det += std::log(eigs[i]);
  const double prefactor = std::exp(log_det / (2.0 * d));
  RVec inv_sqrt = eigs.array().rsqrt();
  Mat f = prefactor * eig.eigenvectors * inv_sqrt.asDiagonal() *
          eig.eigenvectors.adjoint();

  Mat big = embed_at(rho.dims(), party, f);
  Mat next = big * rho.mat() * big.adjoint();
  next /= next.trace().real();
  return {DensityMatrix(rho.dims(), std::move(next)), f};
}

NormalFormResult normal_form(const DensityMatrix& rho, double tol,
                             int max_sweeps) {
  if (tol <= 0.0 || max_sweeps < 1) {
    throw Error(ErrorCode::BadParameter,
                "normal_form: tol must be > 0 and max_sweeps >= 1");
  }
  {
    RVec eigs = herm_eig(rho.mat()).eigenvalues;
    if (eigs.minCoeff() <= policy().rank_floor * eigs.maxCoeff()) {
      throw Error(ErrorCode::NotFullRank,
                  "normal_form: state is not full rank (min eigenvalue " +
                      std::to_string(eigs.minCoeff()) + ")");
    }
  }

  const int parties = rho.parties();
  std::vector<Mat> filters;
  for (int p = 0; p < parties; ++p) {
    filters.push_back(Mat::Identity(rho.dims()[p], rho.dims()[p]));
  }

  // The objective is evaluated on the ORIGINAL state with the accumulated
  // filters as tau_i = F_i^dag F_i; coordinate descent makes it monotone.
  auto objective_now = [&rho, &filters]() {
    std::vector<Mat> taus;
    taus.reserve(filters.size());
    for (const Mat& f : filters) taus.push_back(f.adjoint() * f);
    return objective_f(rho, taus);
  };

  NormalFormResult result{rho, filters, 0, false, {}, residual_of(rho)};
  result.objective_trace.push_back(objective_now());
  if (result.residual < tol) {
    result.converged = true;
    return result;
  }

  DensityMatrix current = rho;
  double best_residual = result.residual;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    for (int p = 0; p < parties; ++p) {
      auto [next, f] = filter_once(current, p);
      current = std::move(next);
      filters[p] = f * filters[p];
    }
    double resid = residual_of(current);
    result.iterations = sweep;
    result.objective_trace.push_back(objective_now());
    if (resid <= best_residual) {
      best_residual = resid;
      result.nf = current;
      result.filters = filters;
      result.residual = resid;
    }
    if (resid < tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

RVec xi_values(const DensityMatrix& nf) {
  if (nf.parties() != 2) {
    throw Error(ErrorCode::BadSubset, "xi_values: state must be bipartite");
  }
  for (int p = 0; p < 2; ++p) {
    double norm = local_bloch(nf, p).coefficients.norm();
    if (norm > policy().bloch_nf_tol) {
      throw Error(ErrorCode::NotNormalForm,
                  "xi_values: party " + std::to_string(p) +
                      " has local Bloch norm " + std::to_string(norm));
    }
  }
  Eigen::JacobiSVD<RMat> solver(correlation_matrix(nf));
  return solver.singularValues();
}

}  // namespace sepscan
