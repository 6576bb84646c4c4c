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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sepscan {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

/// Shared numeric tolerances. All library routines read from a single policy
/// instance so that every tolerance used anywhere is visible in one place.
struct NumericPolicy {
  double herm_tol = 1e-10;       // max |m - m^dag| entry for "Hermitian"
  double trace_tol = 1e-10;      // |Tr(rho) - 1| allowed for density matrices
  double psd_tol = 1e-10;        // eigenvalues >= -psd_tol count as PSD
  double imag_tol = 1e-10;       // imaginary residue allowed on real scalars
  double ortho_tol = 1e-10;      // |R R^T - I| entry for "orthogonal"
  double loo_tol = 1e-12;        // Gram-matrix deviation for LOO sets
  double singular_floor = 1e-12; // relative eigenvalue floor for inversion
  double rank_floor = 1e-9;      // relative eigenvalue floor for "full rank"
  double nf_tol = 1e-9;          // default normal-form residual target
  double bloch_nf_tol = 1e-6;    // local Bloch norm allowed in a normal form
};

/// The policy used by every routine in the library.
inline const NumericPolicy& policy() {
  static const NumericPolicy p{};
  return p;
}

enum class ErrorCode {
  NotHermitian,
  SingularMatrix,
  BadSubset,
  BadDimension,
  NotOrthogonal,
  DimMismatch,
  BadLoo,
  NotDetected,
  NotFullRank,
  NoConvergence,
  BadParameter,
  IncompleteCoefficients,
  NotNormalForm,
  NoSignChange,
  SingularReduction,
  BadStateFile,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::BadLoo: return "BadLoo";
    case ErrorCode::NotDetected: return "NotDetected";
    case ErrorCode::NotFullRank: return "NotFullRank";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::IncompleteCoefficients: return "IncompleteCoefficients";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::SingularReduction: return "SingularReduction";
    case ErrorCode::BadStateFile: return "BadStateFile";
  }
  return "Unknown";
}

/// Library error type. Carries a machine-readable code next to the message so
/// callers (and the CLI) can map failures to exit codes without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sepscan
