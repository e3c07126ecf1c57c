// Copyright 2026 The irrcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>

#include <Eigen/Dense>

#include "irrcorr/pauli_basis.hpp"

namespace irrcorr {

/// Max-abs asymmetry, relative to max(1, max-abs entry), that is treated as
/// roundoff and removed by symmetrisation. Anything larger is a caller error.
inline constexpr double kHermitianTolerance = 1e-12;
/// Smallest eigenvalue a state may have and still count as full rank.
inline constexpr double kFullRankThreshold = 1e-12;
/// Largest eigenvalue matrix_exp accepts before e^x overflows.
inline constexpr double kExpOverflowLimit = 700.0;

/// (h + h^dagger) / 2, or InvalidArgument if the asymmetry is not roundoff.
Matrix hermitian_part(const Matrix& h, double tolerance = kHermitianTolerance);

/// Eigenvalues ascending with eigenvectors as the paired columns of a unitary.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const;
  /// U diag(f(lambda)) U^dagger.
  template <class F>
  Matrix apply(F&& f) const {
    Eigen::VectorXd mapped = eigenvalues.unaryExpr(f);
    return eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
  }
};

Spectrum eig_hermitian(const Matrix& h);

/// Throws InvalidArgument if the largest eigenvalue exceeds kExpOverflowLimit.
Matrix matrix_exp(const Matrix& h);

/// Throws RankDeficientError when an eigenvalue is <= kFullRankThreshold.
Matrix matrix_log(const Matrix& p);

Matrix kron(const Matrix& a, const Matrix& b);

/// Dense density matrix of n qubits. Validated on construction (square,
/// dimension a power of two up to 2^kMaxParties, Hermitian, unit trace within
/// 1e-10, smallest eigenvalue >= -1e-10) and immutable afterwards; the
/// spectrum is computed once and kept.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m);

  static DensityMatrix maximally_mixed(int n);

  const Matrix& matrix() const noexcept { return matrix_; }
  int party_count() const noexcept { return n_; }
  int dimension() const noexcept { return static_cast<int>(matrix_.rows()); }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  double min_eigenvalue() const { return spectrum_.eigenvalues(0); }

  bool is_full_rank() const { return min_eigenvalue() > kFullRankThreshold; }
  /// Throws RankDeficientError naming the smallest eigenvalue.
  void require_full_rank() const;

  /// ln(rho); requires full rank.
  Matrix log() const;

 private:
  Matrix matrix_;
  Spectrum spectrum_;
  int n_ = 0;
};

/// Von Neumann entropy in nats. Terms with eigenvalue below 1e-15 contribute 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Tr rho (ln rho - ln sigma) in nats. Both states must be full rank.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Reduced state on the listed parties (0-based, any order, kept in
/// ascending party order in the result).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// max_{ij} |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace irrcorr
