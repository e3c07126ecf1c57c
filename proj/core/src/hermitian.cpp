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

#include "irrcorr/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "irrcorr/error.hpp"

namespace irrcorr {

namespace {

constexpr double kTraceTolerance = 1e-10;
constexpr double kNegativityTolerance = 1e-10;
constexpr double kEntropyCutoff = 1e-15;

void require_square(const Matrix& h, const char* what) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw InvalidArgument(std::string(what) + ": matrix must be square and non-empty");
  }
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

Matrix hermitian_part(const Matrix& h, double tolerance) {
  require_square(h, "hermitian_part");
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (asym > tolerance * scale) {
    throw InvalidArgument("matrix is not Hermitian: max asymmetry " + format_double(asym));
  }
  return (h + h.adjoint()) * 0.5;
}

Matrix Spectrum::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

Spectrum eig_hermitian(const Matrix& h) {
  const Matrix sym = hermitian_part(h);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("eig_hermitian: eigensolver failed to converge");
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix matrix_exp(const Matrix& h) {
  const Spectrum s = eig_hermitian(h);
  const double top = s.eigenvalues(s.eigenvalues.size() - 1);
  if (top > kExpOverflowLimit) {
    throw InvalidArgument("matrix_exp: eigenvalue " + format_double(top) +
                          " out of range (limit " + format_double(kExpOverflowLimit) + ")");
  }
  return s.apply([](double x) { return std::exp(x); });
}

Matrix matrix_log(const Matrix& p) {
  const Spectrum s = eig_hermitian(p);
  const double low = s.eigenvalues(0);
  if (low <= kFullRankThreshold) {
    throw RankDeficientError("matrix_log: eigenvalue " + format_double(low) +
                                 " <= full-rank threshold; rank-deficient input",
                             low);
  }
  return s.apply([](double x) { return std::log(x); });
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix::DensityMatrix(const Matrix& m) {
  require_square(m, "DensityMatrix");
  const auto dim = m.rows();
  if ((dim & (dim - 1)) != 0 || dim > dimension_of(kMaxParties)) {
    throw InvalidArgument("DensityMatrix: dimension " + std::to_string(dim) +
                          " is not 2^n with 1 <= n <= " + std::to_string(kMaxParties));
  }
  n_ = 0;
  while ((Eigen::Index{1} << n_) < dim) ++n_;
  if (n_ < 1) throw InvalidArgument("DensityMatrix: need at least one qubit");

  matrix_ = hermitian_part(m);
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw NotAStateError("not a legitimate state: trace " + format_double(tr) + " != 1");
  }
  spectrum_ = eig_hermitian(matrix_);
  if (spectrum_.eigenvalues(0) < -kNegativityTolerance) {
    throw NotAStateError("not a legitimate state: min eigenvalue " +
                         format_double(spectrum_.eigenvalues(0)) + " < 0");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  require_party_count(n);
  const int dim = dimension_of(n);
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

void DensityMatrix::require_full_rank() const {
  if (!is_full_rank()) {
    throw RankDeficientError("state is rank deficient: min eigenvalue " +
                                 format_double(min_eigenvalue()) + " <= " +
                                 format_double(kFullRankThreshold),
                             min_eigenvalue());
  }
}

Matrix DensityMatrix::log() const {
  require_full_rank();
  return spectrum_.apply([](double x) { return std::log(x); });
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.spectrum().eigenvalues) {
    if (lambda >= kEntropyCutoff) s -= lambda * std::log(lambda);
  }
  return s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dimension() != sigma.dimension()) {
    throw InvalidArgument("relative_entropy: dimension mismatch");
  }
  const Matrix diff = rho.log() - sigma.log();
  return (rho.matrix() * diff).trace().real();
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.party_count();
  if (keep.empty()) throw InvalidArgument("partial_trace: keep set is empty");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.front() < 0 ||
      kept.back() >= n) {
    throw InvalidArgument("partial_trace: keep set must be distinct parties in [0, n)");
  }
  std::vector<int> traced;
  for (int p = 0; p < n; ++p) {
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);
  }

  // Scatter the bits of a compact index onto the listed parties (party 0 = MSB).
  auto scatter = [n](std::size_t compact, const std::vector<int>& parties) {
    std::size_t full = 0;
    const auto k = parties.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t bit = (compact >> (k - 1 - i)) & 1u;
      full |= bit << (n - 1 - parties[i]);
    }
    return full;
  };

  const std::size_t kept_dim = std::size_t{1} << kept.size();
  const std::size_t traced_dim = std::size_t{1} << traced.size();
  std::vector<std::size_t> kept_offsets(kept_dim), traced_offsets(traced_dim);
  for (std::size_t i = 0; i < kept_dim; ++i) kept_offsets[i] = scatter(i, kept);
  for (std::size_t i = 0; i < traced_dim; ++i) traced_offsets[i] = scatter(i, traced);

  const auto kd = static_cast<Eigen::Index>(kept_dim);
  Matrix out = Matrix::Zero(kd, kd);
  const Matrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < kd; ++i) {
    for (Eigen::Index j = 0; j < kd; ++j) {
      Complex acc = 0.0;
      for (std::size_t t : traced_offsets) {
        acc += m(static_cast<Eigen::Index>(kept_offsets[static_cast<std::size_t>(i)] | t),
                 static_cast<Eigen::Index>(kept_offsets[static_cast<std::size_t>(j)] | t));
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(out);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("max_abs_diff: dimension mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace irrcorr
