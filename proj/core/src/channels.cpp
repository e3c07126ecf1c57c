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

#include "irrcorr/channels.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "irrcorr/error.hpp"

namespace irrcorr {

namespace {

constexpr double kCompletenessTolerance = 1e-10;
constexpr double kUnitarityTolerance = 1e-10;

void require_party(int party, int n, const char* what) {
  if (party < 0 || party >= n) {
    throw InvalidArgument(std::string(what) + ": party " + std::to_string(party) +
                          " out of range for n = " + std::to_string(n));
  }
}

}  // namespace

KrausChannel::KrausChannel(int party, std::vector<Matrix2> operators)
    : party_(party), operators_(std::move(operators)) {
  if (party < 0) throw InvalidArgument("KrausChannel: negative party");
  if (operators_.empty()) throw InvalidArgument("KrausChannel: no Kraus operators");
  Matrix2 sum = Matrix2::Zero();
  for (const auto& k : operators_) sum += k.adjoint() * k;
  const double err = (sum - Matrix2::Identity()).cwiseAbs().maxCoeff();
  if (err > kCompletenessTolerance) {
    throw InvalidArgument("KrausChannel: incomplete Kraus set, |sum K^dag K - I| = " +
                          std::to_string(err));
  }
}

KrausChannel KrausChannel::identity(int party) { return KrausChannel(party, {Matrix2::Identity()}); }

KrausChannel KrausChannel::depolarizing(int party, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("depolarizing: p must be in [0, 1]");
  Matrix2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  const double a = std::sqrt(1.0 - 0.75 * p);
  const double b = std::sqrt(p / 4.0);
  return KrausChannel(party, {a * Matrix2::Identity(), b * x, b * y, b * z});
}

DensityMatrix attach_ancilla(const DensityMatrix& rho, const DensityMatrix& ancilla) {
  if (rho.party_count() + ancilla.party_count() > kMaxParties) {
    throw InvalidArgument("attach_ancilla: combined system exceeds supported party count");
  }
  return DensityMatrix(kron(rho.matrix(), ancilla.matrix()));
}

Matrix cnot_unitary(int control, int target, int n) {
  require_party_count(n);
  require_party(control, n, "cnot_unitary");
  require_party(target, n, "cnot_unitary");
  if (control == target) throw InvalidArgument("cnot_unitary: control equals target");
  const int dim = dimension_of(n);
  const int control_bit = 1 << (n - 1 - control);
  const int target_bit = 1 << (n - 1 - target);
  Matrix u = Matrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int row = (col & control_bit) != 0 ? col ^ target_bit : col;
    u(row, col) = 1.0;
  }
  return u;
}

Matrix embed_local(const Matrix2& op, int party, int n) {
  require_party_count(n);
  require_party(party, n, "embed_local");
  Matrix out = Matrix::Identity(1, 1);
  for (int p = 0; p < n; ++p) {
    out = kron(out, p == party ? Matrix(op) : Matrix(Matrix::Identity(2, 2)));
  }
  return out;
}

Matrix local_product(std::span<const Matrix2> factors) {
  require_party_count(static_cast<int>(factors.size()));
  Matrix out = Matrix::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, Matrix(f));
  return out;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u) {
  if (u.rows() != rho.dimension() || u.cols() != rho.dimension()) {
    throw InvalidArgument("apply_unitary: dimension mismatch");
  }
  const double err =
      (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (err > kUnitarityTolerance) {
    throw InvalidArgument("apply_unitary: matrix is not unitary, |U^dag U - I| = " +
                          std::to_string(err));
  }
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausChannel& channel) {
  const int n = rho.party_count();
  require_party(channel.party(), n, "apply_kraus");
  Matrix out = Matrix::Zero(rho.dimension(), rho.dimension());
  for (const auto& k : channel.operators()) {
    const Matrix full = embed_local(k, channel.party(), n);
    out += full * rho.matrix() * full.adjoint();
  }
  return DensityMatrix(out);
}

KrausChannel cnot_ancilla_channel(const DensityMatrix& ancilla, int target) {
  if (ancilla.party_count() != 1) {
    throw InvalidArgument("cnot_ancilla_channel: ancilla must be a single qubit");
  }
  const double p0 = std::max(0.0, ancilla.matrix()(0, 0).real());
  const double p1 = std::max(0.0, ancilla.matrix()(1, 1).real());
  Matrix2 x;
  x << 0, 1, 1, 0;
  return KrausChannel(target, {std::sqrt(p0) * Matrix2::Identity(), std::sqrt(p1) * x});
}

KrausChannel random_local_channel(int party, int rank, Rng& rng) {
  if (rank < 1) throw InvalidArgument("random_local_channel: rank must be positive");
  const Matrix u = random_unitary(2 * rank, rng);
  std::vector<Matrix2> ops;
  ops.reserve(static_cast<std::size_t>(rank));
  for (int j = 0; j < rank; ++j) ops.emplace_back(u.block(2 * j, 0, 2, 2));
  return KrausChannel(party, std::move(ops));
}

DensityMatrix trace_out_tail(const DensityMatrix& rho, int keep) {
  std::vector<int> parties(static_cast<std::size_t>(keep));
  std::iota(parties.begin(), parties.end(), 0);
  return partial_trace(rho, parties);
}

}  // namespace irrcorr
