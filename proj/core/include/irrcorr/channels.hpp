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
#include <vector>

#include <Eigen/Dense>

#include "irrcorr/hermitian.hpp"
#include "irrcorr/random_state.hpp"

namespace irrcorr {

using Matrix2 = Eigen::Matrix2cd;

/// Completely positive trace-preserving map acting on a single party.
class KrausChannel {
 public:
  /// Throws InvalidArgument unless sum_j K_j^dagger K_j = I within 1e-10.
  KrausChannel(int party, std::vector<Matrix2> operators);

  static KrausChannel identity(int party);
  /// rho -> (1 - p) rho + p I/2 on the party.
  static KrausChannel depolarizing(int party, double p);

  int party() const noexcept { return party_; }
  const std::vector<Matrix2>& operators() const noexcept { return operators_; }

 private:
  int party_;
  std::vector<Matrix2> operators_;
};

/// rho (x) ancilla, with the ancilla parties appended after rho's.
DensityMatrix attach_ancilla(const DensityMatrix& rho, const DensityMatrix& ancilla);

/// Permutation matrix on n qubits flipping the target bit when the control
/// bit is 1. Parties are 0-based; party 0 is the most significant bit.
Matrix cnot_unitary(int control, int target, int n);

/// I (x) ... (x) op (x) ... (x) I with op at the given party.
Matrix embed_local(const Matrix2& op, int party, int n);

/// U_0 (x) U_1 (x) ... (x) U_{n-1}.
Matrix local_product(std::span<const Matrix2> factors);

/// U rho U^dagger. Throws InvalidArgument if U is not unitary within 1e-10.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u);

DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausChannel& channel);

/// Local channel induced on `target` by attaching `ancilla` (one qubit),
/// applying CNOT with the ancilla as control, and tracing the ancilla out.
/// K_0 = sqrt(<0|a|0>) I, K_1 = sqrt(<1|a|1>) X.
KrausChannel cnot_ancilla_channel(const DensityMatrix& ancilla, int target);

/// Random single-party channel with `rank` Kraus operators taken from the
/// blocks of a Haar-random isometry.
KrausChannel random_local_channel(int party, int rank, Rng& rng);

/// Reduce rho to the first `keep` parties.
DensityMatrix trace_out_tail(const DensityMatrix& rho, int keep);

}  // namespace irrcorr
