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

// Independent reference computations used by the unit and acceptance suites.
// Nothing here calls the projection solver or the coordinate transforms it
// is meant to check.

#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "irrcorr/hermitian.hpp"
#include "irrcorr/pauli_basis.hpp"

namespace irrcorr::oracle {

/// Central difference of f along coordinate i.
inline double central_difference(const std::function<double(const Eigen::VectorXd&)>& f,
                                 const Eigen::VectorXd& x, Eigen::Index i, double step) {
  Eigen::VectorXd plus = x, minus = x;
  plus(i) += step;
  minus(i) -= step;
  return (f(plus) - f(minus)) / (2.0 * step);
}

/// Product of single-party marginals rho^(1) (x) ... (x) rho^(n).
inline Matrix product_of_marginals(const DensityMatrix& rho) {
  Matrix out = Matrix::Identity(1, 1);
  for (int p = 0; p < rho.party_count(); ++p) {
    const int keep[] = {p};
    out = kron(out, partial_trace(rho, keep).matrix());
  }
  return out;
}

/// sum_i S(rho^(i)) - S(rho), the total correlation computed from marginals.
inline double total_correlation_from_marginals(const DensityMatrix& rho) {
  double sum = 0.0;
  for (int p = 0; p < rho.party_count(); ++p) {
    const int keep[] = {p};
    sum += von_neumann_entropy(partial_trace(rho, keep));
  }
  return sum - von_neumann_entropy(rho);
}

/// Dense Tr(rho sigma_m) straight from the Kronecker product, bypassing the
/// cached signed-permutation form.
inline double dense_expectation(const Matrix& rho, const MultiIndex& m) {
  return (rho * pauli_operator(m).matrix).trace().real();
}

/// Expected eta of the counterexample's final state. A CNOT controlled by a
/// diagonal ancilla acts on qubit 1 as rho -> p0 rho + p1 X rho X, which scales
/// every expectation whose qubit-1 label anticommutes with X (labels 2, 3) by
/// <Z_a> = tanh(1) and leaves the rest alone.
inline std::vector<double> counterexample_final_eta(const Matrix& rho_initial) {
  const double t = std::tanh(1.0);
  std::vector<double> out;
  for (const auto& m : enumerate_indices(3)) {
    if (m.is_identity()) continue;
    const double scale = (m[0] == 2 || m[0] == 3) ? t : 1.0;
    out.push_back(scale * dense_expectation(rho_initial, m));
  }
  return out;
}

/// Shannon entropy of a raw probability vector, nats.
inline double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

}  // namespace irrcorr::oracle
