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

#include <vector>

#include "irrcorr/correlations.hpp"
#include "irrcorr/hermitian.hpp"
#include "irrcorr/state_coords.hpp"

namespace irrcorr {

/// Scripted local operation that creates irreducible three-party correlation.
///
/// Three qubits start in a state with theta^330 = 1, theta^303 = theta^001 =
/// 1/sqrt(2), which lies in the order-2 family. An ancilla with theta^3 = 1 is
/// attached, a CNOT with the ancilla as control and qubit 1 as target is
/// applied, and the ancilla is traced out.
///
/// Party layout: qubits (1, 2, 3) sit at internal positions (0, 1, 2) and the
/// ancilla is appended at position 3.
namespace counterexample {

inline constexpr int kSystemParties = 3;
inline constexpr int kAncillaPosition = 3;
inline constexpr int kTargetPosition = 0;

ThetaCoords initial_theta();
DensityMatrix initial_state();
DensityMatrix ancilla_state();

struct ReferenceValue {
  MultiIndex index;
  double expected;
};

/// Closed-form eta of the final state: tanh(1)/sqrt2, tanh^2(1)/sqrt2 (x2),
/// tanh^2(1), tanh^3(1)/sqrt2 on 001, 033, 303, 330, 331.
std::vector<ReferenceValue> final_eta_reference();
/// Three-decimal theta of the final state on the same indices.
std::vector<ReferenceValue> final_theta_reference();

}  // namespace counterexample

struct ComparedValue {
  MultiIndex index;
  double expected;
  double computed;
  double error() const;
};

struct CounterexampleReport {
  DensityMatrix rho_initial;
  DensityMatrix rho_final;
  EtaCoords eta_final;
  ThetaCoords theta_final;
  CorrelationReport before;
  CorrelationReport after;
  double c3_before;
  double c3_after;
  std::vector<ComparedValue> eta_checks;
  std::vector<ComparedValue> theta_checks;
  /// Max-abs deviation over eta_checks / theta_checks.
  double eta_error;
  double theta_error;
};

CounterexampleReport run_counterexample(const SolverOptions& opts = {});

}  // namespace irrcorr
