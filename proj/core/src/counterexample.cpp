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

#include "irrcorr/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "irrcorr/channels.hpp"

namespace irrcorr {

namespace counterexample {

ThetaCoords initial_theta() {
  ThetaCoords theta(kSystemParties);
  theta[MultiIndex{3, 3, 0}] = 1.0;
  theta[MultiIndex{3, 0, 3}] = 1.0 / std::sqrt(2.0);
  theta[MultiIndex{0, 0, 1}] = 1.0 / std::sqrt(2.0);
  return theta;
}

DensityMatrix initial_state() { return theta_to_density(initial_theta()); }

DensityMatrix ancilla_state() {
  ThetaCoords theta(1);
  theta[MultiIndex{3}] = 1.0;
  return theta_to_density(theta);
}

std::vector<ReferenceValue> final_eta_reference() {
  const double t = std::tanh(1.0);
  const double r = std::sqrt(2.0);
  return {{MultiIndex{0, 0, 1}, t / r},
          {MultiIndex{0, 3, 3}, t * t / r},
          {MultiIndex{3, 0, 3}, t * t / r},
          {MultiIndex{3, 3, 0}, t * t},
          {MultiIndex{3, 3, 1}, t * t * t / r}};
}

std::vector<ReferenceValue> final_theta_reference() {
  return {{MultiIndex{0, 0, 1}, 0.650},
          {MultiIndex{0, 3, 3}, 0.336},
          {MultiIndex{3, 0, 3}, 0.336},
          {MultiIndex{3, 3, 0}, 0.543},
          {MultiIndex{3, 3, 1}, 0.048}};
}

}  // namespace counterexample

double ComparedValue::error() const { return std::abs(computed - expected); }

namespace {

template <class Coords>
std::vector<ComparedValue> compare(const std::vector<counterexample::ReferenceValue>& refs,
                                   const Coords& coords, double& worst) {
  std::vector<ComparedValue> out;
  worst = 0.0;
  for (const auto& ref : refs) {
    out.push_back({ref.index, ref.expected, coords[ref.index]});
    worst = std::max(worst, out.back().error());
  }
  return out;
}

}  // namespace

CounterexampleReport run_counterexample(const SolverOptions& opts) {
  using namespace counterexample;
  const DensityMatrix rho_i = initial_state();
  const DensityMatrix joint = attach_ancilla(rho_i, ancilla_state());
  const DensityMatrix evolved =
      apply_unitary(joint, cnot_unitary(kAncillaPosition, kTargetPosition, kSystemParties + 1));
  const DensityMatrix rho_f = trace_out_tail(evolved, kSystemParties);

  CorrelationReport before = decompose_entropic(rho_i, opts);
  CorrelationReport after = decompose_entropic(rho_f, opts);
  EtaCoords eta_f = density_to_eta(rho_f);
  ThetaCoords theta_f = density_to_theta(rho_f);

  double eta_error = 0.0;
  double theta_error = 0.0;
  auto eta_checks = compare(final_eta_reference(), eta_f, eta_error);
  auto theta_checks = compare(final_theta_reference(), theta_f, theta_error);
  const double c3_before = before.c(3);
  const double c3_after = after.c(3);

  return CounterexampleReport{rho_i,
                              rho_f,
                              std::move(eta_f),
                              std::move(theta_f),
                              std::move(before),
                              std::move(after),
                              c3_before,
                              c3_after,
                              std::move(eta_checks),
                              std::move(theta_checks),
                              eta_error,
                              theta_error};
}

}  // namespace irrcorr
