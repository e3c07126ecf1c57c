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

#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "irrcorr/hermitian.hpp"
#include "irrcorr/state_coords.hpp"

namespace irrcorr {

struct SolverOptions {
  /// Stop once every constrained expectation matches its target to this.
  double tolerance = 1e-9;
  int max_iterations = 500;
  /// Per-iteration residual log; nullptr disables it.
  std::ostream* trace = nullptr;
};

/// Targets eta^m for every non-identity index of weight <= order. Fixing
/// these is the same as fixing all order-party reduced density matrices.
class MarginalConstraints {
 public:
  /// Targets given explicitly, aligned with indices(); mainly for tests and
  /// for callers that already hold the marginals.
  MarginalConstraints(int party_count, int order, Eigen::VectorXd targets);

  int party_count() const noexcept { return family_.party_count(); }
  int order() const noexcept { return family_.max_weight(); }
  const ExponentialFamily& family() const noexcept { return family_; }
  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
  const Eigen::VectorXd& targets() const noexcept { return targets_; }

  /// Non-identity indices of weight <= order, lexicographic.
  static std::vector<MultiIndex> constrained_indices(int party_count, int order);

 private:
  ExponentialFamily family_;
  std::vector<MultiIndex> indices_;
  Eigen::VectorXd targets_;
};

MarginalConstraints extract_constraints(const DensityMatrix& rho, int order);

/// Maximum-entropy state under the constraints, which is also the
/// relative-entropy projection of the source state onto the family.
struct ProjectionResult {
  int order;
  DensityMatrix state;
  /// Zero outside weight <= order by construction.
  ThetaCoords theta;
  int iterations;
  /// Max-abs mismatch between the state's constrained expectations and the
  /// targets.
  double final_residual;
  bool converged;
};

/// Minimises the convex dual psi(theta) - <eta*, theta> over theta supported
/// on the family, by BFGS from theta = 0 with Armijo backtracking. The
/// gradient is eta(theta) - eta*.
///
/// Throws ConvergenceError after max_iterations, InfeasibleError when theta
/// diverges (targets on the boundary of the state space).
ProjectionResult project(const MarginalConstraints& constraints,
                         const SolverOptions& opts = {});

struct PythagoreanSplit {
  double lhs;  ///< S(rho*||probe)
  double rhs;  ///< S(rho*||projection) + S(projection||probe)
};

/// Checks the Pythagorean relation for a probe inside the projection's
/// family. Throws InvalidArgument when the probe is outside it (1e-8).
PythagoreanSplit pythagorean_check(const DensityMatrix& rho_star,
                                   const ProjectionResult& projection,
                                   const DensityMatrix& probe);

}  // namespace irrcorr
