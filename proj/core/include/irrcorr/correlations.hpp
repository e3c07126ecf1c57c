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

#include <map>
#include <vector>

#include "irrcorr/hermitian.hpp"
#include "irrcorr/maxent.hpp"

namespace irrcorr {

struct ProjectionSummary {
  int order;
  int iterations;
  double residual;
  bool converged;
};

/// Irreducible k-party correlations C_k (k = 2..n) and the total correlation,
/// all in nats.
struct CorrelationReport {
  int party_count = 0;
  std::map<int, double> irreducible;
  double total = 0.0;
  /// S(rho*_k) for k = 1..n-1.
  std::map<int, double> projected_entropies;
  /// Max |Def1 - Def2| over all measures; only filled by compare_definitions.
  double definition_gap = 0.0;
  std::vector<ProjectionSummary> diagnostics;

  /// C_k; throws InvalidArgument for k outside 2..n.
  double c(int k) const;
};

/// Maximum-entropy projections rho*_k for k = 1..n-1 (index k-1). Solver
/// failures propagate as ConvergenceError carrying the failing order.
std::vector<ProjectionResult> projection_ladder(const DensityMatrix& rho,
                                                const SolverOptions& opts = {});

/// Entropy-difference route: C_k = S(rho*_{k-1}) - S(rho*_k) with
/// rho*_n = rho, and C_T = S(rho*_1) - S(rho).
CorrelationReport decompose_entropic(const DensityMatrix& rho, const SolverOptions& opts = {});
CorrelationReport decompose_entropic(const DensityMatrix& rho,
                                     const std::vector<ProjectionResult>& ladder);

/// Relative-entropy route: C'_k = S(rho*_k || rho*_{k-1}) with rho*_n = rho,
/// and C'_T = S(rho || rho*_1). The minimisers over each family coincide
/// with the maximum-entropy projections, so the same ladder is used, but
/// every measure is a divergence rather than an entropy difference.
CorrelationReport decompose_divergence(const DensityMatrix& rho, const SolverOptions& opts = {});
CorrelationReport decompose_divergence(const DensityMatrix& rho,
                                       const std::vector<ProjectionResult>& ladder);

struct EquivalenceReport {
  CorrelationReport entropic;
  CorrelationReport divergence;
  double gap;
};

/// Both routes over a single projection ladder; definition_gap is set on
/// both reports.
EquivalenceReport compare_definitions(const DensityMatrix& rho, const SolverOptions& opts = {});

/// max over {C_2..C_n, C_T} of |entropic - divergence|.
double verify_equivalence(const DensityMatrix& rho, const SolverOptions& opts = {});

}  // namespace irrcorr
