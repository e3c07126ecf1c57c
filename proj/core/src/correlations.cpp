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

#include "irrcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "irrcorr/error.hpp"

namespace irrcorr {

double CorrelationReport::c(int k) const {
  const auto it = irreducible.find(k);
  if (it == irreducible.end()) {
    throw InvalidArgument("C_" + std::to_string(k) + " is not defined for n = " +
                          std::to_string(party_count));
  }
  return it->second;
}

std::vector<ProjectionResult> projection_ladder(const DensityMatrix& rho,
                                                const SolverOptions& opts) {
  rho.require_full_rank();
  std::vector<ProjectionResult> ladder;
  for (int k = 1; k < rho.party_count(); ++k) {
    ladder.push_back(project(extract_constraints(rho, k), opts));
  }
  return ladder;
}

namespace {

CorrelationReport skeleton(const DensityMatrix& rho, const std::vector<ProjectionResult>& ladder) {
  const int n = rho.party_count();
  if (static_cast<int>(ladder.size()) != n - 1) {
    throw InvalidArgument("projection ladder must hold orders 1..n-1");
  }
  CorrelationReport report;
  report.party_count = n;
  for (const auto& p : ladder) {
    report.projected_entropies[p.order] = von_neumann_entropy(p.state);
    report.diagnostics.push_back({p.order, p.iterations, p.final_residual, p.converged});
  }
  return report;
}

}  // namespace

CorrelationReport decompose_entropic(const DensityMatrix& rho,
                                     const std::vector<ProjectionResult>& ladder) {
  CorrelationReport report = skeleton(rho, ladder);
  const int n = rho.party_count();
  const double s_rho = von_neumann_entropy(rho);
  auto entropy_at = [&](int k) {
    return k == n ? s_rho : report.projected_entropies.at(k);
  };
  for (int k = 2; k <= n; ++k) report.irreducible[k] = entropy_at(k - 1) - entropy_at(k);
  report.total = n == 1 ? 0.0 : entropy_at(1) - s_rho;
  return report;
}

CorrelationReport decompose_entropic(const DensityMatrix& rho, const SolverOptions& opts) {
  return decompose_entropic(rho, projection_ladder(rho, opts));
}

CorrelationReport decompose_divergence(const DensityMatrix& rho,
                                       const std::vector<ProjectionResult>& ladder) {
  CorrelationReport report = skeleton(rho, ladder);
  const int n = rho.party_count();
  auto state_at = [&](int k) -> const DensityMatrix& {
    return k == n ? rho : ladder[static_cast<std::size_t>(k - 1)].state;
  };
  for (int k = 2; k <= n; ++k) {
    report.irreducible[k] = relative_entropy(state_at(k), state_at(k - 1));
  }
  report.total = n == 1 ? 0.0 : relative_entropy(rho, state_at(1));
  return report;
}

CorrelationReport decompose_divergence(const DensityMatrix& rho, const SolverOptions& opts) {
  return decompose_divergence(rho, projection_ladder(rho, opts));
}

EquivalenceReport compare_definitions(const DensityMatrix& rho, const SolverOptions& opts) {
  const auto ladder = projection_ladder(rho, opts);
  EquivalenceReport out{decompose_entropic(rho, ladder), decompose_divergence(rho, ladder), 0.0};
  double gap = std::abs(out.entropic.total - out.divergence.total);
  for (const auto& [k, value] : out.entropic.irreducible) {
    gap = std::max(gap, std::abs(value - out.divergence.irreducible.at(k)));
  }
  out.gap = gap;
  out.entropic.definition_gap = gap;
  out.divergence.definition_gap = gap;
  return out;
}

double verify_equivalence(const DensityMatrix& rho, const SolverOptions& opts) {
  return compare_definitions(rho, opts).gap;
}

}  // namespace irrcorr
