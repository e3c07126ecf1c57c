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

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "irrcorr/hermitian.hpp"

namespace irrcorr {

/// Distribution over n bits. Outcome x is stored at slot x with party 0 as
/// the most significant bit, matching the computational basis of a density
/// matrix.
class JointDistribution {
 public:
  /// Throws InvalidArgument unless entries are >= 0, finite and sum to 1
  /// within 1e-12, with length 2^n.
  JointDistribution(int party_count, std::vector<double> probabilities);

  /// Diagonal of a state that is diagonal in the computational basis.
  static JointDistribution from_diagonal(const DensityMatrix& rho);

  int party_count() const noexcept { return n_; }
  const std::vector<double>& probabilities() const noexcept { return p_; }
  double operator[](std::size_t x) const { return p_[x]; }

  /// Marginal on the listed parties (ascending), same bit convention.
  std::vector<double> marginal(std::span<const int> parties) const;

  /// diag(p) as a density matrix.
  DensityMatrix to_density() const;

 private:
  int n_;
  std::vector<double> p_;
};

double shannon_entropy(const JointDistribution& p);
/// sum_x p(x) ln(p(x)/q(x)); q must be positive wherever p is.
double kl_divergence(const JointDistribution& p, const JointDistribution& q);

struct IpfOptions {
  double tolerance = 1e-10;
  int max_cycles = 10000;
  /// Called with the iterate after every full cycle.
  std::function<void(const JointDistribution&)> on_cycle;
};

/// Maximum-entropy distribution with the same order-k marginals as p, by
/// iterative proportional fitting from the uniform distribution. Each cycle
/// rescales against every k-subset of parties in lexicographic order; stops
/// when the largest marginal mismatch is <= tolerance.
///
/// Throws ConvergenceError after max_cycles.
JointDistribution ipf_project(const JointDistribution& p, int order, const IpfOptions& opts = {});

/// Connected information of each order k = 2..n:
///   C_k = H(p*_{k-1}) - H(p*_k), p*_n = p.
std::map<int, double> classical_connected_info(const JointDistribution& p,
                                               const IpfOptions& opts = {});

/// sum_i H(p_i) - H(p)
double multi_information(const JointDistribution& p);

}  // namespace irrcorr
