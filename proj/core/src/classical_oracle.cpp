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

#include "irrcorr/classical_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "irrcorr/error.hpp"

namespace irrcorr {

namespace {

constexpr double kNormalisationTolerance = 1e-12;
constexpr double kDiagonalTolerance = 1e-12;

// Compact index of x restricted to the listed parties.
std::size_t restrict_outcome(std::size_t x, int n, std::span<const int> parties) {
  std::size_t out = 0;
  for (int p : parties) out = (out << 1) | ((x >> (n - 1 - p)) & 1u);
  return out;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 0);
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace

JointDistribution::JointDistribution(int party_count, std::vector<double> probabilities)
    : n_(party_count), p_(std::move(probabilities)) {
  require_party_count(party_count);
  if (p_.size() != static_cast<std::size_t>(dimension_of(n_))) {
    throw InvalidArgument("JointDistribution: expected " + std::to_string(dimension_of(n_)) +
                          " probabilities");
  }
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidArgument("JointDistribution: probabilities must be finite and >= 0");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormalisationTolerance) {
    throw InvalidArgument("JointDistribution: probabilities sum to " + std::to_string(sum));
  }
}

JointDistribution JointDistribution::from_diagonal(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  const Matrix off = m - Matrix(m.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() > kDiagonalTolerance) {
    throw InvalidArgument("state is not diagonal in the computational basis");
  }
  std::vector<double> p(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) p[static_cast<std::size_t>(i)] = m(i, i).real();
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v = std::max(0.0, v) / sum;
  return JointDistribution(rho.party_count(), std::move(p));
}

std::vector<double> JointDistribution::marginal(std::span<const int> parties) const {
  std::vector<double> out(std::size_t{1} << parties.size(), 0.0);
  for (std::size_t x = 0; x < p_.size(); ++x) out[restrict_outcome(x, n_, parties)] += p_[x];
  return out;
}

DensityMatrix JointDistribution::to_density() const {
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(p_.size()));
  for (std::size_t i = 0; i < p_.size(); ++i) diag(static_cast<Eigen::Index>(i)) = p_[i];
  return DensityMatrix(Matrix(diag.asDiagonal()));
}

double shannon_entropy(const JointDistribution& p) {
  double h = 0.0;
  for (double v : p.probabilities()) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double kl_divergence(const JointDistribution& p, const JointDistribution& q) {
  if (p.party_count() != q.party_count()) throw InvalidArgument("kl_divergence: size mismatch");
  double d = 0.0;
  for (std::size_t x = 0; x < p.probabilities().size(); ++x) {
    if (p[x] > 0.0) d += p[x] * std::log(p[x] / q[x]);
  }
  return d;
}

JointDistribution ipf_project(const JointDistribution& p, int order, const IpfOptions& opts) {
  const int n = p.party_count();
  if (order < 1 || order > n) {
    throw InvalidArgument("ipf_project: order " + std::to_string(order) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  for (double v : p.probabilities()) {
    if (v <= 0.0) throw InvalidArgument("ipf_project: distribution must be strictly positive");
  }
  const auto subsets = subsets_of_size(n, order);
  std::vector<std::vector<double>> targets;
  for (const auto& s : subsets) targets.push_back(p.marginal(s));

  const std::size_t size = p.probabilities().size();
  std::vector<double> q(size, 1.0 / static_cast<double>(size));

  auto residual = [&](const JointDistribution& current) {
    double worst = 0.0;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      const auto m = current.marginal(subsets[i]);
      for (std::size_t j = 0; j < m.size(); ++j) {
        worst = std::max(worst, std::abs(m[j] - targets[i][j]));
      }
    }
    return worst;
  };

  double res = residual(JointDistribution(n, q));
  for (int cycle = 0; cycle < opts.max_cycles; ++cycle) {
    if (res <= opts.tolerance) return JointDistribution(n, q);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::vector<double> current(targets[i].size(), 0.0);
      for (std::size_t x = 0; x < size; ++x) current[restrict_outcome(x, n, subsets[i])] += q[x];
      for (std::size_t x = 0; x < size; ++x) {
        const std::size_t y = restrict_outcome(x, n, subsets[i]);
        q[x] *= targets[i][y] / current[y];
      }
    }
    // Renormalise against drift so the iterate stays a valid distribution.
    const double sum = std::accumulate(q.begin(), q.end(), 0.0);
    for (double& v : q) v /= sum;
    const JointDistribution iterate(n, q);
    if (opts.on_cycle) opts.on_cycle(iterate);
    res = residual(iterate);
  }
  if (res <= opts.tolerance) return JointDistribution(n, q);
  throw ConvergenceError("ipf_project did not converge (order " + std::to_string(order) +
                             ", residual " + std::to_string(res) + ")",
                         order, opts.max_cycles, res);
}

std::map<int, double> classical_connected_info(const JointDistribution& p,
                                               const IpfOptions& opts) {
  const int n = p.party_count();
  std::map<int, double> entropy;
  entropy[n] = shannon_entropy(p);
  for (int k = 1; k < n; ++k) entropy[k] = shannon_entropy(ipf_project(p, k, opts));
  std::map<int, double> out;
  for (int k = 2; k <= n; ++k) out[k] = entropy[k - 1] - entropy[k];
  return out;
}

double multi_information(const JointDistribution& p) {
  double sum = 0.0;
  for (int i = 0; i < p.party_count(); ++i) {
    const int party[] = {i};
    const auto m = p.marginal(party);
    for (double v : m) {
      if (v > 0.0) sum -= v * std::log(v);
    }
  }
  return sum - shannon_entropy(p);
}

}  // namespace irrcorr
