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

#include <cstddef>
#include <variant>

#include <Eigen/Dense>

#include "irrcorr/hermitian.hpp"
#include "irrcorr/pauli_basis.hpp"

namespace irrcorr {

/// Sum |theta| bound beyond which exp(sum theta sigma) is rejected.
inline constexpr double kThetaOverflowGuard = 50.0;

/// Real coordinate vector over the 4^n - 1 non-identity indices, stored in
/// lexicographic order (slot = index.position() - 1). The identity coordinate
/// is never stored: for theta it is -psi, for eta it is 1.
template <class Tag>
class CoordinateVector {
 public:
  explicit CoordinateVector(int n)
      : n_((require_party_count(n), n)),
        values_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(index_count(n) - 1))) {}
  CoordinateVector(int n, Eigen::VectorXd values) : CoordinateVector(n) {
    if (values.size() != values_.size()) {
      throw_size_mismatch();
    }
    values_ = std::move(values);
  }

  int party_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }
  const Eigen::VectorXd& values() const noexcept { return values_; }
  Eigen::VectorXd& values() noexcept { return values_; }

  double operator[](const MultiIndex& m) const { return values_(slot(m)); }
  double& operator[](const MultiIndex& m) { return values_(slot(m)); }

  /// MultiIndex for storage slot i.
  MultiIndex index_at(std::size_t i) const { return MultiIndex::from_position(n_, i + 1); }

 private:
  Eigen::Index slot(const MultiIndex& m) const;
  [[noreturn]] static void throw_size_mismatch();

  int n_;
  Eigen::VectorXd values_;
};

struct ThetaTag {};
struct EtaTag {};
/// Exponential-family (natural) coordinates: rho = exp(sum theta^m sigma_m - psi).
using ThetaCoords = CoordinateVector<ThetaTag>;
/// Expectation coordinates: eta^m = Tr(rho sigma_m).
using EtaCoords = CoordinateVector<EtaTag>;

/// Full-rank states whose theta vanishes on every index with more than
/// max_weight non-identity factors. max_weight == n is the whole state space.
class ExponentialFamily {
 public:
  ExponentialFamily(int party_count, int max_weight);

  int party_count() const noexcept { return n_; }
  int max_weight() const noexcept { return k_; }
  bool supports(const MultiIndex& m) const { return m.weight() <= k_; }

 private:
  int n_;
  int k_;
};

/// sum_m theta^m sigma_m (no normalisation term).
Matrix hamiltonian(const ThetaCoords& theta);

DensityMatrix theta_to_density(const ThetaCoords& theta);
EtaCoords density_to_eta(const DensityMatrix& rho);
/// Throws NotAStateError ("not a legitimate state") when the reconstruction
/// is not positive semidefinite.
DensityMatrix eta_to_density(const EtaCoords& eta);
ThetaCoords density_to_theta(const DensityMatrix& rho);

/// Log-partition function ln Tr exp(sum theta sigma). Strictly convex.
double psi(const ThetaCoords& theta);
/// Negative von Neumann entropy of the state with expectations eta.
double phi(const EtaCoords& eta);

/// Both sides of the three-state identity
///   S(rho||rho'') - S(rho||rho') - S(rho'||rho'')
///     = sum_m (eta^m - eta'^m)(theta'^m - theta''^m).
struct IdentityResidual {
  double lhs;
  double rhs;
  double residual() const { return lhs - rhs; }
};

IdentityResidual mixed_identity_check(const DensityMatrix& rho, const DensityMatrix& rho_p,
                                      const DensityMatrix& rho_pp);

bool in_family(const ThetaCoords& theta, const ExponentialFamily& family, double tol);
bool in_family(const DensityMatrix& rho, const ExponentialFamily& family, double tol);

/// Guard check shared by everything that exponentiates theta.
void require_theta_in_range(const ThetaCoords& theta);

}  // namespace irrcorr
