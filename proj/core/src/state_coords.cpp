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

#include "irrcorr/state_coords.hpp"

#include <cmath>
#include <string>

#include "irrcorr/error.hpp"

namespace irrcorr {

template <class Tag>
Eigen::Index CoordinateVector<Tag>::slot(const MultiIndex& m) const {
  if (m.party_count() != n_) {
    throw InvalidArgument("multi-index " + m.str() + " has wrong party count for n = " +
                          std::to_string(n_));
  }
  if (m.is_identity()) {
    throw InvalidArgument("the identity coordinate is not stored");
  }
  return static_cast<Eigen::Index>(m.position() - 1);
}

template <class Tag>
void CoordinateVector<Tag>::throw_size_mismatch() {
  throw InvalidArgument("coordinate vector has wrong length for party count");
}

template class CoordinateVector<ThetaTag>;
template class CoordinateVector<EtaTag>;

ExponentialFamily::ExponentialFamily(int party_count, int max_weight)
    : n_(party_count), k_(max_weight) {
  require_party_count(party_count);
  if (max_weight < 1 || max_weight > party_count) {
    throw InvalidArgument("family order " + std::to_string(max_weight) +
                          " outside [1, " + std::to_string(party_count) + "]");
  }
}

void require_theta_in_range(const ThetaCoords& theta) {
  const double l1 = theta.values().cwiseAbs().sum();
  if (!std::isfinite(l1)) throw InvalidArgument("theta has non-finite entries");
  if (l1 > kThetaOverflowGuard) {
    throw InvalidArgument("sum |theta| = " + std::to_string(l1) + " exceeds overflow guard " +
                          std::to_string(kThetaOverflowGuard));
  }
}

Matrix hamiltonian(const ThetaCoords& theta) {
  const auto& basis = PauliBasis::for_parties(theta.party_count());
  const int dim = basis.dimension();
  Matrix h = Matrix::Zero(dim, dim);
  const auto& v = theta.values();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0.0) basis.term(static_cast<std::size_t>(i + 1)).accumulate(v(i), h);
  }
  return h;
}

namespace {

// exp(H - psi) and psi = ln Tr exp(H), shifted by the top eigenvalue.
struct Normalised {
  Matrix state;
  double log_partition;
};

Normalised normalised_exp(const ThetaCoords& theta) {
  require_theta_in_range(theta);
  const Spectrum s = eig_hermitian(hamiltonian(theta));
  const double top = s.eigenvalues.maxCoeff();
  const Eigen::VectorXd w = (s.eigenvalues.array() - top).exp();
  const double z = w.sum();
  Normalised out;
  out.log_partition = top + std::log(z);
  out.state = s.eigenvectors * (w / z).asDiagonal() * s.eigenvectors.adjoint();
  return out;
}

}  // namespace

DensityMatrix theta_to_density(const ThetaCoords& theta) {
  return DensityMatrix(normalised_exp(theta).state);
}

double psi(const ThetaCoords& theta) { return normalised_exp(theta).log_partition; }

EtaCoords density_to_eta(const DensityMatrix& rho) {
  const auto& basis = PauliBasis::for_parties(rho.party_count());
  EtaCoords eta(rho.party_count());
  auto& v = eta.values();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = basis.term(static_cast<std::size_t>(i + 1)).trace_with(rho.matrix());
  }
  return eta;
}

DensityMatrix eta_to_density(const EtaCoords& eta) {
  const auto& basis = PauliBasis::for_parties(eta.party_count());
  const int dim = basis.dimension();
  if (!eta.values().allFinite()) throw InvalidArgument("eta has non-finite entries");
  Matrix m = Matrix::Identity(dim, dim);
  const auto& v = eta.values();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0.0) basis.term(static_cast<std::size_t>(i + 1)).accumulate(v(i), m);
  }
  m /= static_cast<double>(dim);
  try {
    return DensityMatrix(m);
  } catch (const NotAStateError& e) {
    throw NotAStateError(std::string("eta coordinates do not describe a legitimate state: ") +
                         e.what());
  }
}

ThetaCoords density_to_theta(const DensityMatrix& rho) {
  const Matrix log_rho = rho.log();
  const auto& basis = PauliBasis::for_parties(rho.party_count());
  ThetaCoords theta(rho.party_count());
  auto& v = theta.values();
  const double dim = static_cast<double>(basis.dimension());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = basis.term(static_cast<std::size_t>(i + 1)).trace_with(log_rho) / dim;
  }
  return theta;
}

double phi(const EtaCoords& eta) {
  const DensityMatrix rho = eta_to_density(eta);
  rho.require_full_rank();
  return -von_neumann_entropy(rho);
}

IdentityResidual mixed_identity_check(const DensityMatrix& rho, const DensityMatrix& rho_p,
                                      const DensityMatrix& rho_pp) {
  if (rho.party_count() != rho_p.party_count() || rho.party_count() != rho_pp.party_count()) {
    throw InvalidArgument("mixed_identity_check: party counts differ");
  }
  const double lhs = relative_entropy(rho, rho_pp) - relative_entropy(rho, rho_p) -
                     relative_entropy(rho_p, rho_pp);
  const Eigen::VectorXd d_eta = density_to_eta(rho).values() - density_to_eta(rho_p).values();
  const Eigen::VectorXd d_theta =
      density_to_theta(rho_p).values() - density_to_theta(rho_pp).values();
  return {lhs, d_eta.dot(d_theta)};
}

bool in_family(const ThetaCoords& theta, const ExponentialFamily& family, double tol) {
  if (theta.party_count() != family.party_count()) {
    throw InvalidArgument("in_family: party count mismatch");
  }
  const auto& v = theta.values();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!family.supports(theta.index_at(static_cast<std::size_t>(i))) && std::abs(v(i)) > tol) {
      return false;
    }
  }
  return true;
}

bool in_family(const DensityMatrix& rho, const ExponentialFamily& family, double tol) {
  return in_family(density_to_theta(rho), family, tol);
}

}  // namespace irrcorr
