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

#include "irrcorr/maxent.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "irrcorr/error.hpp"

namespace irrcorr {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;
constexpr double kProbeFamilyTolerance = 1e-8;

std::string describe(const char* what, int order, int iterations, double residual) {
  std::ostringstream os;
  os << what << " (order " << order << ", " << iterations << " iterations, residual "
     << residual << ")";
  return os.str();
}

// Dual objective on the support of the family.
class DualObjective {
 public:
  explicit DualObjective(const MarginalConstraints& c)
      : constraints_(c), basis_(PauliBasis::for_parties(c.party_count())) {
    positions_.reserve(c.indices().size());
    for (const auto& m : c.indices()) positions_.push_back(m.position());
  }

  struct Point {
    Eigen::VectorXd x;
    double value = 0.0;
    Eigen::VectorXd gradient;
    Matrix state;
  };

  Point evaluate(const Eigen::VectorXd& x) const {
    const int dim = basis_.dimension();
    Matrix h = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      basis_.term(positions_[static_cast<std::size_t>(i)]).accumulate(x(i), h);
    }
    const Spectrum s = eig_hermitian(h);
    const double top = s.eigenvalues.maxCoeff();
    const Eigen::VectorXd w = (s.eigenvalues.array() - top).exp();
    const double z = w.sum();

    Point p;
    p.x = x;
    p.state = s.eigenvectors * (w / z).asDiagonal() * s.eigenvectors.adjoint();
    p.value = top + std::log(z) - x.dot(constraints_.targets());
    p.gradient.resize(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      p.gradient(i) = basis_.term(positions_[static_cast<std::size_t>(i)]).trace_with(p.state) -
                      constraints_.targets()(i);
    }
    return p;
  }

  std::size_t position(Eigen::Index i) const { return positions_[static_cast<std::size_t>(i)]; }

 private:
  const MarginalConstraints& constraints_;
  const PauliBasis& basis_;
  std::vector<std::size_t> positions_;
};

double max_abs(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

MarginalConstraints::MarginalConstraints(int party_count, int order, Eigen::VectorXd targets)
    : family_(party_count, order),
      indices_(constrained_indices(party_count, order)),
      targets_(std::move(targets)) {
  if (static_cast<std::size_t>(targets_.size()) != indices_.size()) {
    throw InvalidArgument("MarginalConstraints: expected " + std::to_string(indices_.size()) +
                          " targets, got " + std::to_string(targets_.size()));
  }
  if (!targets_.allFinite() || max_abs(targets_) > 1.0) {
    throw InvalidArgument("MarginalConstraints: targets must be finite and within [-1, 1]");
  }
}

std::vector<MultiIndex> MarginalConstraints::constrained_indices(int party_count, int order) {
  const ExponentialFamily family(party_count, order);
  std::vector<MultiIndex> out;
  for (const auto& m : enumerate_indices(party_count)) {
    if (!m.is_identity() && family.supports(m)) out.push_back(m);
  }
  return out;
}

MarginalConstraints extract_constraints(const DensityMatrix& rho, int order) {
  const int n = rho.party_count();
  const auto indices = MarginalConstraints::constrained_indices(n, order);
  const auto& basis = PauliBasis::for_parties(n);
  Eigen::VectorXd targets(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    targets(static_cast<Eigen::Index>(i)) = basis.term(indices[i].position()).trace_with(rho.matrix());
  }
  return MarginalConstraints(n, order, std::move(targets));
}

ProjectionResult project(const MarginalConstraints& constraints, const SolverOptions& opts) {
  const DualObjective objective(constraints);
  const auto d = static_cast<Eigen::Index>(constraints.indices().size());
  const int order = constraints.order();

  auto finish = [&](const DualObjective::Point& p, int iterations) {
    ThetaCoords theta(constraints.party_count());
    for (Eigen::Index i = 0; i < d; ++i) {
      theta.values()(static_cast<Eigen::Index>(objective.position(i) - 1)) = p.x(i);
    }
    const double residual = max_abs(p.gradient);
    return ProjectionResult{order,          DensityMatrix(p.state), std::move(theta), iterations,
                            residual, residual <= opts.tolerance};
  };

  DualObjective::Point current = objective.evaluate(Eigen::VectorXd::Zero(d));
  Eigen::MatrixXd inv_hessian = Eigen::MatrixXd::Identity(d, d);
  bool fresh_hessian = true;
  // Set once a trial step is rejected for crossing the overflow guard; a
  // later failure is then reported as divergence rather than slow progress.
  bool hit_guard = false;

  for (int iter = 0;; ++iter) {
    const double residual = max_abs(current.gradient);
    if (opts.trace != nullptr) {
      *opts.trace << "order " << order << " iter " << iter << " residual " << residual
                  << " dual " << current.value << '\n';
    }
    if (residual <= opts.tolerance) return finish(current, iter);
    if (iter >= opts.max_iterations) {
      if (hit_guard) {
        throw InfeasibleError(describe("projection diverging toward the boundary", order, iter,
                                       residual),
                              order, iter, residual);
      }
      throw ConvergenceError(describe("projection did not converge", order, iter, residual),
                             order, iter, residual);
    }

    Eigen::VectorXd direction = -inv_hessian * current.gradient;
    double slope = current.gradient.dot(direction);
    if (!(slope < 0.0)) {
      inv_hessian.setIdentity();
      fresh_hessian = true;
      direction = -current.gradient;
      slope = current.gradient.dot(direction);
    }

    // Armijo backtracking. The slack term absorbs roundoff in the dual value
    // once its decrease drops below double precision.
    const double slack = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, std::abs(current.value));
    double step = 1.0;
    bool accepted = false;
    DualObjective::Point trial;
    for (int bt = 0; bt < kMaxBacktracks; ++bt, step *= 0.5) {
      const Eigen::VectorXd x = current.x + step * direction;
      if (x.cwiseAbs().sum() > kThetaOverflowGuard) {
        hit_guard = true;
        continue;
      }
      trial = objective.evaluate(x);
      if (trial.value <= current.value + kArmijo * step * slope + slack) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (!fresh_hessian) {
        inv_hessian.setIdentity();
        fresh_hessian = true;
        continue;
      }
      if (hit_guard) {
        throw InfeasibleError(describe("projection diverging toward the boundary", order, iter,
                                       residual),
                              order, iter, residual);
      }
      throw ConvergenceError(describe("line search failed", order, iter, residual), order, iter,
                             residual);
    }

    const Eigen::VectorXd s = trial.x - current.x;
    const Eigen::VectorXd y = trial.gradient - current.gradient;
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      if (fresh_hessian) {
        inv_hessian *= sy / y.squaredNorm();
        fresh_hessian = false;
      }
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = inv_hessian * y;
      // H+ = (I - rho s y^T) H (I - rho y s^T) + rho s s^T, expanded.
      inv_hessian += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) -
                     rho * (hy * s.transpose() + s * hy.transpose());
    }
    current = std::move(trial);
  }
}

PythagoreanSplit pythagorean_check(const DensityMatrix& rho_star,
                                   const ProjectionResult& projection,
                                   const DensityMatrix& probe) {
  const ExponentialFamily family(projection.state.party_count(), projection.order);
  if (!in_family(probe, family, kProbeFamilyTolerance)) {
    throw InvalidArgument("pythagorean_check: probe is outside the order-" +
                          std::to_string(projection.order) + " family");
  }
  return {relative_entropy(rho_star, probe),
          relative_entropy(rho_star, projection.state) +
              relative_entropy(projection.state, probe)};
}

}  // namespace irrcorr
