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

#include "irrcorr/random_state.hpp"

#include <cmath>

#include "irrcorr/error.hpp"

namespace irrcorr {

ThetaCoords random_theta(int n, double scale, Rng& rng, int max_weight) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw InvalidArgument("random_theta: scale must be a finite non-negative number");
  }
  ThetaCoords theta(n);
  if (max_weight < 0) max_weight = n;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double draw = gauss(rng);
    if (theta.index_at(i).weight() <= max_weight) {
      theta.values()(static_cast<Eigen::Index>(i)) = scale * draw;
    }
  }
  return theta;
}

ThetaCoords random_theta(int n, double scale, std::uint64_t seed) {
  Rng rng(seed);
  return random_theta(n, scale, rng);
}

DensityMatrix random_state(int n, Rng& rng, double scale, int max_weight) {
  return theta_to_density(random_theta(n, scale, rng, max_weight));
}

DensityMatrix random_product_state(int n, Rng& rng, double scale) {
  Matrix m = Matrix::Identity(1, 1);
  for (int p = 0; p < n; ++p) m = kron(m, random_state(1, rng, scale).matrix());
  return DensityMatrix(m);
}

Matrix random_unitary(int dimension, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(dimension, dimension);
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0);
  }
  return q;
}

}  // namespace irrcorr
