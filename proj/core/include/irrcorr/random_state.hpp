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

#include <cstdint>
#include <random>

#include "irrcorr/state_coords.hpp"

namespace irrcorr {

/// Default standard deviation for random theta coordinates. Small enough
/// that generated states are comfortably full rank.
inline constexpr double kDefaultThetaScale = 0.3;

using Rng = std::mt19937_64;

/// Theta with each coordinate i.i.d. N(0, scale^2). When max_weight is given,
/// coordinates of weight above it are left at zero, i.e. the state lies in
/// that exponential family.
ThetaCoords random_theta(int n, double scale, Rng& rng, int max_weight = -1);
ThetaCoords random_theta(int n, double scale, std::uint64_t seed);

DensityMatrix random_state(int n, Rng& rng, double scale = kDefaultThetaScale,
                           int max_weight = -1);

/// Product of n random single-qubit full-rank states.
DensityMatrix random_product_state(int n, Rng& rng, double scale = kDefaultThetaScale);

/// Haar-distributed unitary of the given dimension (QR of a complex Ginibre
/// matrix with the phase fix).
Matrix random_unitary(int dimension, Rng& rng);

}  // namespace irrcorr
