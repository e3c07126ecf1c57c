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

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "irrcorr/classical_oracle.hpp"
#include "irrcorr/correlations.hpp"
#include "irrcorr/counterexample.hpp"
#include "irrcorr/hermitian.hpp"
#include "irrcorr/maxent.hpp"
#include "irrcorr/state_coords.hpp"

namespace irrcorr {

/// JSON numbers are written with this many significant digits.
inline constexpr int kOutputDigits = 12;
/// Coordinates smaller than this in magnitude are omitted on output.
inline constexpr double kOmitBelow = 1e-13;

enum class Representation { theta, eta, matrix };

Representation parse_representation(std::string_view name);
std::string to_string(Representation r);

/// A state as written in a file: exactly one of a theta map, an eta map, or a
/// dense row-major matrix, together with the party count.
///
///   {"n": 3, "theta": {"330": 1.0, "303": 0.7071067811865475}}
///   {"n": 1, "eta": {"3": 0.5}}
///   {"n": 1, "matrix": [[0.75, 0], [0, 0], [0, 0], [0.25, 0]]}
struct StateSpec {
  int party_count;
  std::variant<ThetaCoords, EtaCoords, Matrix> data;

  Representation representation() const;
  /// Throws NotAStateError / InvalidArgument when the data is not a state.
  DensityMatrix to_density() const;

  static StateSpec from_density(const DensityMatrix& rho, Representation r);
};

StateSpec parse_state_spec(const nlohmann::json& j);
StateSpec parse_state_spec_text(std::string_view text);
nlohmann::json to_json(const StateSpec& spec);

/// Round to kOutputDigits significant digits.
double round_output(double x);

/// {"330": 1.0, ...}, skipping entries below kOmitBelow.
template <class Tag>
nlohmann::json coords_to_json(const CoordinateVector<Tag>& coords);

nlohmann::json to_json(const CorrelationReport& report, double unit = 1.0);
/// Entropic measures at top level (c2.., c_total), divergence measures under
/// "divergence", definition_gap and per-projection diagnostics.
nlohmann::json to_json(const EquivalenceReport& report, double unit = 1.0);
nlohmann::json to_json(const ProjectionResult& result);
nlohmann::json to_json(const CounterexampleReport& report);

}  // namespace irrcorr
