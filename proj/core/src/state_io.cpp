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

#include "irrcorr/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "irrcorr/error.hpp"

namespace irrcorr {

using nlohmann::json;

Representation parse_representation(std::string_view name) {
  if (name == "theta") return Representation::theta;
  if (name == "eta") return Representation::eta;
  if (name == "matrix") return Representation::matrix;
  throw InvalidArgument("unknown representation \"" + std::string(name) +
                        "\" (expected theta, eta or matrix)");
}

std::string to_string(Representation r) {
  switch (r) {
    case Representation::theta: return "theta";
    case Representation::eta: return "eta";
    case Representation::matrix: return "matrix";
  }
  return "unknown";
}

double round_output(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
  return std::strtod(buf, nullptr);
}

Representation StateSpec::representation() const {
  return static_cast<Representation>(data.index());
}

DensityMatrix StateSpec::to_density() const {
  return std::visit(
      [](const auto& d) -> DensityMatrix {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ThetaCoords>) {
          return theta_to_density(d);
        } else if constexpr (std::is_same_v<T, EtaCoords>) {
          return eta_to_density(d);
        } else {
          return DensityMatrix(d);
        }
      },
      data);
}

StateSpec StateSpec::from_density(const DensityMatrix& rho, Representation r) {
  switch (r) {
    case Representation::theta: return {rho.party_count(), density_to_theta(rho)};
    case Representation::eta: return {rho.party_count(), density_to_eta(rho)};
    case Representation::matrix: return {rho.party_count(), rho.matrix()};
  }
  throw InvalidArgument("unknown representation");
}

namespace {

template <class Tag>
CoordinateVector<Tag> coords_from_json(int n, const json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgument(std::string("\"") + key + "\" must be an object");
  CoordinateVector<Tag> coords(n);
  for (const auto& [name, value] : j.items()) {
    const MultiIndex m = MultiIndex::parse(name);
    if (m.party_count() != n) {
      throw InvalidArgument("index \"" + name + "\" does not have " + std::to_string(n) +
                            " digits");
    }
    if (m.is_identity()) {
      throw InvalidArgument("index \"" + name + "\" is the identity; it is fixed by normalisation");
    }
    if (!value.is_number()) throw InvalidArgument("value of \"" + name + "\" is not a number");
    coords[m] = value.template get<double>();
  }
  return coords;
}

Matrix matrix_from_json(int n, const json& j) {
  const auto dim = static_cast<Eigen::Index>(dimension_of(n));
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dim * dim)) {
    throw InvalidArgument("\"matrix\" must be a row-major array of " +
                          std::to_string(dim * dim) + " [re, im] pairs");
  }
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const json& entry = j[static_cast<std::size_t>(r * dim + c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw InvalidArgument("matrix entries must be [re, im] number pairs");
      }
      m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

}  // namespace

template <class Tag>
json coords_to_json(const CoordinateVector<Tag>& coords) {
  json out = json::object();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const double v = coords.values()(static_cast<Eigen::Index>(i));
    if (std::abs(v) >= kOmitBelow) out[coords.index_at(i).str()] = round_output(v);
  }
  return out;
}

template json coords_to_json(const CoordinateVector<ThetaTag>&);
template json coords_to_json(const CoordinateVector<EtaTag>&);

StateSpec parse_state_spec(const json& j) {
  if (!j.is_object()) throw InvalidArgument("state description must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw InvalidArgument("state description needs an integer \"n\"");
  }
  const int n = j["n"].get<int>();
  require_party_count(n);
  const int present = static_cast<int>(j.contains("theta")) + static_cast<int>(j.contains("eta")) +
                      static_cast<int>(j.contains("matrix"));
  if (present != 1) {
    throw InvalidArgument("state description needs exactly one of \"theta\", \"eta\", \"matrix\"");
  }
  if (j.contains("theta")) return {n, coords_from_json<ThetaTag>(n, j["theta"], "theta")};
  if (j.contains("eta")) return {n, coords_from_json<EtaTag>(n, j["eta"], "eta")};
  return {n, matrix_from_json(n, j["matrix"])};
}

StateSpec parse_state_spec_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  return parse_state_spec(j);
}

json to_json(const StateSpec& spec) {
  json out;
  out["n"] = spec.party_count;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ThetaCoords>) {
          out["theta"] = coords_to_json(d);
        } else if constexpr (std::is_same_v<T, EtaCoords>) {
          out["eta"] = coords_to_json(d);
        } else {
          json entries = json::array();
          for (Eigen::Index r = 0; r < d.rows(); ++r) {
            for (Eigen::Index c = 0; c < d.cols(); ++c) {
              entries.push_back({round_output(d(r, c).real()), round_output(d(r, c).imag())});
            }
          }
          out["matrix"] = std::move(entries);
        }
      },
      spec.data);
  return out;
}

namespace {

json diagnostics_json(const CorrelationReport& report) {
  json projections = json::array();
  for (const auto& d : report.diagnostics) {
    projections.push_back({{"order", d.order},
                           {"iterations", d.iterations},
                           {"residual", round_output(d.residual)},
                           {"converged", d.converged}});
  }
  return projections;
}

void write_measures(json& out, const CorrelationReport& report, double unit) {
  for (const auto& [k, value] : report.irreducible) {
    out["c" + std::to_string(k)] = round_output(value / unit);
  }
  out["c_total"] = round_output(report.total / unit);
}

}  // namespace

json to_json(const CorrelationReport& report, double unit) {
  json out;
  out["n"] = report.party_count;
  out["units"] = unit == 1.0 ? "nats" : "bits";
  write_measures(out, report, unit);
  json entropies = json::object();
  for (const auto& [k, s] : report.projected_entropies) {
    entropies[std::to_string(k)] = round_output(s / unit);
  }
  out["projected_entropies"] = std::move(entropies);
  out["definition_gap"] = round_output(report.definition_gap / unit);
  out["projections"] = diagnostics_json(report);
  return out;
}

json to_json(const EquivalenceReport& report, double unit) {
  json out = to_json(report.entropic, unit);
  json divergence;
  write_measures(divergence, report.divergence, unit);
  out["divergence"] = std::move(divergence);
  out["definition_gap"] = round_output(report.gap / unit);
  return out;
}

json to_json(const ProjectionResult& result) {
  return {{"order", result.order},
          {"state", to_json(StateSpec{result.state.party_count(), result.theta})},
          {"entropy", round_output(von_neumann_entropy(result.state))},
          {"iterations", result.iterations},
          {"residual", round_output(result.final_residual)},
          {"converged", result.converged}};
}

json to_json(const CounterexampleReport& report) {
  auto checks = [](const std::vector<ComparedValue>& values) {
    json out = json::array();
    for (const auto& v : values) {
      out.push_back({{"index", v.index.str()},
                     {"expected", round_output(v.expected)},
                     {"computed", round_output(v.computed)},
                     {"error", round_output(v.error())}});
    }
    return out;
  };
  return {{"theta_initial", coords_to_json(density_to_theta(report.rho_initial))},
          {"eta_final", coords_to_json(report.eta_final)},
          {"theta_final", coords_to_json(report.theta_final)},
          {"c3_before", round_output(report.c3_before)},
          {"c3_after", round_output(report.c3_after)},
          {"before", to_json(report.before)},
          {"after", to_json(report.after)},
          {"eta_checks", checks(report.eta_checks)},
          {"theta_checks", checks(report.theta_checks)},
          {"eta_error", round_output(report.eta_error)},
          {"theta_error", round_output(report.theta_error)}};
}

}  // namespace irrcorr
