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

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "irrcorr/classical_oracle.hpp"
#include "irrcorr/correlations.hpp"
#include "irrcorr/counterexample.hpp"
#include "irrcorr/error.hpp"
#include "irrcorr/maxent.hpp"
#include "irrcorr/random_state.hpp"
#include "irrcorr/state_io.hpp"

namespace {

using irrcorr::DensityMatrix;
using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kNonConvergence = 3,
  kAssertionFailed = 4,
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw irrcorr::InvalidArgument("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DensityMatrix load_state(const std::string& path) {
  return irrcorr::parse_state_spec_text(read_input(path)).to_density();
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

struct SolverFlags {
  double tolerance = 1e-9;
  int max_iterations = 500;
  bool verbose_trace = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol", tolerance, "Marginal residual tolerance")->capture_default_str();
    cmd->add_option("--max-iter", max_iterations, "Maximum solver iterations")
        ->capture_default_str();
    cmd->add_flag("--verbose-trace", verbose_trace, "Log per-iteration residuals to stderr");
  }

  irrcorr::SolverOptions options() const {
    irrcorr::SolverOptions opts;
    opts.tolerance = tolerance;
    opts.max_iterations = max_iterations;
    if (verbose_trace) opts.trace = &std::cerr;
    return opts;
  }
};

double unit_for(bool bits) { return bits ? std::log(2.0) : 1.0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducible multiparty correlations of full-rank multi-qubit states"};
  app.require_subcommand(1);
  std::function<int()> action;

  // decompose
  std::string decompose_input;
  bool decompose_bits = false;
  SolverFlags decompose_solver;
  auto* decompose = app.add_subcommand("decompose", "Irreducible correlations by both definitions");
  decompose->add_option("input", decompose_input, "State JSON file ('-' for stdin)")->required();
  decompose->add_flag("--bits", decompose_bits, "Report in bits instead of nats");
  decompose_solver.attach(decompose);
  decompose->callback([&] {
    action = [&] {
      const DensityMatrix rho = load_state(decompose_input);
      emit(irrcorr::to_json(irrcorr::compare_definitions(rho, decompose_solver.options()),
                            unit_for(decompose_bits)));
      return kOk;
    };
  });

  // convert
  std::string convert_input;
  std::string convert_to;
  auto* convert = app.add_subcommand("convert", "Convert a state between theta, eta and matrix form");
  convert->add_option("input", convert_input, "State JSON file ('-' for stdin)")->required();
  convert->add_option("--to", convert_to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"theta", "eta", "matrix"}));
  convert->callback([&] {
    action = [&] {
      const DensityMatrix rho = load_state(convert_input);
      emit(irrcorr::to_json(
          irrcorr::StateSpec::from_density(rho, irrcorr::parse_representation(convert_to))));
      return kOk;
    };
  });

  // counterexample
  double ce_theta_tol = 1e-3;
  double ce_eta_tol = 1e-9;
  bool ce_json = false;
  SolverFlags ce_solver;
  auto* ce = app.add_subcommand("counterexample",
                                "Local CNOT with an ancilla creating three-party correlation");
  ce->add_option("--tol", ce_theta_tol, "Tolerance for the three-decimal theta values")
      ->capture_default_str();
  ce->add_option("--eta-tol", ce_eta_tol, "Tolerance for the closed-form eta values")
      ->capture_default_str();
  ce->add_option("--solver-tol", ce_solver.tolerance, "Projection residual tolerance")
      ->capture_default_str();
  ce->add_option("--max-iter", ce_solver.max_iterations, "Maximum solver iterations")
      ->capture_default_str();
  ce->add_flag("--verbose-trace", ce_solver.verbose_trace, "Log solver residuals to stderr");
  ce->add_flag("--json", ce_json, "JSON output (the default; accepted for scripts)");
  ce->callback([&] {
    action = [&] {
      const auto report = irrcorr::run_counterexample(ce_solver.options());
      emit(irrcorr::to_json(report));
      std::string failure;
      for (const auto& v : report.eta_checks) {
        if (failure.empty() && !(v.error() <= ce_eta_tol)) failure = "eta^" + v.index.str();
      }
      for (const auto& v : report.theta_checks) {
        if (failure.empty() && !(v.error() <= ce_theta_tol)) failure = "theta^" + v.index.str();
      }
      if (failure.empty() && !(report.c3_before < 1e-7)) failure = "c3_before < 1e-7";
      if (failure.empty() && !(report.c3_after > 1e-6)) failure = "c3_after > 1e-6";
      if (!failure.empty()) {
        std::cerr << "assertion failed: " << failure << '\n';
        return kAssertionFailed;
      }
      return kOk;
    };
  });

  // project
  std::string project_input;
  int project_order = 0;
  SolverFlags project_solver;
  auto* proj = app.add_subcommand("project", "Maximum-entropy projection onto an order-k family");
  proj->add_option("input", project_input, "State JSON file ('-' for stdin)")->required();
  proj->add_option("--order", project_order, "Marginal order k")->required();
  project_solver.attach(proj);
  proj->callback([&] {
    action = [&] {
      const DensityMatrix rho = load_state(project_input);
      rho.require_full_rank();
      emit(irrcorr::to_json(irrcorr::project(irrcorr::extract_constraints(rho, project_order),
                                             project_solver.options())));
      return kOk;
    };
  });

  // entropy
  std::string entropy_input;
  bool entropy_bits = false;
  auto* entropy = app.add_subcommand("entropy", "Von Neumann entropy");
  entropy->add_option("input", entropy_input, "State JSON file ('-' for stdin)")->required();
  entropy->add_flag("--bits", entropy_bits, "Report in bits instead of nats");
  entropy->callback([&] {
    action = [&] {
      const DensityMatrix rho = load_state(entropy_input);
      emit({{"entropy", irrcorr::round_output(irrcorr::von_neumann_entropy(rho) /
                                              unit_for(entropy_bits))},
            {"units", entropy_bits ? "bits" : "nats"}});
      return kOk;
    };
  });

  // relent
  std::string relent_rho, relent_sigma;
  bool relent_bits = false;
  auto* relent = app.add_subcommand("relent", "Quantum relative entropy S(rho||sigma)");
  relent->add_option("rho", relent_rho, "State JSON file for rho")->required();
  relent->add_option("sigma", relent_sigma, "State JSON file for sigma")->required();
  relent->add_flag("--bits", relent_bits, "Report in bits instead of nats");
  relent->callback([&] {
    action = [&] {
      const double s =
          irrcorr::relative_entropy(load_state(relent_rho), load_state(relent_sigma));
      emit({{"relative_entropy", irrcorr::round_output(s / unit_for(relent_bits))},
            {"units", relent_bits ? "bits" : "nats"}});
      return kOk;
    };
  });

  // random
  int random_n = 3;
  std::uint64_t random_seed = 0;
  double random_scale = irrcorr::kDefaultThetaScale;
  std::string random_to = "theta";
  auto* random = app.add_subcommand("random", "Reproducible random full-rank state");
  random->add_option("--n", random_n, "Party count")->check(CLI::Range(1, 4))->capture_default_str();
  random->add_option("--seed", random_seed, "Seed")->capture_default_str();
  random->add_option("--scale", random_scale, "Standard deviation of each theta coordinate")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  random->add_option("--to", random_to, "Output representation")
      ->check(CLI::IsMember({"theta", "eta", "matrix"}))
      ->capture_default_str();
  random->callback([&] {
    action = [&] {
      const auto theta = irrcorr::random_theta(random_n, random_scale, random_seed);
      const auto rep = irrcorr::parse_representation(random_to);
      if (rep == irrcorr::Representation::theta) {
        emit(irrcorr::to_json(irrcorr::StateSpec{random_n, theta}));
      } else {
        emit(irrcorr::to_json(
            irrcorr::StateSpec::from_density(irrcorr::theta_to_density(theta), rep)));
      }
      return kOk;
    };
  });

  // oracle (hidden, for debugging the classical cross-check)
  std::string oracle_input;
  auto* oracle = app.add_subcommand("oracle", "Classical IPF connected information");
  oracle->group("");
  oracle->add_option("input", oracle_input, "Diagonal state JSON file")->required();
  oracle->callback([&] {
    action = [&] {
      const auto p = irrcorr::JointDistribution::from_diagonal(load_state(oracle_input));
      json out;
      for (const auto& [k, c] : irrcorr::classical_connected_info(p)) {
        out["c" + std::to_string(k)] = irrcorr::round_output(c);
      }
      out["c_total"] = irrcorr::round_output(irrcorr::multi_information(p));
      emit(out);
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }

  try {
    return action();
  } catch (const irrcorr::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " [residual " << e.residual() << "]\n";
    return kNonConvergence;
  } catch (const irrcorr::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const irrcorr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}
