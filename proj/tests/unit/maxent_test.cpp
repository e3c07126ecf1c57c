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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "irrcorr/counterexample.hpp"
#include "irrcorr/error.hpp"
#include "irrcorr/random_state.hpp"
#include "oracles.hpp"

using namespace irrcorr;

TEST(maxent, full_order_constrains_everything) {
  Rng rng(1);
  const auto c = extract_constraints(random_state(3, rng), 3);
  EXPECT_EQ(c.indices().size(), 63u);
  EXPECT_EQ(extract_constraints(random_state(3, rng), 2).indices().size(), 9u + 27u);
  EXPECT_EQ(extract_constraints(random_state(3, rng), 1).indices().size(), 9u);
}

TEST(maxent, first_order_targets_are_bloch_components) {
  Rng rng(2);
  const DensityMatrix rho = random_product_state(3, rng, 0.8);
  const auto c = extract_constraints(rho, 1);
  for (std::size_t i = 0; i < c.indices().size(); ++i) {
    const MultiIndex& m = c.indices()[i];
    EXPECT_EQ(m.weight(), 1);
    int party = 0;
    while (m[party] == 0) ++party;
    const int keep[] = {party};
    EXPECT_NEAR(c.targets()(static_cast<Eigen::Index>(i)),
                oracle::dense_expectation(partial_trace(rho, keep).matrix(), MultiIndex{m[party]}),
                1e-14);
  }
}

TEST(maxent, counterexample_second_order_targets) {
  const DensityMatrix rho = counterexample::initial_state();
  const auto c = extract_constraints(rho, 2);
  auto target_of = [&](const MultiIndex& m) {
    const auto it = std::find(c.indices().begin(), c.indices().end(), m);
    EXPECT_NE(it, c.indices().end());
    return c.targets()(it - c.indices().begin());
  };
  const double t = std::tanh(1.0);
  EXPECT_NEAR(target_of(MultiIndex{3, 3, 0}), t, 1e-14);
  EXPECT_NEAR(target_of(MultiIndex{3, 0, 3}), t / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(target_of(MultiIndex{0, 0, 1}), t / std::sqrt(2.0), 1e-14);
}

TEST(maxent, order_out_of_range) {
  EXPECT_THROW(extract_constraints(DensityMatrix::maximally_mixed(3), 0), InvalidArgument);
  EXPECT_THROW(extract_constraints(DensityMatrix::maximally_mixed(3), 4), InvalidArgument);
  EXPECT_THROW(MarginalConstraints(2, 1, Eigen::VectorXd::Zero(5)), InvalidArgument);
}

TEST(maxent, maximally_mixed_is_a_fixed_point) {
  for (int k = 1; k <= 3; ++k) {
    const auto r = project(extract_constraints(DensityMatrix::maximally_mixed(3), k));
    EXPECT_EQ(r.iterations, 0);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(max_abs_diff(r.state.matrix(), DensityMatrix::maximally_mixed(3).matrix()), 1e-15);
  }
}

TEST(maxent, first_order_projection_is_product_of_marginals) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_state(3, rng);
    const auto r = project(extract_constraints(rho, 1));
    EXPECT_LT(max_abs_diff(r.state.matrix(), oracle::product_of_marginals(rho)), 1e-8);
  }
}

TEST(maxent, state_inside_family_projects_to_itself) {
  const DensityMatrix rho = counterexample::initial_state();
  const auto r = project(extract_constraints(rho, 2));
  EXPECT_LT(max_abs_diff(r.state.matrix(), rho.matrix()), 1e-8);
  EXPECT_LT((r.theta.values() - counterexample::initial_theta().values()).cwiseAbs().maxCoeff(),
            1e-7);
}

TEST(maxent, projection_properties_on_random_states) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(3, rng);
    const double s = von_neumann_entropy(rho);
    double previous = s;
    for (int k = 2; k >= 1; --k) {
      const auto c = extract_constraints(rho, k);
      const auto r = project(c);
      ASSERT_TRUE(r.converged);
      EXPECT_LE(r.final_residual, 1e-9);
      EXPECT_EQ(r.order, k);

      // Feasibility, coordinate by coordinate.
      for (std::size_t i = 0; i < c.indices().size(); ++i) {
        EXPECT_NEAR(oracle::dense_expectation(r.state.matrix(), c.indices()[i]),
                    c.targets()(static_cast<Eigen::Index>(i)), 1e-9);
      }
      // Structural family membership: exact zeros off the support.
      for (std::size_t i = 0; i < r.theta.size(); ++i) {
        if (r.theta.index_at(i).weight() > k) {
          EXPECT_EQ(r.theta.values()(static_cast<Eigen::Index>(i)), 0.0);
        }
      }
      EXPECT_TRUE(in_family(r.theta, c.family(), 1e-10));
      // Entropy dominance and nesting.
      const double sk = von_neumann_entropy(r.state);
      EXPECT_GE(sk, previous - 1e-9);
      previous = sk;
    }
  }
}

TEST(maxent, pythagorean_with_projection_as_probe) {
  Rng rng(5);
  const DensityMatrix rho = random_state(3, rng);
  const auto r = project(extract_constraints(rho, 2));
  const auto split = pythagorean_check(rho, r, r.state);
  EXPECT_NEAR(split.lhs, relative_entropy(rho, r.state), 1e-12);
  EXPECT_NEAR(split.lhs, split.rhs, 1e-12);
}

TEST(maxent, pythagorean_with_maximally_mixed_probe) {
  Rng rng(6);
  const DensityMatrix rho = random_state(3, rng);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
  const auto r = project(extract_constraints(rho, 2));
  const auto split = pythagorean_check(rho, r, mixed);
  EXPECT_NEAR(split.lhs, split.rhs, 1e-9);
  // S(rho || I/8) = 3 ln 2 - S(rho), so the split is an entropy difference.
  EXPECT_NEAR(split.lhs, 3.0 * std::log(2.0) - von_neumann_entropy(rho), 1e-12);
  EXPECT_NEAR(relative_entropy(rho, r.state),
              von_neumann_entropy(r.state) - von_neumann_entropy(rho), 1e-9);
}

TEST(maxent, pythagorean_random_probes) {
  Rng rng(7);
  const DensityMatrix rho = random_state(3, rng);
  for (int k = 1; k <= 2; ++k) {
    const auto r = project(extract_constraints(rho, k));
    for (int trial = 0; trial < 20; ++trial) {
      const auto split = pythagorean_check(rho, r, random_state(3, rng, kDefaultThetaScale, k));
      EXPECT_LT(std::abs(split.lhs - split.rhs), 1e-7);
    }
  }
}

TEST(maxent, pythagorean_rejects_probe_outside_family) {
  Rng rng(8);
  const DensityMatrix rho = random_state(3, rng);
  const auto r = project(extract_constraints(rho, 2));
  EXPECT_THROW(pythagorean_check(rho, r, random_state(3, rng)), InvalidArgument);
}

TEST(maxent, non_convergence_reports_order_and_residual) {
  Rng rng(9);
  SolverOptions opts;
  opts.max_iterations = 1;
  try {
    project(extract_constraints(random_state(3, rng), 2), opts);
    FAIL() << "expected ConvergenceError";
  } catch (const InfeasibleError&) {
    FAIL() << "a feasible problem must not be reported as infeasible";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.order(), 2);
    EXPECT_EQ(e.iterations(), 1);
    EXPECT_GT(e.residual(), opts.tolerance);
  }
}

TEST(maxent, infeasible_targets_are_reported) {
  // Bloch vector of length 0.8 * sqrt(2) > 1 is not a state.
  Eigen::VectorXd targets(3);
  targets << 0.8, 0.0, 0.8;
  EXPECT_THROW(project(MarginalConstraints(1, 1, targets)), InfeasibleError);
}

TEST(maxent, verbose_trace_logs_iterations) {
  Rng rng(10);
  std::ostringstream log;
  SolverOptions opts;
  opts.trace = &log;
  const auto r = project(extract_constraints(random_state(2, rng), 1), opts);
  const std::string text = log.str();
  EXPECT_NE(text.find("residual"), std::string::npos);
  EXPECT_EQ(static_cast<int>(std::count(text.begin(), text.end(), '\n')),
            r.iterations + 1);
}

TEST(maxent, four_party_projection_converges) {
  Rng rng(11);
  // 255 coordinates at the default scale would cross the sum |theta| guard.
  const DensityMatrix rho = random_state(4, rng, 0.15);
  for (int k = 1; k <= 3; ++k) {
    const auto r = project(extract_constraints(rho, k));
    EXPECT_TRUE(r.converged);
    EXPECT_GE(von_neumann_entropy(r.state), von_neumann_entropy(rho) - 1e-9);
  }
}
