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

#include "irrcorr/counterexample.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "irrcorr/state_coords.hpp"
#include "oracles.hpp"

using namespace irrcorr;

namespace {

const CounterexampleReport& report() {
  static const CounterexampleReport r = run_counterexample();
  return r;
}

}  // namespace

TEST(counterexample, final_eta_closed_forms) {
  const double t = std::tanh(1.0);
  const double r2 = std::sqrt(2.0);
  const auto& eta = report().eta_final;
  EXPECT_NEAR(eta[(MultiIndex{0, 0, 1})], t / r2, 1e-9);
  EXPECT_NEAR(eta[(MultiIndex{0, 3, 3})], t * t / r2, 1e-9);
  EXPECT_NEAR(eta[(MultiIndex{3, 0, 3})], t * t / r2, 1e-9);
  EXPECT_NEAR(eta[(MultiIndex{3, 3, 0})], t * t, 1e-9);
  EXPECT_NEAR(eta[(MultiIndex{3, 3, 1})], t * t * t / r2, 1e-9);
  EXPECT_NEAR(eta[(MultiIndex{3, 3, 1})], 0.3123602852, 1e-10);
  EXPECT_LT(report().eta_error, 1e-9);
}

// The full 63-vector against the analytic action of the induced channel.
TEST(counterexample, final_eta_matches_channel_oracle) {
  const auto expected = oracle::counterexample_final_eta(report().rho_initial.matrix());
  const auto& eta = report().eta_final;
  ASSERT_EQ(expected.size(), eta.size());
  int nonzero = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(eta.values()(static_cast<Eigen::Index>(i)), expected[i], 1e-12)
        << eta.index_at(i).str();
    if (std::abs(expected[i]) > 1e-12) ++nonzero;
  }
  // The five listed values are the complete nonzero set.
  EXPECT_EQ(nonzero, 5);
}

TEST(counterexample, final_theta_three_decimals) {
  const auto& theta = report().theta_final;
  EXPECT_NEAR(theta[(MultiIndex{0, 0, 1})], 0.650, 1e-3);
  EXPECT_NEAR(theta[(MultiIndex{0, 3, 3})], 0.336, 1e-3);
  EXPECT_NEAR(theta[(MultiIndex{3, 0, 3})], 0.336, 1e-3);
  EXPECT_NEAR(theta[(MultiIndex{3, 3, 0})], 0.543, 1e-3);
  EXPECT_NEAR(theta[(MultiIndex{3, 3, 1})], 0.048, 1e-3);
  EXPECT_LE(report().theta_error, 1e-3);
}

TEST(counterexample, second_order_family_is_not_closed) {
  EXPECT_TRUE(in_family(report().rho_initial, ExponentialFamily(3, 2), 1e-10));
  EXPECT_FALSE(in_family(report().rho_final, ExponentialFamily(3, 2), 1e-3));
  EXPECT_GT(std::abs(report().theta_final[(MultiIndex{3, 3, 1})]), 0.04);
}

TEST(counterexample, three_party_correlation_is_created) {
  EXPECT_LT(report().c3_before, 1e-7);
  EXPECT_GT(report().c3_after, 1e-6);
  // Local operation: the total correlation still does not grow.
  EXPECT_LE(report().after.total, report().before.total + 1e-7);
}

// Regression value for C_3 of the final state, computed once with the
// projection solver and checked stable across solver tolerances.
TEST(counterexample, c3_after_regression_value) {
  constexpr double kFrozenC3 = 4.950922680e-4;
  for (double tol : {1e-8, 1e-9, 1e-10}) {
    SolverOptions opts;
    opts.tolerance = tol;
    const auto r = run_counterexample(opts);
    EXPECT_NEAR(r.c3_after, kFrozenC3, 1e-9) << "tol " << tol;
  }
}
