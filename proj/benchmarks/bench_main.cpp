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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "irrcorr/classical_oracle.hpp"
#include "irrcorr/correlations.hpp"
#include "irrcorr/counterexample.hpp"
#include "irrcorr/maxent.hpp"
#include "irrcorr/random_state.hpp"
#include "irrcorr/state_coords.hpp"

namespace {

using namespace irrcorr;

void BM_project(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  Rng rng(1);
  const auto constraints = extract_constraints(random_state(n, rng, n == 4 ? 0.15 : kDefaultThetaScale), k);
  for (auto _ : state) benchmark::DoNotOptimize(project(constraints));
}
BENCHMARK(BM_project)->Args({3, 1})->Args({3, 2})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_matrix_exp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix h = hamiltonian(random_theta(n, 0.1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_exp(h));
}
BENCHMARK(BM_matrix_exp)->DenseRange(1, 5);

void BM_density_to_eta(benchmark::State& state) {
  Rng rng(3);
  const DensityMatrix rho = random_state(static_cast<int>(state.range(0)), rng, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(density_to_eta(rho));
}
BENCHMARK(BM_density_to_eta)->DenseRange(2, 4);

void BM_decompose(benchmark::State& state) {
  Rng rng(4);
  const DensityMatrix rho = random_state(3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compare_definitions(rho));
}
BENCHMARK(BM_decompose)->Unit(benchmark::kMillisecond);

void BM_counterexample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_counterexample());
}
BENCHMARK(BM_counterexample)->Unit(benchmark::kMillisecond);

void BM_ipf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(std::size_t{1} << n);
  double s = 0;
  for (double& v : w) s += (v = u(rng));
  for (double& v : w) v /= s;
  const JointDistribution p(n, w);
  for (auto _ : state) benchmark::DoNotOptimize(ipf_project(p, 2));
}
BENCHMARK(BM_ipf)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
