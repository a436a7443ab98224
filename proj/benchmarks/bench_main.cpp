// Copyright 2026 The qassist Authors
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

#include <benchmark/benchmark.h>

#include "qassist/coherence.hpp"
#include "qassist/harness.hpp"
#include "qassist/matrix.hpp"
#include "qassist/protocol.hpp"
#include "qassist/rng.hpp"
#include "qassist/states.hpp"
#include "qassist/tomography.hpp"

namespace {

using namespace qassist;

void BM_Eigh4(benchmark::State& state) {
  CounterRng rng(1);
  const auto rho = random_mixed_state(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(rho.matrix()));
}
BENCHMARK(BM_Eigh4);

void BM_AliceMeasure(benchmark::State& state) {
  const auto rho = make_werner({0.7});
  const auto basis = MeasurementBasis::from_angles(0.4, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(average_assisted_coherence(alice_measure(rho, basis)));
}
BENCHMARK(BM_AliceMeasure);

void BM_CoaNumeric(benchmark::State& state) {
  CounterRng rng(2);
  const auto psi = random_pure_state(rng, 4);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coa_numeric(psi, grid, kDefaultRefineIters).value);
}
BENCHMARK(BM_CoaNumeric)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SimulateCounts(benchmark::State& state) {
  const auto rho = DensityMatrix::maximally_mixed(2);
  const auto shots = state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_counts(rho, shots, ++seed));
}
BENCHMARK(BM_SimulateCounts)->Arg(1000)->Arg(10000)->Arg(1000000);

void BM_ReconstructMle(benchmark::State& state) {
  CounterRng rng(3);
  const auto record = simulate_counts(random_mixed_state(rng, 2), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_mle(record).iterations);
}
BENCHMARK(BM_ReconstructMle)->Arg(1000)->Arg(1000000);

void BM_SampledPure1Grid(benchmark::State& state) {
  RunConfig config;
  config.experiment = Experiment::Pure1;
  config.grid = parse_grid("0:45:2.5");
  config.mode = Mode::Sampled;
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(config).size());
}
BENCHMARK(BM_SampledPure1Grid)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
