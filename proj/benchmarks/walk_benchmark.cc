// Copyright 2026 The qwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qwalk/coined_walk.h"
#include "qwalk/decoherence.h"
#include "qwalk/optics.h"

namespace {

using namespace qwalk;

void BM_Propagate(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(steps, kSymmetricT1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Propagate)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

void BM_CoinedWalk(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  const CoinWalkState start = coin_for_t1(kSymmetricT1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(walk_distribution(steps, start));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CoinedWalk)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

void BM_NoisyTrial(benchmark::State& state) {
  NoiseConfig cfg;
  cfg.sigma_pp = 0.25;
  cfg.sigma_bs = state.range(1) != 0 ? 0.07 : 0.0;
  int trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_trial(static_cast<int>(state.range(0)), kSymmetricT1, cfg, trial++));
  }
}
BENCHMARK(BM_NoisyTrial)->ArgsProduct({{100, 200, 400}, {0, 1}});

void BM_Ensemble200(benchmark::State& state) {
  NoiseConfig cfg;
  cfg.sigma_pp = 0.0125;
  cfg.trials = 50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_ensemble(200, kSymmetricT1, cfg, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_Ensemble200)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
