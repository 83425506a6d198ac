// Copyright 2026 The UBA Beam Alignment Authors.
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


// Microbenchmarks for the hot paths: the index solve, one policy decision,
// a full episode, and a threaded experiment.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "uba/bandit_core.hpp"
#include "uba/baselines.hpp"
#include "uba/harness.hpp"
#include "uba/rng.hpp"
#include "uba/scenarios.hpp"
#include "uba/uba_policy.hpp"

namespace {

void BM_Philox(benchmark::State& state) {
  const uba::CounterRng rng(1, 0);
  std::uint64_t slot = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rng.uniform(slot++, 3));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Philox);

void BM_KlucbIndex(benchmark::State& state) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> means(1024), budgets(1024);
  for (auto& m : means) m = u(gen);
  for (auto& b : budgets) b = 0.01 + u(gen);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(uba::klucb_index(means[i & 1023], 1.0, budgets[i & 1023]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_KlucbIndex);

void BM_IndexReaches(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(uba::index_reaches(0.4, 1.0, 0.05 + 1e-6 * (i++ & 255), 0.7));
  }
}
BENCHMARK(BM_IndexReaches);

// One select + sample + update step on a warmed-up state with K arms.
template <class Select>
void policy_step(benchmark::State& state, Select select) {
  const auto arms = static_cast<std::size_t>(state.range(0));
  auto theta = uba::scenarios::pad_tail(uba::scenarios::directional(), arms - 8, 0.03, 0.01);
  const uba::RewardProfile profile(std::vector<double>(arms, 1.0), theta);
  const uba::CounterRng rng(2, 0);
  uba::PolicyState s(arms, 0);
  for (auto _ : state) {
    const uba::Arm k = select(s, profile);
    uba::update(s, k, uba::sample_reward(profile, k, rng, s.slot()), profile.powers());
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_UbaStep(benchmark::State& state) {
  const uba::UbaConfig cfg;
  policy_step(state, [&](uba::PolicyState& s, const uba::RewardProfile& p) {
    return uba::select_arm(s, cfg, p.size(), p.powers());
  });
}
BENCHMARK(BM_UbaStep)->Arg(8)->Arg(128);

void BM_VanillaKlucbStep(benchmark::State& state) {
  policy_step(state, [](uba::PolicyState& s, const uba::RewardProfile& p) {
    return uba::vanilla_klucb_select(s, 3.0, p.powers());
  });
}
BENCHMARK(BM_VanillaKlucbStep)->Arg(8)->Arg(128);

void BM_Episode(benchmark::State& state) {
  uba::SimConfig cfg;
  cfg.horizon = static_cast<std::uint64_t>(state.range(0));
  cfg.runs = 1;
  std::uint32_t run = 0;
  for (auto _ : state) benchmark::DoNotOptimize(uba::run_episode(cfg, run++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Episode)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Experiment(benchmark::State& state) {
  uba::SimConfig cfg;
  cfg.horizon = 10000;
  cfg.runs = 64;
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uba::run_experiment(cfg, {.threads = threads}));
  state.SetItemsProcessed(state.iterations() * cfg.runs * cfg.horizon);
}
BENCHMARK(BM_Experiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
