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

#include "uba/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uba/error.hpp"

namespace uba {

void ExhaustiveConfig::validate() const {
  if (rounds_per_arm < 1) {
    throw Error(ErrorCode::kConfig, "rounds_per_arm must be >= 1");
  }
}

Arm best_empirical_arm(const PolicyState& state) {
  Arm best = 0;
  for (Arm k = 1; k < state.arms(); ++k) {
    if (state.empirical_mean(k) > state.empirical_mean(best)) best = k;
  }
  return best;
}

Arm exhaustive_select(PolicyState& state, const ExhaustiveConfig& cfg,
                      std::size_t arms) {
  if (state.terminated()) {
    throw Error(ErrorCode::kState, "exhaustive_select after termination");
  }
  const std::uint64_t t = state.slot();
  Arm pick;
  if (t < cfg.scan_length(arms) ||
      cfg.mode == ExhaustiveMode::kPerpetualRoundRobin) {
    pick = static_cast<Arm>(t % arms);
  } else {
    pick = best_empirical_arm(state);
  }
  state.mark_selected(pick);
  return pick;
}

Arm vanilla_klucb_select(PolicyState& state, double c_const,
                         std::span<const double> powers) {
  if (state.terminated()) {
    throw Error(ErrorCode::kState, "vanilla_klucb_select after termination");
  }
  const std::size_t arms = state.arms();
  if (powers.size() != arms) {
    throw Error(ErrorCode::kIndex, "power vector does not match arm count");
  }
  const double f =
      exploration_budget(static_cast<double>(state.slot() + 1), c_const);

  // Visit the best empirical arm first so most other solves are pruned.
  Arm first = 0;
  for (Arm k = 1; k < arms; ++k) {
    if (state.empirical_mean(k) > state.empirical_mean(first)) first = k;
  }
  Arm best_arm = first;
  double best = klucb_index(state.stats(first), powers[first], f);
  for (Arm k = 0; k < arms; ++k) {
    if (k == first) continue;
    const ArmStatistics& s = state.stats(k);
    double v;
    if (s.pulls() == 0) {
      v = powers[k];
    } else {
      const double budget = f / static_cast<double>(s.pulls());
      if (!index_reaches(s.empirical_mean(), powers[k], budget, best)) continue;
      v = klucb_index(s.empirical_mean(), powers[k], budget);
    }
    if (v > best || (v == best && k < best_arm)) {
      best = v;
      best_arm = k;
    }
  }
  state.mark_selected(best_arm);
  return best_arm;
}

namespace {

struct PhaseOutcome {
  Arm arm = 0;
  std::uint64_t slots = 0;
  bool exhausted = false;
};

PhaseOutcome run_phase(const RewardProfile& profile, SweepPolicy inner,
                       std::uint64_t budget, const CounterRng& rng,
                       StreamTag tag, const SweepOptions& options) {
  const auto powers = profile.powers();
  const std::size_t arms = profile.size();
  PolicyState state(arms, std::min<Arm>(options.initial_leader, arms - 1));
  while (state.slot() < budget) {
    if (inner == SweepPolicy::kExhaustive &&
        state.slot() == options.exhaustive.scan_length(arms)) {
      return {best_empirical_arm(state), state.slot(), false};
    }
    const Arm k = inner == SweepPolicy::kUba
                      ? select_arm(state, options.uba, arms, powers)
                      : exhaustive_select(state, options.exhaustive, arms);
    update(state, k, sample_reward(profile, k, rng, state.slot(), tag), powers);
    if (inner == SweepPolicy::kUba && check_termination(state, options.uba)) {
      return {*state.terminal_arm(), state.slot(), false};
    }
  }
  if (inner == SweepPolicy::kExhaustive &&
      state.slot() == options.exhaustive.scan_length(arms)) {
    return {best_empirical_arm(state), state.slot(), false};
  }
  return {inner == SweepPolicy::kUba ? state.leader() : best_empirical_arm(state),
          state.slot(), true};
}

}  // namespace

SweepResult decoupled_sweep(const RewardProfile& profile_tx,
                            const RewardProfile& profile_rx,
                            SweepPolicy inner, std::uint64_t budget,
                            const CounterRng& rng,
                            const SweepOptions& options) {
  if (budget < 2) throw Error(ErrorCode::kDomain, "sweep budget must be >= 2");
  options.uba.validate();
  options.exhaustive.validate();
  const PhaseOutcome rx =
      run_phase(profile_rx, inner, budget / 2, rng, StreamTag::kSweepRx, options);
  const PhaseOutcome tx = run_phase(profile_tx, inner, budget - rx.slots, rng,
                                    StreamTag::kSweepTx, options);
  SweepResult result;
  result.rx_arm = rx.arm;
  result.tx_arm = tx.arm;
  result.rx_slots = rx.slots;
  result.tx_slots = tx.slots;
  result.slots_used = rx.slots + tx.slots;
  result.budget_exhausted = rx.exhausted || tx.exhausted;
  return result;
}

}  // namespace uba
