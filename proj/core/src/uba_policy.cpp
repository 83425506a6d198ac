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

#include "uba/uba_policy.hpp"

#include <algorithm>

#include "uba/error.hpp"

namespace uba {

void UbaConfig::validate() const {
  if (gamma < 1) throw Error(ErrorCode::kConfig, "gamma must be >= 1");
  if (!(c_const > 0.0)) throw Error(ErrorCode::kConfig, "c must be positive");
  if (termination_enabled && !(psi_threshold > 1.0)) {
    throw Error(ErrorCode::kConfig, "Psi must exceed 1 when termination is on");
  }
  if (min_slots < 1) throw Error(ErrorCode::kConfig, "min_slots must be >= 1");
}

PolicyState::PolicyState(std::size_t arms, Arm initial_leader)
    : stats_(arms), leader_counts_(arms, 0), leader_(initial_leader) {
  if (arms < 2) throw Error(ErrorCode::kDegenerateSpace, "need >= 2 arms");
  if (initial_leader >= arms) {
    throw Error(ErrorCode::kIndex, "initial leader out of range");
  }
}

void PolicyState::mark_selected(Arm arm) {
  if (arm >= stats_.size()) throw Error(ErrorCode::kIndex, "arm out of range");
  pending_ = arm;
}

void PolicyState::record(Arm chosen, double energy, double chosen_power) {
  if (chosen >= stats_.size()) {
    throw Error(ErrorCode::kIndex, "arm out of range");
  }
  ++slot_;
  stats_[chosen].record(energy);

  // Only the chosen arm's mean moved, so the leader can only change to it,
  // or away from it when it was the leader and its mean fell.
  if (chosen != leader_) {
    if (stats_[chosen].empirical_mean() > stats_[leader_].empirical_mean()) {
      leader_ = chosen;
    }
  } else {
    double best = stats_[leader_].empirical_mean();
    Arm best_arm = leader_;
    for (Arm k = 0; k < stats_.size(); ++k) {
      const double m = stats_[k].empirical_mean();
      if (m > best) {
        best = m;
        best_arm = k;
      }
    }
    if (best_arm != leader_) {
      // Lowest index among the arms tying for the new maximum.
      for (Arm k = 0; k < stats_.size(); ++k) {
        if (stats_[k].empirical_mean() == best) {
          best_arm = k;
          break;
        }
      }
    }
    leader_ = best_arm;
  }
  ++leader_counts_[leader_];

  chosen_power_sum_ += chosen_power;
  realized_energy_sum_ += energy;
  last_power_ = chosen_power;
  last_energy_ = energy;
  last_chosen_ = chosen;
  pending_.reset();
}

void PolicyState::terminate(Arm arm) {
  if (!terminal_arm_) {
    terminal_arm_ = arm;
    termination_slot_ = slot_;
  }
}

bool Neighborhood::contains(Arm arm) const noexcept {
  return std::find(begin(), end(), arm) != end();
}

Neighborhood neighborhood(std::size_t arms, Arm arm) {
  if (arm >= arms) throw Error(ErrorCode::kIndex, "arm out of range");
  Neighborhood n;
  if (arm > 0) n.arms_[n.count_++] = arm - 1;
  n.arms_[n.count_++] = arm;
  if (arm + 1 < arms) n.arms_[n.count_++] = arm + 1;
  return n;
}

Neighborhood neighborhood(const BeamSpace& space, Arm arm) {
  return neighborhood(space.size(), arm);
}

bool forced_exploitation(std::uint64_t leader_count, std::size_t gamma) {
  return leader_count >= 1 && (leader_count - 1) % (gamma + 1) == 0;
}

Arm select_arm(PolicyState& state, const UbaConfig& cfg, std::size_t arms,
               std::span<const double> powers) {
  if (state.terminated()) {
    throw Error(ErrorCode::kState, "select_arm called after termination");
  }
  if (powers.size() != arms || state.arms() != arms) {
    throw Error(ErrorCode::kIndex, "power vector does not match arm count");
  }
  const Arm leader = state.leader();
  const std::uint64_t l = state.leader_count(leader);
  if (forced_exploitation(l, cfg.gamma)) {
    state.mark_selected(leader);
    return leader;
  }

  // l == 0 only before the first slot, when every candidate is unpulled.
  const double f = l == 0 ? 0.0 : exploration_budget(static_cast<double>(l),
                                                     cfg.c_const);
  Arm best_arm = leader;
  double best = klucb_index(state.stats(leader), powers[leader], f);
  for (Arm k : neighborhood(arms, leader)) {
    if (k == leader) continue;
    const ArmStatistics& s = state.stats(k);
    double v;
    if (s.pulls() == 0) {
      v = powers[k];
    } else {
      const double budget = f / static_cast<double>(s.pulls());
      if (!index_reaches(s.empirical_mean(), powers[k], budget, best)) continue;
      v = klucb_index(s.empirical_mean(), powers[k], budget);
    }
    // Strict: ties stay with the leader, then the lower index.
    if (v > best) {
      best = v;
      best_arm = k;
    }
  }
  state.mark_selected(best_arm);
  return best_arm;
}

Arm select_arm(PolicyState& state, const UbaConfig& cfg,
               const BeamSpace& space, std::span<const double> powers) {
  return select_arm(state, cfg, space.size(), powers);
}

void update(PolicyState& state, Arm chosen, const RewardSample& sample,
            std::span<const double> powers) {
  if (!state.pending_selection() || *state.pending_selection() != chosen) {
    throw Error(ErrorCode::kProtocolMisuse,
                "update for an arm that was not just selected");
  }
  if (sample.arm != chosen) {
    throw Error(ErrorCode::kProtocolMisuse, "sample belongs to another arm");
  }
  if (chosen >= powers.size()) throw Error(ErrorCode::kIndex, "arm out of range");
  state.record(chosen, sample.energy, powers[chosen]);
}

double peak_to_average(const PolicyState& state, PsiSource source) {
  if (state.slot() == 0) {
    throw Error(ErrorCode::kState, "peak-to-average undefined at t = 0");
  }
  const double t = static_cast<double>(state.slot());
  const bool expected = source == PsiSource::kExpectedPower;
  const double current = expected ? state.last_chosen_power() : state.last_energy();
  const double sum = expected ? state.chosen_power_sum() : state.realized_energy_sum();
  if (sum <= 0.0) return 0.0;  // nothing received yet
  return current / (sum / t);
}

std::optional<Arm> check_termination(PolicyState& state, const UbaConfig& cfg) {
  if (state.slot() == 0) {
    throw Error(ErrorCode::kState, "termination check before any slot");
  }
  if (state.terminated()) return state.terminal_arm();
  if (!cfg.termination_enabled || state.slot() < cfg.min_slots) {
    return std::nullopt;
  }
  if (peak_to_average(state, cfg.psi_source) >= cfg.psi_threshold) {
    state.terminate(*state.last_chosen());
    return state.terminal_arm();
  }
  return std::nullopt;
}

}  // namespace uba
