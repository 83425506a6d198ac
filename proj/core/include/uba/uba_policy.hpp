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

// Unimodal Beam Alignment: leader tracking, index maximization over the
// leader's line neighborhood, forced leader exploitation every gamma + 1
// leader slots, and peak-to-average termination.
//
// A run is driven as
//
//   Arm k = select_arm(state, cfg, space, powers);
//   update(state, k, sample_reward(profile, k, rng, state.slot()), powers);
//   if (cfg.termination_enabled) check_termination(state, cfg);
//
// and the same PolicyState bookkeeping is shared with the baselines.

#ifndef UBA_UBA_POLICY_HPP
#define UBA_UBA_POLICY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uba/bandit_core.hpp"
#include "uba/beam_model.hpp"

namespace uba {

/// What the peak-to-average ratio is computed from.
enum class PsiSource {
  kExpectedPower,   // p_{k(n)} of the chosen arms
  kRealizedEnergy,  // observed energies (0 on failure)
};

struct UbaConfig {
  std::size_t gamma = 2;
  double c_const = 3.0;
  double psi_threshold = 4.0;
  bool termination_enabled = false;
  PsiSource psi_source = PsiSource::kExpectedPower;
  /// psi is not evaluated before this many slots.
  std::uint64_t min_slots = 2;

  void validate() const;
};

/// Mutable per-run state: slot clock, arm statistics, leader bookkeeping and
/// the running sums behind psi.
class PolicyState {
 public:
  explicit PolicyState(std::size_t arms, Arm initial_leader = 0);

  std::uint64_t slot() const noexcept { return slot_; }
  std::size_t arms() const noexcept { return stats_.size(); }
  const ArmStatistics& stats(Arm arm) const { return stats_.at(arm); }
  double empirical_mean(Arm arm) const { return stats_.at(arm).empirical_mean(); }
  Arm leader() const noexcept { return leader_; }
  std::uint64_t leader_count(Arm arm) const { return leader_counts_.at(arm); }

  double chosen_power_sum() const noexcept { return chosen_power_sum_; }
  double realized_energy_sum() const noexcept { return realized_energy_sum_; }
  std::optional<Arm> last_chosen() const noexcept { return last_chosen_; }
  double last_chosen_power() const noexcept { return last_power_; }
  double last_energy() const noexcept { return last_energy_; }

  bool terminated() const noexcept { return terminal_arm_.has_value(); }
  std::optional<Arm> terminal_arm() const noexcept { return terminal_arm_; }
  std::optional<std::uint64_t> termination_slot() const noexcept {
    return termination_slot_;
  }
  std::optional<Arm> pending_selection() const noexcept { return pending_; }

  /// Records that a selection rule returned `arm`; update() checks it.
  void mark_selected(Arm arm);
  /// Bookkeeping for one completed slot (no selection-protocol check).
  void record(Arm chosen, double energy, double chosen_power);
  void terminate(Arm arm);

 private:
  std::vector<ArmStatistics> stats_;
  std::vector<std::uint64_t> leader_counts_;
  std::uint64_t slot_ = 0;
  Arm leader_;
  double chosen_power_sum_ = 0.0;
  double realized_energy_sum_ = 0.0;
  double last_power_ = 0.0;
  double last_energy_ = 0.0;
  std::optional<Arm> last_chosen_;
  std::optional<Arm> pending_;
  std::optional<Arm> terminal_arm_;
  std::optional<std::uint64_t> termination_slot_;
};

/// Arms within distance one of `arm` on the line, the arm itself included,
/// in increasing order.
class Neighborhood {
 public:
  const Arm* begin() const noexcept { return arms_.data(); }
  const Arm* end() const noexcept { return arms_.data() + count_; }
  std::size_t size() const noexcept { return count_; }
  bool contains(Arm arm) const noexcept;

 private:
  friend Neighborhood neighborhood(std::size_t arms, Arm arm);
  std::array<Arm, 3> arms_{};
  std::size_t count_ = 0;
};

Neighborhood neighborhood(std::size_t arms, Arm arm);
Neighborhood neighborhood(const BeamSpace& space, Arm arm);

/// True when the leader's count puts the policy on a forced-exploitation
/// slot: l >= 1 and (l - 1) divisible by gamma + 1.
bool forced_exploitation(std::uint64_t leader_count, std::size_t gamma);

/// Algorithm decision for the next slot. Marks the selection on `state`.
Arm select_arm(PolicyState& state, const UbaConfig& cfg, std::size_t arms,
               std::span<const double> powers);
Arm select_arm(PolicyState& state, const UbaConfig& cfg,
               const BeamSpace& space, std::span<const double> powers);

/// Applies the outcome of the slot that select_arm (or a baseline rule)
/// just chose. Throws kProtocolMisuse if `chosen` is not that arm.
void update(PolicyState& state, Arm chosen, const RewardSample& sample,
            std::span<const double> powers);

/// psi(t) = current / running mean, from the configured source.
double peak_to_average(const PolicyState& state, PsiSource source);

/// Declares the last chosen arm optimal once psi(t) >= Psi.
std::optional<Arm> check_termination(PolicyState& state, const UbaConfig& cfg);

}  // namespace uba

#endif  // UBA_UBA_POLICY_HPP
