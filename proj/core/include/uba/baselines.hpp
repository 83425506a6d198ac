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

#ifndef UBA_BASELINES_HPP
#define UBA_BASELINES_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "uba/beam_model.hpp"
#include "uba/rng.hpp"
#include "uba/uba_policy.hpp"

namespace uba {

enum class ExhaustiveMode { kScanThenCommit, kPerpetualRoundRobin };

struct ExhaustiveConfig {
  std::uint64_t rounds_per_arm = 1;
  ExhaustiveMode mode = ExhaustiveMode::kPerpetualRoundRobin;

  void validate() const;
  std::uint64_t scan_length(std::size_t arms) const {
    return rounds_per_arm * arms;
  }
};

/// Arm with the highest empirical mean, lowest index on ties.
Arm best_empirical_arm(const PolicyState& state);

/// Cycles 0..K-1 for rounds_per_arm passes, then either keeps cycling or
/// commits to the best empirical mean (lowest index on ties).
Arm exhaustive_select(PolicyState& state, const ExhaustiveConfig& cfg,
                      std::size_t arms);

/// Argmax over ALL arms of the KL-UCB index with f = log n + c log log n,
/// n the 1-based slot being decided. Unpulled arms score p_k; ties go to the
/// lowest index. Uses no structure.
Arm vanilla_klucb_select(PolicyState& state, double c_const,
                         std::span<const double> powers);

enum class SweepPolicy { kUba, kExhaustive };

struct SweepResult {
  Arm tx_arm = 0;
  Arm rx_arm = 0;
  std::uint64_t slots_used = 0;
  std::uint64_t rx_slots = 0;
  std::uint64_t tx_slots = 0;
  /// A phase ran out of slots before declaring; its arm is the best
  /// empirical one.
  bool budget_exhausted = false;
};

struct SweepOptions {
  UbaConfig uba{.termination_enabled = true};
  ExhaustiveConfig exhaustive{.rounds_per_arm = 1,
                              .mode = ExhaustiveMode::kScanThenCommit};
  Arm initial_leader = 0;
};

/// Two-phase sweep in the 802.11ad style: the receiver searches against a
/// quasi-omni transmitter for at most budget / 2 slots, then the transmitter
/// searches with the remaining slots. The quasi-omni side is folded into the
/// scanning side's profile.
SweepResult decoupled_sweep(const RewardProfile& profile_tx,
                            const RewardProfile& profile_rx,
                            SweepPolicy inner, std::uint64_t budget,
                            const CounterRng& rng,
                            const SweepOptions& options = {});

}  // namespace uba

#endif  // UBA_BASELINES_HPP
