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

// Beam-pair arm space and the Bernoulli-scaled reward environment.
//
// Arms are 0-based in the API. Arm 0 is the pair with the smallest
// misalignment; text outputs (CSV, JSON, CLI) print them 1-based.

#ifndef UBA_BEAM_MODEL_HPP
#define UBA_BEAM_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "uba/rng.hpp"

namespace uba {

using Arm = std::size_t;

/// One transmit/receive beam combination.
struct BeamPair {
  std::size_t tx_beam = 0;
  std::size_t rx_beam = 0;
};

/// N_t x N_r beam pairs flattened onto a line ordered by misalignment.
class BeamSpace {
 public:
  /// Builds directly from an already-ordered misalignment vector (degrees).
  /// Pair labels default to (0, k).
  static BeamSpace from_misalignment(std::vector<double> misalignment_deg);

  /// n_tx x n_rx pairs; n_rx is the receive beams per transmit beam.
  BeamSpace(std::size_t n_tx, std::size_t n_rx,
            std::vector<double> misalignment_deg, std::vector<BeamPair> pairs);

  std::size_t n_tx() const noexcept { return n_tx_; }
  std::size_t n_rx() const noexcept { return n_rx_; }
  std::size_t size() const noexcept { return misalignment_.size(); }
  std::span<const double> misalignment() const noexcept { return misalignment_; }
  const BeamPair& pair(Arm arm) const;

 private:
  std::size_t n_tx_;
  std::size_t n_rx_;
  std::vector<double> misalignment_;
  std::vector<BeamPair> pairs_;
};

/// Orders every (tx, rx) pair by the wrapped angular difference between the
/// two beams; ties go to the lower receive-beam index, then the lower
/// transmit-beam index.
BeamSpace build_beam_space(std::span<const double> tx_angles_deg,
                           std::span<const double> rx_angles_deg);

/// Receive sweep against a transmitter held at one direction. Only n_tx == 1
/// is meaningful here; multi-beam transmitters need explicit angles.
BeamSpace build_beam_space(std::size_t n_tx, std::size_t n_rx,
                           double tx_fixed_angle_deg,
                           std::span<const double> rx_angles_deg);

/// Wrapped absolute difference in [0, 180].
double angle_difference(double a_deg, double b_deg);

/// Evenly spaced receive directions over [start, start + span) degrees.
std::vector<double> uniform_angles(std::size_t count, double start_deg,
                                   double span_deg);

struct UnitPower {};
struct GaussianBeamPower {
  double width_deg = 10.0;
};
using PowerModel = std::variant<UnitPower, GaussianBeamPower>;

/// Per-arm received energy p_k and success probability theta_k.
///
/// Invariants (checked on construction):
///  * theta non-increasing in arm order;
///  * mu_k = p_k * theta_k strictly unimodal with a unique peak;
///  * p non-increasing in arm order when built from a Gaussian beam.
class RewardProfile {
 public:
  RewardProfile(std::vector<double> powers, std::vector<double> success_probs,
                double threshold = 0.0);

  std::size_t size() const noexcept { return powers_.size(); }
  std::span<const double> powers() const noexcept { return powers_; }
  std::span<const double> success_probs() const noexcept { return theta_; }
  std::span<const double> means() const noexcept { return means_; }
  double power(Arm arm) const { return powers_.at(arm); }
  double success_prob(Arm arm) const { return theta_.at(arm); }
  double mean(Arm arm) const { return means_.at(arm); }
  /// Detection threshold tau. Informational: theta already encodes it.
  double threshold() const noexcept { return threshold_; }

  Arm best_arm() const noexcept { return best_; }
  double best_mean() const noexcept { return means_[best_]; }

 private:
  std::vector<double> powers_;
  std::vector<double> theta_;
  std::vector<double> means_;
  double threshold_;
  Arm best_ = 0;
};

RewardProfile build_profile(const BeamSpace& space, const PowerModel& model,
                            std::vector<double> success_probs);

/// Returns the peak of a strictly unimodal sequence or throws
/// kModelViolation naming the first offending index triple.
Arm check_unimodal(std::span<const double> means);

struct RewardSample {
  Arm arm = 0;
  bool success = false;
  double energy = 0.0;
};

/// Bernoulli(theta_k) success scaled by p_k. The draw is a pure function of
/// (rng seed, rng run, slot, arm).
RewardSample sample_reward(const RewardProfile& profile, Arm arm,
                           const CounterRng& rng, std::uint64_t slot,
                           StreamTag tag = StreamTag::kReward);

}  // namespace uba

#endif  // UBA_BEAM_MODEL_HPP
