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

#include "uba/beam_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "uba/error.hpp"

namespace uba {
namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a + 1 << ", " << b + 1 << ", " << c + 1 << ")";
  return os.str();
}

void require_distinct(std::span<const double> angles, const char* what) {
  std::vector<double> sorted(angles.begin(), angles.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidGeometry,
                std::string("duplicate ") + what + " angle");
  }
}

}  // namespace

BeamSpace BeamSpace::from_misalignment(std::vector<double> misalignment_deg) {
  std::vector<BeamPair> pairs(misalignment_deg.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) pairs[k] = {0, k};
  const std::size_t n = misalignment_deg.size();
  return BeamSpace(1, n, std::move(misalignment_deg), std::move(pairs));
}

BeamSpace::BeamSpace(std::size_t n_tx, std::size_t n_rx,
                     std::vector<double> misalignment_deg,
                     std::vector<BeamPair> pairs)
    : n_tx_(n_tx),
      n_rx_(n_rx),
      misalignment_(std::move(misalignment_deg)),
      pairs_(std::move(pairs)) {
  if (n_tx_ * n_rx_ != misalignment_.size() ||
      pairs_.size() != misalignment_.size()) {
    throw Error(ErrorCode::kInvalidGeometry,
                "arm count must equal n_tx * n_rx");
  }
  if (misalignment_.size() < 2) {
    throw Error(ErrorCode::kDegenerateSpace, "need at least two beam pairs");
  }
  for (std::size_t k = 0; k < misalignment_.size(); ++k) {
    const double d = misalignment_[k];
    if (!std::isfinite(d) || d < 0.0) {
      throw Error(ErrorCode::kInvalidGeometry,
                  "misalignment must be finite and non-negative");
    }
    if (k > 0 && d < misalignment_[k - 1]) {
      throw Error(ErrorCode::kOrdering,
                  "misalignment must be non-decreasing in arm order");
    }
  }
}

const BeamPair& BeamSpace::pair(Arm arm) const {
  if (arm >= pairs_.size()) throw Error(ErrorCode::kIndex, "arm out of range");
  return pairs_[arm];
}

double angle_difference(double a_deg, double b_deg) {
  double d = std::fmod(std::fabs(a_deg - b_deg), 360.0);
  return std::min(d, 360.0 - d);
}

BeamSpace build_beam_space(std::span<const double> tx_angles_deg,
                           std::span<const double> rx_angles_deg) {
  const std::size_t n_tx = tx_angles_deg.size();
  const std::size_t n_rx = rx_angles_deg.size();
  if (n_tx == 0 || n_rx == 0) {
    throw Error(ErrorCode::kDegenerateSpace, "empty beam set");
  }
  if (n_tx * n_rx < 2) {
    throw Error(ErrorCode::kDegenerateSpace, "need at least two beam pairs");
  }
  require_distinct(tx_angles_deg, "transmit");
  require_distinct(rx_angles_deg, "receive");

  struct Entry {
    double delta;
    BeamPair pair;
  };
  std::vector<Entry> entries;
  entries.reserve(n_tx * n_rx);
  for (std::size_t i = 0; i < n_tx; ++i) {
    for (std::size_t j = 0; j < n_rx; ++j) {
      entries.push_back(
          {angle_difference(rx_angles_deg[j], tx_angles_deg[i]), {i, j}});
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     if (a.delta != b.delta) return a.delta < b.delta;
                     if (a.pair.rx_beam != b.pair.rx_beam) {
                       return a.pair.rx_beam < b.pair.rx_beam;
                     }
                     return a.pair.tx_beam < b.pair.tx_beam;
                   });
  std::vector<double> delta;
  std::vector<BeamPair> pairs;
  for (const auto& e : entries) {
    delta.push_back(e.delta);
    pairs.push_back(e.pair);
  }
  return BeamSpace(n_tx, n_rx, std::move(delta), std::move(pairs));
}

BeamSpace build_beam_space(std::size_t n_tx, std::size_t n_rx,
                           double tx_fixed_angle_deg,
                           std::span<const double> rx_angles_deg) {
  if (n_tx == 0 || n_rx == 0 || n_tx * n_rx < 2) {
    throw Error(ErrorCode::kDegenerateSpace, "need at least two beam pairs");
  }
  if (rx_angles_deg.size() != n_rx) {
    throw Error(ErrorCode::kInvalidGeometry,
                "receive angle count does not match n_rx");
  }
  if (n_tx != 1) {
    throw Error(ErrorCode::kInvalidGeometry,
                "a fixed transmit angle describes a single transmit beam");
  }
  const double tx[] = {tx_fixed_angle_deg};
  return build_beam_space(std::span<const double>(tx), rx_angles_deg);
}

std::vector<double> uniform_angles(std::size_t count, double start_deg,
                                   double span_deg) {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = start_deg + span_deg * static_cast<double>(k) /
                             static_cast<double>(count);
  }
  return out;
}

Arm check_unimodal(std::span<const double> means) {
  const std::size_t n = means.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (means[i] == means[i + 1]) {
      const std::size_t a = i > 0 ? i - 1 : i;
      throw Error(ErrorCode::kModelViolation,
                  "equal adjacent means at " + triple(a, a + 1, a + 2 < n ? a + 2 : a + 1));
    }
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (means[i] < means[i - 1] && means[i] < means[i + 1]) {
      throw Error(ErrorCode::kModelViolation,
                  "mean vector not unimodal at " + triple(i - 1, i, i + 1));
    }
  }
  return static_cast<Arm>(std::max_element(means.begin(), means.end()) -
                          means.begin());
}

RewardProfile::RewardProfile(std::vector<double> powers,
                             std::vector<double> success_probs,
                             double threshold)
    : powers_(std::move(powers)),
      theta_(std::move(success_probs)),
      threshold_(threshold) {
  if (powers_.size() != theta_.size()) {
    throw Error(ErrorCode::kInvalidGeometry,
                "power and success vectors differ in length");
  }
  if (powers_.size() < 2) {
    throw Error(ErrorCode::kDegenerateSpace, "need at least two arms");
  }
  for (std::size_t k = 0; k < theta_.size(); ++k) {
    if (!(theta_[k] >= 0.0 && theta_[k] <= 1.0)) {
      throw Error(ErrorCode::kDomain, "success probability outside [0, 1]");
    }
    if (!(powers_[k] > 0.0) || !std::isfinite(powers_[k])) {
      throw Error(ErrorCode::kDomain, "powers must be finite and positive");
    }
    if (k > 0 && theta_[k] > theta_[k - 1]) {
      throw Error(ErrorCode::kOrdering,
                  "success probabilities must be non-increasing (arm " +
                      std::to_string(k + 1) + ")");
    }
  }
  means_.resize(theta_.size());
  for (std::size_t k = 0; k < theta_.size(); ++k) {
    means_[k] = powers_[k] * theta_[k];
  }
  best_ = check_unimodal(means_);
}

RewardProfile build_profile(const BeamSpace& space, const PowerModel& model,
                            std::vector<double> success_probs) {
  if (success_probs.size() != space.size()) {
    throw Error(ErrorCode::kInvalidGeometry,
                "need one success probability per arm");
  }
  std::vector<double> powers(space.size(), 1.0);
  if (const auto* g = std::get_if<GaussianBeamPower>(&model)) {
    if (!(g->width_deg > 0.0)) {
      throw Error(ErrorCode::kDomain, "beam width must be positive");
    }
    const auto delta = space.misalignment();
    for (std::size_t k = 0; k < powers.size(); ++k) {
      powers[k] =
          std::exp(-delta[k] * delta[k] / (2.0 * g->width_deg * g->width_deg));
    }
  }
  return RewardProfile(std::move(powers), std::move(success_probs));
}

RewardSample sample_reward(const RewardProfile& profile, Arm arm,
                           const CounterRng& rng, std::uint64_t slot,
                           StreamTag tag) {
  if (arm >= profile.size()) {
    throw Error(ErrorCode::kIndex, "arm out of range");
  }
  const double theta = profile.success_prob(arm);
  const bool success = rng.uniform(slot, static_cast<std::uint32_t>(arm), tag) < theta;
  return {arm, success, success ? profile.power(arm) : 0.0};
}

}  // namespace uba
