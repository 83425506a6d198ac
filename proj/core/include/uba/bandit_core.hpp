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

// KL-divergence arithmetic and the KL-UCB index for Bernoulli-scaled arms.

#ifndef UBA_BANDIT_CORE_HPP
#define UBA_BANDIT_CORE_HPP

#include <cstdint>
#include <limits>

namespace uba {

inline constexpr double kInfiniteDivergence =
    std::numeric_limits<double>::infinity();

/// I(theta, theta_star) for two Bernoulli laws, with 0 log 0 = 0.
///
/// Returns kInfiniteDivergence when theta_star is 0 or 1 and differs from
/// theta (the divergence is unbounded, not an overflow). NaN input throws
/// kDomain, as does anything outside [0, 1].
double kl_bernoulli(double theta, double theta_star);

/// Sum of realized rewards for one arm.
class ArmStatistics {
 public:
  void record(double energy) {
    ++pulls_;
    cumulative_energy_ += energy;
  }

  std::uint64_t pulls() const noexcept { return pulls_; }
  double cumulative_energy() const noexcept { return cumulative_energy_; }
  /// 0 for a never-pulled arm.
  double empirical_mean() const noexcept {
    return pulls_ == 0 ? 0.0
                       : cumulative_energy_ / static_cast<double>(pulls_);
  }

 private:
  std::uint64_t pulls_ = 0;
  double cumulative_energy_ = 0.0;
};

struct BisectionSettings {
  double tolerance = 1e-9;
  int max_iterations = 100;
};

/// sup{ q in [0, p] : I(mean/p, q/p) <= budget }, solved by bisection on
/// [mean, p]. `budget` is f(t)/s_k; it must be >= 0. An infinite budget
/// returns p.
double klucb_index(double empirical_mean, double power, double budget,
                   BisectionSettings settings = {});

/// Index of a tracked arm: p for a never-pulled arm, otherwise
/// klucb_index(mean, p, exploration / pulls).
double klucb_index(const ArmStatistics& stats, double power,
                   double exploration, BisectionSettings settings = {});

/// True when the index of (mean, power, budget) is >= `level`, without the
/// bisection. Used to skip index solves that cannot win an argmax.
bool index_reaches(double empirical_mean, double power, double budget,
                   double level);

/// f = log l + c log log l, both logarithms clamped at 0. l must be >= 1;
/// it is a count in the policies but any real >= 1 is accepted.
double exploration_budget(double leader_count, double c_const);

}  // namespace uba

#endif  // UBA_BANDIT_CORE_HPP
