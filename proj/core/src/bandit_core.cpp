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

#include "uba/bandit_core.hpp"

#include <algorithm>
#include <cmath>

#include "uba/error.hpp"

namespace uba {
namespace {

// x log(x / y) with 0 log 0 = 0; y > 0 whenever x > 0.
inline double xlogxy(double x, double y) {
  return x == 0.0 ? 0.0 : x * std::log(x / y);
}

inline double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double kl_bernoulli(double theta, double theta_star) {
  if (std::isnan(theta) || std::isnan(theta_star)) {
    throw Error(ErrorCode::kDomain, "NaN passed to kl_bernoulli");
  }
  if (theta < 0.0 || theta > 1.0 || theta_star < 0.0 || theta_star > 1.0) {
    throw Error(ErrorCode::kDomain, "Bernoulli parameter outside [0, 1]");
  }
  if (theta_star == 0.0 || theta_star == 1.0) {
    return theta == theta_star ? 0.0 : kInfiniteDivergence;
  }
  const double d =
      xlogxy(theta, theta_star) + xlogxy(1.0 - theta, 1.0 - theta_star);
  // Rounding can leave tiny negatives when theta ~ theta_star.
  return d > 0.0 ? d : 0.0;
}

double klucb_index(double empirical_mean, double power, double budget,
                   BisectionSettings settings) {
  if (!(power > 0.0)) {
    throw Error(ErrorCode::kDomain, "power must be positive");
  }
  if (std::isnan(budget) || budget < 0.0) {
    throw Error(ErrorCode::kDomain, "exploration budget must be >= 0");
  }
  if (std::isnan(empirical_mean)) {
    throw Error(ErrorCode::kDomain, "NaN empirical mean");
  }
  const double m = clamp01(empirical_mean / power);
  if (budget == 0.0) return m * power;
  if (std::isinf(budget) || m == 1.0) return power;

  double lo = m;
  double hi = 1.0;
  for (int i = 0; i < settings.max_iterations &&
                  (hi - lo) * power > settings.tolerance;
       ++i) {
    const double mid = 0.5 * (lo + hi);
    if (kl_bernoulli(m, mid) <= budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo * power;
}

double klucb_index(const ArmStatistics& stats, double power,
                   double exploration, BisectionSettings settings) {
  if (stats.pulls() == 0) return power;
  return klucb_index(stats.empirical_mean(), power,
                     exploration / static_cast<double>(stats.pulls()),
                     settings);
}

bool index_reaches(double empirical_mean, double power, double budget,
                   double level) {
  if (level <= empirical_mean) return true;
  if (level > power) return false;
  if (std::isinf(budget)) return true;
  return kl_bernoulli(clamp01(empirical_mean / power), level / power) <= budget;
}

double exploration_budget(double leader_count, double c_const) {
  if (std::isnan(leader_count) || leader_count < 1.0) {
    throw Error(ErrorCode::kDomain, "leader count must be >= 1");
  }
  if (!(c_const > 0.0)) {
    throw Error(ErrorCode::kDomain, "exploration constant must be positive");
  }
  const double log_l = std::log(leader_count);
  const double f = log_l + c_const * std::log(std::max(1.0, log_l));
  return std::max(0.0, f);
}

}  // namespace uba
