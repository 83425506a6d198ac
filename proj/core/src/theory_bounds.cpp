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

#include "uba/theory_bounds.hpp"

#include <cmath>
#include <string>

#include "uba/bandit_core.hpp"
#include "uba/error.hpp"
#include "uba/uba_policy.hpp"

namespace uba {
namespace {

// (mu* - mu_k) / I(theta_k, mu* / p_k)
double lower_bound_term(const RewardProfile& profile, Arm k) {
  const double best = profile.best_mean();
  const double target = best / profile.power(k);
  if (!(target > 0.0 && target < 1.0)) {
    throw Error(ErrorCode::kDomain,
                "arm " + std::to_string(k + 1) +
                    ": divergence target mu*/p_k = " + std::to_string(target) +
                    " outside (0, 1); need mu* < p_k");
  }
  return (best - profile.mean(k)) /
         kl_bernoulli(profile.success_prob(k), target);
}

}  // namespace

std::vector<Arm> filtered_neighbors(const RewardProfile& profile) {
  std::vector<Arm> out;
  const Arm ks = profile.best_arm();
  for (Arm j : neighborhood(profile.size(), ks)) {
    if (j != ks && profile.best_mean() <= profile.power(j)) out.push_back(j);
  }
  return out;
}

double lower_bound_constant(const RewardProfile& profile) {
  double c = 0.0;
  for (Arm j : filtered_neighbors(profile)) c += lower_bound_term(profile, j);
  return c;
}

double unstructured_constant(const RewardProfile& profile) {
  double c = 0.0;
  for (Arm k = 0; k < profile.size(); ++k) {
    if (k != profile.best_arm()) c += lower_bound_term(profile, k);
  }
  return c;
}

double upper_bound_coefficient(const RewardProfile& profile) {
  const Arm ks = profile.best_arm();
  const double theta_star = profile.success_prob(ks);
  double c = 0.0;
  for (Arm j : neighborhood(profile.size(), ks)) {
    if (j == ks) continue;
    const double theta = profile.success_prob(j);
    if (!(theta < theta_star)) {
      throw Error(ErrorCode::kDomain,
                  "neighbor arm " + std::to_string(j + 1) +
                      " has theta >= theta*; envelope undefined");
    }
    c += (profile.best_mean() - profile.mean(j)) /
         kl_bernoulli(theta, theta_star);
  }
  return c;
}

std::vector<double> upper_bound_envelope(const RewardProfile& profile,
                                         double epsilon,
                                         std::span<const double> horizons) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kDomain, "epsilon must be > 0");
  const double coef = (1.0 + epsilon) * upper_bound_coefficient(profile);
  std::vector<double> out;
  out.reserve(horizons.size());
  for (double t : horizons) {
    if (!(t >= 1.0)) throw Error(ErrorCode::kDomain, "horizon must be >= 1");
    out.push_back(coef * std::log(t));
  }
  return out;
}

BoundReport bound_report(const RewardProfile& profile) {
  BoundReport r;
  r.k_star = profile.best_arm();
  r.filtered_neighbors = filtered_neighbors(profile);
  for (Arm j : neighborhood(profile.size(), r.k_star)) {
    if (j != r.k_star) r.line_neighbors.push_back(j);
  }
  r.neighbors_differ = r.filtered_neighbors != r.line_neighbors;
  for (Arm j : r.line_neighbors) {
    if (profile.best_mean() / profile.power(j) !=
        profile.success_prob(r.k_star)) {
      r.divergence_forms_differ = true;
    }
  }
  r.c_theta = lower_bound_constant(profile);
  r.c_prime_theta = unstructured_constant(profile);
  r.ub_constant = upper_bound_coefficient(profile);
  return r;
}

}  // namespace uba
