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

// Closed-form regret constants.
//
//   c(theta)  = sum over filtered neighbors j of k* of
//               (mu* - mu_j) / I(theta_j, mu* / p_j)
//   c'(theta) = the same summand over every j != k*
//   envelope  = (1 + eps) * sum over line neighbors j of k* of
//               (mu* - mu_j) / I(theta_j, theta_k*) * log T
//
// The filtered neighbor set keeps j in {k*-1, k*+1} with mu* <= p_j. With
// unit powers it is the plain line neighborhood.

#ifndef UBA_THEORY_BOUNDS_HPP
#define UBA_THEORY_BOUNDS_HPP

#include <span>
#include <vector>

#include "uba/beam_model.hpp"

namespace uba {

struct BoundReport {
  double c_theta = 0.0;
  double c_prime_theta = 0.0;
  double ub_constant = 0.0;
  Arm k_star = 0;
  std::vector<Arm> filtered_neighbors;
  std::vector<Arm> line_neighbors;
  /// The envelope's neighborhood differs from the filtered set (only
  /// possible with non-unit powers).
  bool neighbors_differ = false;
  /// Lower-bound divergence I(theta, mu*/p) and the envelope's
  /// I(theta, theta*) disagree for some neighbor (non-unit powers).
  bool divergence_forms_differ = false;
};

std::vector<Arm> filtered_neighbors(const RewardProfile& profile);

double lower_bound_constant(const RewardProfile& profile);
double unstructured_constant(const RewardProfile& profile);

/// Coefficient in front of log T (without the 1 + eps factor).
double upper_bound_coefficient(const RewardProfile& profile);

std::vector<double> upper_bound_envelope(const RewardProfile& profile,
                                         double epsilon,
                                         std::span<const double> horizons);

BoundReport bound_report(const RewardProfile& profile);

}  // namespace uba

#endif  // UBA_THEORY_BOUNDS_HPP
