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


#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "uba/error.hpp"
#include "uba/scenarios.hpp"
#include "uba/theory_bounds.hpp"

namespace uba {
namespace {

std::vector<double> ones(std::size_t k) { return std::vector<double>(k, 1.0); }

TEST(LowerBound, DirectionalUnitPowers) {
  const RewardProfile p(ones(8), scenarios::directional());
  const double expect = oracle::constant(ones(8), scenarios::directional(), 0, {1}, true);
  EXPECT_NEAR(lower_bound_constant(p), expect, 1e-12);
  EXPECT_NEAR(lower_bound_constant(p), 2.5552, 1e-4);
  EXPECT_EQ(filtered_neighbors(p), (std::vector<Arm>{1}));
}

TEST(LowerBound, NearTieDivergesLikeInverseGap) {
  const double eps = 1e-3;
  const RewardProfile p(ones(2), {0.9, 0.9 - eps});
  const double direct = oracle::constant(ones(2), {0.9, 0.9 - eps}, 0, {1}, true);
  EXPECT_NEAR(lower_bound_constant(p), direct, 1e-9 * direct);
  // I(0.9 - e, 0.9) ~ e^2 / (2 * 0.9 * 0.1), so the term ~ 0.18 / e.
  EXPECT_NEAR(lower_bound_constant(p) * eps, 2 * 0.09, 2e-3);
}

TEST(LowerBound, InteriorPeakHasTwoTerms) {
  EXPECT_THROW(RewardProfile(ones(3), {0.3, 0.8, 0.4}), Error);  // theta must not increase
  // Interior peaks need shaped powers: mu = (0.4, 0.8, 0.3).
  const RewardProfile q({0.5, 1.0, 0.5}, {0.8, 0.8, 0.6});
  ASSERT_EQ(q.best_arm(), 1u);
  EXPECT_EQ(filtered_neighbors(q), std::vector<Arm>{});
  const RewardProfile r({0.9, 1.0, 0.85}, {0.85, 0.8, 0.5});
  ASSERT_EQ(r.best_arm(), 1u);
  EXPECT_EQ(filtered_neighbors(r), (std::vector<Arm>{0, 2}));
  const double expect = oracle::constant({0.9, 1.0, 0.85}, {0.85, 0.8, 0.5}, 1, {0, 2}, true);
  EXPECT_NEAR(lower_bound_constant(r), expect, 1e-12);
}

TEST(LowerBound, DomainViolationNamesTheArm) {
  // mu* = 0.8 equals p_2, so mu*/p_2 = 1 leaves (0, 1).
  const RewardProfile p({1.0, 0.8}, {0.8, 0.5});
  try {
    lower_bound_constant(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
    EXPECT_NE(std::string(e.what()).find("arm 2"), std::string::npos);
  }
}

TEST(UnstructuredConstant, Examples) {
  const RewardProfile two(ones(2), {0.9, 0.4});
  EXPECT_EQ(unstructured_constant(two), lower_bound_constant(two));
  const auto theta = scenarios::directional();
  const RewardProfile p(ones(8), theta);
  const double expect = oracle::constant(ones(8), theta, 0, {1, 2, 3, 4, 5, 6, 7}, true);
  EXPECT_NEAR(unstructured_constant(p), expect, 1e-10);
}

TEST(Constants, PaddingKeepsCAndGrowsCPrime) {
  const RewardProfile p8(ones(8), scenarios::directional());
  const RewardProfile p16(ones(16), scenarios::directional16());
  EXPECT_EQ(lower_bound_constant(p8), lower_bound_constant(p16));
  EXPECT_GT(unstructured_constant(p16), unstructured_constant(p8));
}

TEST(Constants, StructuredNeverExceedsUnstructured) {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 2 + i % 12;
    std::vector<double> theta(k);
    for (auto& t : theta) t = u(gen);
    std::sort(theta.rbegin(), theta.rend());
    if (std::adjacent_find(theta.begin(), theta.end()) != theta.end()) continue;
    const RewardProfile p(ones(k), theta);
    const double c = lower_bound_constant(p);
    const double cp = unstructured_constant(p);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, cp);
  }
}

TEST(UpperBound, DirectionalEnvelope) {
  const RewardProfile p(ones(8), scenarios::directional());
  const double horizons[] = {1.0, 1e4, 2e4};
  const auto env = upper_bound_envelope(p, 0.1, horizons);
  EXPECT_EQ(env[0], 0.0);
  const double coef = 0.01 / oracle::kl(0.98, 0.99);
  EXPECT_NEAR(env[1], 1.1 * coef * std::log(1e4), 1e-9);
  EXPECT_NEAR(env[1], 25.8875, 1e-3);
  EXPECT_NEAR(env[2] - env[1], 1.1 * coef * std::log(2.0), 1e-9);
  EXPECT_THROW(upper_bound_envelope(p, 0.0, horizons), Error);
}

TEST(UpperBound, EqualThetaNeighborIsAnError) {
  const RewardProfile p({1.0, 0.5}, {0.8, 0.8});
  EXPECT_THROW(upper_bound_coefficient(p), Error);
}

TEST(BoundReport, FlagsNonUnitPowers) {
  const RewardProfile unit(ones(8), scenarios::directional());
  const auto a = bound_report(unit);
  EXPECT_FALSE(a.neighbors_differ);
  EXPECT_FALSE(a.divergence_forms_differ);
  EXPECT_EQ(a.k_star, 0u);
  EXPECT_EQ(a.ub_constant, upper_bound_coefficient(unit));

  const RewardProfile shaped({1.0, 0.9, 0.7}, {0.6, 0.5, 0.4});
  const auto b = bound_report(shaped);
  EXPECT_TRUE(b.divergence_forms_differ);
  EXPECT_FALSE(b.neighbors_differ);
  const double c = oracle::constant({1.0, 0.9, 0.7}, {0.6, 0.5, 0.4}, 0, {1}, true);
  const double ub = oracle::constant({1.0, 0.9, 0.7}, {0.6, 0.5, 0.4}, 0, {1}, false);
  EXPECT_NEAR(b.c_theta, c, 1e-12);
  EXPECT_NEAR(b.ub_constant, ub, 1e-12);
}

}  // namespace
}  // namespace uba
