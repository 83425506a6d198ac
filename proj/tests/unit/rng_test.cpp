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

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "uba/error.hpp"
#include "uba/rng.hpp"

namespace uba {
namespace {

using Block = std::array<std::uint32_t, 4>;

// Known-answer vectors published with the Random123 reference code.
TEST(Philox, KnownAnswerZero) {
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}),
            (Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerAllOnes) {
  EXPECT_EQ(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                       {0xffffffff, 0xffffffff}),
            (Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPiDigits) {
  EXPECT_EQ(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                       {0xa4093822, 0x299f31d0}),
            (Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(CounterRng, SameAddressSameValue) {
  const CounterRng a(42, 7);
  const CounterRng b(42, 7);
  for (std::uint64_t slot = 0; slot < 100; ++slot) {
    EXPECT_EQ(a.uniform(slot, 3), b.uniform(slot, 3));
  }
}

TEST(CounterRng, EvaluationOrderIrrelevant) {
  const CounterRng rng(5, 1);
  std::vector<double> forward;
  for (std::uint64_t s = 0; s < 64; ++s) forward.push_back(rng.uniform(s, s % 8));
  for (std::uint64_t s = 64; s-- > 0;) {
    EXPECT_EQ(forward[s], rng.uniform(s, s % 8));
  }
}

TEST(CounterRng, StreamsDiffer) {
  const CounterRng rng(1, 0);
  std::set<double> seen;
  seen.insert(rng.uniform(0, 0));
  seen.insert(rng.uniform(0, 1));
  seen.insert(rng.uniform(1, 0));
  seen.insert(rng.for_run(1).uniform(0, 0));
  seen.insert(CounterRng(2, 0).uniform(0, 0));
  seen.insert(rng.uniform(0, 0, StreamTag::kInitialLeader));
  EXPECT_EQ(seen.size(), 6u);
}

TEST(CounterRng, UnitIntervalAndMean) {
  const CounterRng rng(99, 3);
  double sum = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.uniform(static_cast<std::uint64_t>(i), 0);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / kDraws, 0.5, 0.005);
}

}  // namespace
}  // namespace uba
