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

#ifndef UBA_RNG_HPP
#define UBA_RNG_HPP

#include <array>
#include <cstdint>

namespace uba {

/// Philox4x32-10 block function (Salmon et al., SC'11). Stateless: the same
/// (key, counter) always maps to the same 128 output bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Streams drawn from one (seed, run, slot) address. A tag keeps draws that
/// serve different purposes (reward success, initial leader, ...) apart.
enum class StreamTag : std::uint32_t {
  kReward = 0,
  kInitialLeader = 1,
  kSweepTx = 2,
  kSweepRx = 3,
};

/// Counter-based random source addressed by (seed, run, slot, arm). There is
/// no hidden state, so evaluation order never changes a draw and runs can be
/// scheduled on any thread.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint32_t run) : seed_(seed), run_(run) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform(std::uint64_t slot, std::uint32_t arm,
                 StreamTag tag = StreamTag::kReward) const;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint32_t run() const noexcept { return run_; }

  /// Same seed, different run id.
  CounterRng for_run(std::uint32_t run) const { return {seed_, run}; }

 private:
  std::uint64_t seed_;
  std::uint32_t run_;
};

}  // namespace uba

#endif  // UBA_RNG_HPP
