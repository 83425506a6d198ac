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

// Experiment configuration and its INI-style file format:
//
//   [scenario]
//   name = directional            ; built-in theta, or give `theta`
//   theta = 0.99, 0.98, ...
//   power = unit                  ; unit | gaussian
//   beam_width_deg = 10
//   angle_step_deg = 10           ; misalignment of arm k is k * step
//   misalignment = 0, 10, 20, ... ; overrides angle_step_deg
//
//   [policy]
//   name = uba                    ; uba | exhaustive | klucb
//   gamma = 2
//   c = 3.0
//   termination = false
//   psi = 4.0
//   psi_source = expected         ; expected | realized
//   min_slots = 2
//   initial_leader = 1            ; 1-based arm, or `uniform`
//   exhaustive_mode = round_robin ; round_robin | scan_then_commit
//   rounds_per_arm = 1
//
//   [simulation]
//   horizon = 10000
//   pilot_duration = 1
//   runs = 1000
//   seed = 1
//   threads = 1
//   epsilon = 0.1
//   out = results
//   format = csv                  ; csv | json
//   stride = 1                    ; regret rows emitted every `stride` probes

#ifndef UBA_SIM_CONFIG_HPP
#define UBA_SIM_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uba/baselines.hpp"
#include "uba/beam_model.hpp"
#include "uba/scenarios.hpp"
#include "uba/uba_policy.hpp"

namespace uba {

enum class PolicyKind { kUba, kExhaustive, kVanillaKlucb };
enum class OutputFormat { kCsv, kJson };

std::string_view to_string(PolicyKind kind);
PolicyKind parse_policy(std::string_view name);
OutputFormat parse_format(std::string_view name);

struct ScenarioConfig {
  std::string name = "directional";
  std::vector<double> theta = scenarios::directional();
  PowerModel power = UnitPower{};
  std::vector<double> misalignment_deg;
  double angle_step_deg = 10.0;
  double threshold = 0.0;

  BeamSpace build_space() const;
  RewardProfile build_profile() const;
};

struct SimConfig {
  std::uint64_t horizon = 10000;
  std::uint64_t pilot_duration = 1;
  PolicyKind policy = PolicyKind::kUba;
  ScenarioConfig scenario;
  std::uint32_t runs = 100;
  std::uint64_t base_seed = 1;
  UbaConfig uba;
  ExhaustiveConfig exhaustive;
  /// nullopt draws the starting leader uniformly per run.
  std::optional<Arm> initial_leader = Arm{0};
  double epsilon = 0.1;
  unsigned threads = 1;
  std::filesystem::path out_dir = "results";
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t curve_stride = 1;

  /// floor(T / T-bar) probes fit in the horizon.
  std::uint64_t probes() const { return horizon / pilot_duration; }
  void validate() const;
};

/// Parses the INI text; keys absent from the file keep their defaults in
/// `base`. Throws kConfig on unknown sections, keys or values.
SimConfig parse_config(std::string_view text, SimConfig base = {});
SimConfig load_config(const std::filesystem::path& path, SimConfig base = {});

std::vector<double> parse_list(std::string_view text);

}  // namespace uba

#endif  // UBA_SIM_CONFIG_HPP
