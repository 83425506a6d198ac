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

// Monte-Carlo driver: seeded episodes of any policy against a scenario,
// aggregated into regret curves and detection statistics.
//
// Per-probe regret is mu* - mu_{k(t)} (expected, not realized). Each probe
// occupies pilot_duration slots and the oracle gets the same probe budget.
// Once a run terminates it keeps playing its declared arm for the rest of
// the horizon without further learning.

#ifndef UBA_HARNESS_HPP
#define UBA_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uba/sim_config.hpp"
#include "uba/theory_bounds.hpp"

namespace uba {

struct TraceRecord {
  std::uint64_t probe = 0;  // 1-based
  std::uint64_t slot = 0;   // last slot the probe occupies
  Arm arm = 0;
  bool success = false;
  double energy = 0.0;
  Arm leader = 0;
  double cumulative_regret = 0.0;
  bool terminated = false;
};

struct RunSummary {
  std::optional<Arm> declared_arm;
  /// Slots until the declaration (probe count times pilot duration).
  std::optional<std::uint64_t> delay;
  double final_regret = 0.0;
  Arm initial_leader = 0;
};

struct RegretCurve {
  std::vector<std::uint64_t> slot;
  std::vector<double> mean;
  std::vector<double> std_error;
  /// mu* times the number of probes so far.
  std::vector<double> oracle_reward;
};

struct DetectionStats {
  bool enabled = false;
  std::uint32_t runs = 0;
  /// declared_counts[k] runs declared arm k.
  std::vector<std::uint64_t> declared_counts;
  /// Delay of every terminated run, sorted ascending.
  std::vector<std::uint64_t> delays;
  std::uint32_t non_terminated = 0;

  std::uint64_t terminated() const { return runs - non_terminated; }
  /// declared_counts / runs; sums to at most 1.
  std::vector<double> frequencies() const;
  /// Fraction of terminated runs that declared `arm`.
  double accuracy(Arm arm) const;
  double mean_delay() const;
  double median_delay() const;
};

struct ExperimentResult {
  SimConfig config;
  RegretCurve regret;
  DetectionStats detection;
  std::optional<BoundReport> bounds;
  /// Why bounds are missing, when they are.
  std::string bounds_error;
  /// Indexed by run id.
  std::vector<RunSummary> runs;

  double mean_regret_at(std::uint64_t slot) const;
};

struct ExecutionOptions {
  /// 0 uses SimConfig::threads.
  unsigned threads = 0;
  /// Order in which run ids are handed to workers; empty means 0..runs-1.
  std::vector<std::uint32_t> schedule;
};

/// One run's full trace.
std::vector<TraceRecord> run_episode(const SimConfig& cfg, std::uint32_t run_id);

ExperimentResult run_experiment(const SimConfig& cfg,
                                const ExecutionOptions& exec = {});

}  // namespace uba

#endif  // UBA_HARNESS_HPP
