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

// Plot-ready experiment output.
//
// csv:  regret.csv, detection.csv, delay.csv, bounds.csv, manifest.json
// json: results.json (schema/results.schema.json), manifest.json
//
// Detection and delay tables are omitted when no run could terminate; the
// manifest records the omission. Numbers are printed with 17 significant
// digits so tables parse back to the same doubles.

#ifndef UBA_RESULTS_IO_HPP
#define UBA_RESULTS_IO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uba/harness.hpp"

namespace uba {

inline constexpr std::string_view kResultsSchemaVersion = "1.0.0";

struct RegretRow {
  std::uint64_t t = 0;
  double mean_regret = 0.0;
  double std_error = 0.0;
  double lower_bound_c_logt = 0.0;
  double upper_bound_envelope = 0.0;

  bool operator==(const RegretRow&) const = default;
};

/// Rows every `stride` probes, plus the final probe.
std::vector<RegretRow> regret_table(const ExperimentResult& result);

std::string regret_csv(std::span<const RegretRow> rows);
std::vector<RegretRow> parse_regret_csv(std::string_view text);

std::string bounds_json(const BoundReport& report);
std::string results_json(const ExperimentResult& result);

/// Writes the files for `format` into `dir` (created if missing) and
/// returns their paths. Throws kIo when the directory is unwritable.
std::vector<std::filesystem::path> emit_results(const ExperimentResult& result,
                                                OutputFormat format,
                                                const std::filesystem::path& dir);

}  // namespace uba

#endif  // UBA_RESULTS_IO_HPP
