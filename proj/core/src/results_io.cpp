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

#include "uba/results_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "uba/error.hpp"

namespace uba {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr const char* kRegretHeader =
    "t,mean_regret,stderr,lower_bound_c_logt,upper_bound_envelope";

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json number_or_null(double v) {
  return std::isnan(v) ? json(nullptr) : json(v);
}

std::vector<std::size_t> one_based(const std::vector<Arm>& arms) {
  std::vector<std::size_t> out;
  for (Arm a : arms) out.push_back(a + 1);
  return out;
}

json bounds_to_json(const BoundReport& r) {
  return json{
      {"c_theta", r.c_theta},
      {"c_prime_theta", r.c_prime_theta},
      {"ub_constant", r.ub_constant},
      {"k_star", r.k_star + 1},
      {"filtered_neighbors", one_based(r.filtered_neighbors)},
      {"line_neighbors", one_based(r.line_neighbors)},
      {"neighbors_differ", r.neighbors_differ},
      {"divergence_forms_differ", r.divergence_forms_differ},
  };
}

struct DelayBin {
  std::uint64_t delay;
  std::uint64_t count;
  double cdf;
};

std::vector<DelayBin> delay_bins(const DetectionStats& det) {
  std::vector<DelayBin> out;
  const double n = static_cast<double>(det.delays.size());
  std::size_t i = 0;
  while (i < det.delays.size()) {
    std::size_t j = i;
    while (j < det.delays.size() && det.delays[j] == det.delays[i]) ++j;
    out.push_back({det.delays[i], j - i, static_cast<double>(j) / n});
    i = j;
  }
  return out;
}

json config_to_json(const SimConfig& c) {
  const auto* gauss = std::get_if<GaussianBeamPower>(&c.scenario.power);
  return json{
      {"horizon", c.horizon},
      {"pilot_duration", c.pilot_duration},
      {"policy", std::string(to_string(c.policy))},
      {"runs", c.runs},
      {"seed", c.base_seed},
      {"epsilon", c.epsilon},
      {"stride", c.curve_stride},
      {"scenario",
       {{"name", c.scenario.name},
        {"theta", c.scenario.theta},
        {"angle_step_deg", c.scenario.angle_step_deg},
        {"misalignment_deg", c.scenario.misalignment_deg},
        {"threshold", c.scenario.threshold},
        {"power", gauss ? "gaussian" : "unit"},
        {"beam_width_deg", gauss ? json(gauss->width_deg) : json(nullptr)}}},
      {"uba",
       {{"gamma", c.uba.gamma},
        {"c", c.uba.c_const},
        {"psi", c.uba.psi_threshold},
        {"termination", c.uba.termination_enabled},
        {"psi_source", c.uba.psi_source == PsiSource::kExpectedPower
                           ? "expected"
                           : "realized"},
        {"min_slots", c.uba.min_slots},
        {"initial_leader", c.initial_leader ? json(*c.initial_leader + 1)
                                            : json("uniform")}}},
      {"exhaustive",
       {{"mode", c.exhaustive.mode == ExhaustiveMode::kScanThenCommit
                     ? "scan_then_commit"
                     : "round_robin"},
        {"rounds_per_arm", c.exhaustive.rounds_per_arm}}},
  };
}

json detection_to_json(const DetectionStats& det) {
  json arms = json::array();
  const auto freq = det.frequencies();
  double cdf = 0.0;
  for (std::size_t k = 0; k < freq.size(); ++k) {
    cdf += freq[k];
    arms.push_back({{"arm", k + 1},
                    {"count", det.declared_counts[k]},
                    {"frequency", freq[k]},
                    {"cdf", cdf}});
  }
  json delays = json::array();
  for (const auto& b : delay_bins(det)) {
    delays.push_back({{"delay", b.delay}, {"count", b.count}, {"cdf", b.cdf}});
  }
  return json{{"runs", det.runs},
              {"terminated", det.terminated()},
              {"non_terminated", det.non_terminated},
              {"mean_delay", det.mean_delay()},
              {"median_delay", det.median_delay()},
              {"arms", arms},
              {"delays", delays}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace

std::vector<RegretRow> regret_table(const ExperimentResult& result) {
  const auto& curve = result.regret;
  const std::uint64_t stride = result.config.curve_stride;
  double c_theta = kNaN;
  double ub = kNaN;
  if (result.bounds) {
    c_theta = result.bounds->c_theta;
    ub = (1.0 + result.config.epsilon) * result.bounds->ub_constant;
  }
  std::vector<RegretRow> rows;
  const std::size_t n = curve.slot.size();
  for (std::size_t i = 0; i < n; ++i) {
    if ((i + 1) % stride != 0 && i + 1 != n) continue;
    const double log_t = std::log(static_cast<double>(curve.slot[i]));
    rows.push_back({curve.slot[i], curve.mean[i], curve.std_error[i],
                    c_theta * log_t, ub * log_t});
  }
  return rows;
}

std::string regret_csv(std::span<const RegretRow> rows) {
  std::string out = kRegretHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.t);
    for (double v : {r.mean_regret, r.std_error, r.lower_bound_c_logt,
                     r.upper_bound_envelope}) {
      out += ',';
      out += fmt(v);
    }
    out += '\n';
  }
  return out;
}

std::vector<RegretRow> parse_regret_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kRegretHeader) {
    throw Error(ErrorCode::kIo, "regret table header mismatch");
  }
  std::vector<RegretRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 5) {
      throw Error(ErrorCode::kIo, "regret row needs 5 columns: " + line);
    }
    RegretRow r;
    r.t = std::stoull(cells[0]);
    double* fields[] = {&r.mean_regret, &r.std_error, &r.lower_bound_c_logt,
                        &r.upper_bound_envelope};
    for (int c = 0; c < 4; ++c) *fields[c] = std::strtod(cells[c + 1].c_str(), nullptr);
    rows.push_back(r);
  }
  return rows;
}

std::string bounds_json(const BoundReport& report) {
  return bounds_to_json(report).dump(2) + "\n";
}

std::string results_json(const ExperimentResult& result) {
  json regret = {{"t", json::array()},
                 {"mean_regret", json::array()},
                 {"stderr", json::array()},
                 {"lower_bound_c_logt", json::array()},
                 {"upper_bound_envelope", json::array()}};
  for (const auto& r : regret_table(result)) {
    regret["t"].push_back(r.t);
    regret["mean_regret"].push_back(r.mean_regret);
    regret["stderr"].push_back(r.std_error);
    regret["lower_bound_c_logt"].push_back(number_or_null(r.lower_bound_c_logt));
    regret["upper_bound_envelope"].push_back(
        number_or_null(r.upper_bound_envelope));
  }
  json doc = {
      {"schema_version", std::string(kResultsSchemaVersion)},
      {"config", config_to_json(result.config)},
      {"regret", regret},
      {"detection", result.detection.enabled
                        ? detection_to_json(result.detection)
                        : json(nullptr)},
      {"bounds", result.bounds ? bounds_to_json(*result.bounds) : json(nullptr)},
      {"bounds_error", result.bounds_error},
  };
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit_results(const ExperimentResult& result,
                                                OutputFormat format,
                                                const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " +
                                    ec.message());
  }
  std::vector<std::filesystem::path> written;
  json files = json::array();
  json notes = json::array();
  auto put = [&](const std::string& name, const std::string& text) {
    write_file(dir / name, text);
    written.push_back(dir / name);
    files.push_back(name);
  };

  const auto& det = result.detection;
  if (format == OutputFormat::kJson) {
    put("results.json", results_json(result));
    if (!det.enabled) notes.push_back("detection: null (termination disabled)");
  } else {
    put("regret.csv", regret_csv(regret_table(result)));
    if (det.enabled) {
      std::string d = "arm,count,frequency,cdf\n";
      const auto freq = det.frequencies();
      double cdf = 0.0;
      for (std::size_t k = 0; k < freq.size(); ++k) {
        cdf += freq[k];
        d += std::to_string(k + 1) + "," + std::to_string(det.declared_counts[k]) +
             "," + fmt(freq[k]) + "," + fmt(cdf) + "\n";
      }
      put("detection.csv", d);
      std::string dl = "delay,count,cdf\n";
      for (const auto& b : delay_bins(det)) {
        dl += std::to_string(b.delay) + "," + std::to_string(b.count) + "," +
              fmt(b.cdf) + "\n";
      }
      put("delay.csv", dl);
    } else {
      notes.push_back("detection.csv and delay.csv omitted: termination disabled");
    }
    if (result.bounds) {
      const auto& b = *result.bounds;
      std::string text = "key,value\n";
      text += "c_theta," + fmt(b.c_theta) + "\n";
      text += "c_prime_theta," + fmt(b.c_prime_theta) + "\n";
      text += "ub_constant," + fmt(b.ub_constant) + "\n";
      text += "k_star," + std::to_string(b.k_star + 1) + "\n";
      text += "epsilon," + fmt(result.config.epsilon) + "\n";
      put("bounds.csv", text);
    }
  }
  if (!result.bounds) notes.push_back("bounds unavailable: " + result.bounds_error);

  json manifest = {{"schema_version", std::string(kResultsSchemaVersion)},
                   {"format", format == OutputFormat::kJson ? "json" : "csv"},
                   {"files", files},
                   {"notes", notes}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  written.push_back(dir / "manifest.json");
  return written;
}

}  // namespace uba
