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

#include "uba/sim_config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "uba/error.hpp"
#include "uba/scenarios.hpp"

namespace uba {
namespace {

namespace pt = boost::property_tree;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Values may carry a trailing "; comment" or "# comment".
std::string value_of(const pt::ptree& node) {
  std::string_view v = node.data();
  const auto cut = v.find_first_of(";#");
  if (cut != std::string_view::npos) v = v.substr(0, cut);
  return std::string(trim(v));
}

[[noreturn]] void bad(const std::string& key, const std::string& value,
                      const char* expected) {
  throw Error(ErrorCode::kConfig, "key '" + key + "' = '" + value +
                                      "': expected " + expected);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad(key, v, "a number");
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    bad(key, v, "a non-negative integer");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad(key, v, "true or false");
}

void apply_scenario(const pt::ptree& sec, SimConfig& cfg) {
  auto& sc = cfg.scenario;
  bool theta_given = false;
  bool name_given = false;
  std::optional<std::string> power_name;
  std::optional<double> width;
  for (const auto& [key, node] : sec) {
    const std::string v = value_of(node);
    if (key == "name") {
      sc.name = v;
      name_given = true;
    } else if (key == "theta") {
      sc.theta = parse_list(v);
      theta_given = true;
    } else if (key == "power") {
      if (v != "unit" && v != "gaussian" && v != "gaussian_beam") {
        bad(key, v, "unit or gaussian");
      }
      power_name = v;
    } else if (key == "beam_width_deg") {
      width = to_double(key, v);
    } else if (key == "angle_step_deg") {
      sc.angle_step_deg = to_double(key, v);
    } else if (key == "misalignment") {
      sc.misalignment_deg = parse_list(v);
    } else if (key == "threshold") {
      sc.threshold = to_double(key, v);
    } else {
      throw Error(ErrorCode::kConfig, "unknown key [scenario] " + key);
    }
  }
  if (power_name) {
    if (*power_name == "unit") {
      sc.power = UnitPower{};
    } else {
      sc.power = GaussianBeamPower{};
    }
  }
  if (width) {
    auto* g = std::get_if<GaussianBeamPower>(&sc.power);
    if (!g) {
      throw Error(ErrorCode::kConfig, "beam_width_deg needs power = gaussian");
    }
    g->width_deg = *width;
  }
  if (name_given && !theta_given) {
    auto theta = scenarios::by_name(sc.name);
    if (!theta) {
      throw Error(ErrorCode::kConfig,
                  "unknown scenario '" + sc.name + "' and no theta given");
    }
    sc.theta = std::move(*theta);
  }
}

void apply_policy(const pt::ptree& sec, SimConfig& cfg) {
  for (const auto& [key, node] : sec) {
    const std::string v = value_of(node);
    if (key == "name") {
      cfg.policy = parse_policy(v);
    } else if (key == "gamma") {
      cfg.uba.gamma = to_u64(key, v);
    } else if (key == "c") {
      cfg.uba.c_const = to_double(key, v);
    } else if (key == "termination") {
      cfg.uba.termination_enabled = to_bool(key, v);
    } else if (key == "psi") {
      cfg.uba.psi_threshold = to_double(key, v);
    } else if (key == "psi_source") {
      if (v == "expected") {
        cfg.uba.psi_source = PsiSource::kExpectedPower;
      } else if (v == "realized") {
        cfg.uba.psi_source = PsiSource::kRealizedEnergy;
      } else {
        bad(key, v, "expected or realized");
      }
    } else if (key == "min_slots") {
      cfg.uba.min_slots = to_u64(key, v);
    } else if (key == "initial_leader") {
      if (v == "uniform") {
        cfg.initial_leader.reset();
      } else {
        const auto arm = to_u64(key, v);
        if (arm < 1) bad(key, v, "a 1-based arm or 'uniform'");
        cfg.initial_leader = static_cast<Arm>(arm - 1);
      }
    } else if (key == "exhaustive_mode") {
      if (v == "round_robin" || v == "perpetual_round_robin") {
        cfg.exhaustive.mode = ExhaustiveMode::kPerpetualRoundRobin;
      } else if (v == "scan_then_commit") {
        cfg.exhaustive.mode = ExhaustiveMode::kScanThenCommit;
      } else {
        bad(key, v, "round_robin or scan_then_commit");
      }
    } else if (key == "rounds_per_arm") {
      cfg.exhaustive.rounds_per_arm = to_u64(key, v);
    } else {
      throw Error(ErrorCode::kConfig, "unknown key [policy] " + key);
    }
  }
}

void apply_simulation(const pt::ptree& sec, SimConfig& cfg) {
  for (const auto& [key, node] : sec) {
    const std::string v = value_of(node);
    if (key == "horizon") {
      cfg.horizon = to_u64(key, v);
    } else if (key == "pilot_duration") {
      cfg.pilot_duration = to_u64(key, v);
    } else if (key == "runs") {
      const auto runs = to_u64(key, v);
      if (runs > 0xFFFFFFFFull) bad(key, v, "a 32-bit run count");
      cfg.runs = static_cast<std::uint32_t>(runs);
    } else if (key == "seed") {
      cfg.base_seed = to_u64(key, v);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(to_u64(key, v));
    } else if (key == "epsilon") {
      cfg.epsilon = to_double(key, v);
    } else if (key == "out") {
      cfg.out_dir = v;
    } else if (key == "format") {
      cfg.format = parse_format(v);
    } else if (key == "stride") {
      cfg.curve_stride = to_u64(key, v);
    } else {
      throw Error(ErrorCode::kConfig, "unknown key [simulation] " + key);
    }
  }
}

}  // namespace

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kUba:
      return "uba";
    case PolicyKind::kExhaustive:
      return "exhaustive";
    case PolicyKind::kVanillaKlucb:
      return "klucb";
  }
  return "?";
}

PolicyKind parse_policy(std::string_view name) {
  if (name == "uba") return PolicyKind::kUba;
  if (name == "exhaustive") return PolicyKind::kExhaustive;
  if (name == "klucb" || name == "vanilla_klucb") return PolicyKind::kVanillaKlucb;
  throw Error(ErrorCode::kConfig,
              "unknown policy '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw Error(ErrorCode::kConfig,
              "unknown output format '" + std::string(name) + "'");
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = trim(text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos));
    if (item.empty()) {
      throw Error(ErrorCode::kConfig,
                  "empty entry in list '" + std::string(text) + "'");
    }
    out.push_back(to_double("list", std::string(item)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

BeamSpace ScenarioConfig::build_space() const {
  std::vector<double> delta = misalignment_deg;
  if (delta.empty()) {
    delta.resize(theta.size());
    for (std::size_t k = 0; k < delta.size(); ++k) {
      delta[k] = angle_step_deg * static_cast<double>(k);
    }
  }
  if (delta.size() != theta.size()) {
    throw Error(ErrorCode::kConfig,
                "scenario misalignment and theta differ in length");
  }
  return BeamSpace::from_misalignment(std::move(delta));
}

RewardProfile ScenarioConfig::build_profile() const {
  if (theta.empty()) {
    throw Error(ErrorCode::kConfig, "scenario '" + name + "' has no theta");
  }
  const BeamSpace space = build_space();
  const RewardProfile shaped = uba::build_profile(space, power, theta);
  return RewardProfile({shaped.powers().begin(), shaped.powers().end()},
                       theta, threshold);
}

void SimConfig::validate() const {
  if (horizon < 1) throw Error(ErrorCode::kConfig, "horizon must be >= 1");
  if (pilot_duration < 1) {
    throw Error(ErrorCode::kConfig, "pilot_duration must be >= 1");
  }
  if (runs < 1) throw Error(ErrorCode::kConfig, "runs must be >= 1");
  if (curve_stride < 1) throw Error(ErrorCode::kConfig, "stride must be >= 1");
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kConfig, "epsilon must be > 0");
  if (probes() > 0xFFFFFFFFull) {
    throw Error(ErrorCode::kConfig, "more than 2^32 probes per run");
  }
  uba.validate();
  exhaustive.validate();
  if (scenario.theta.empty()) {
    throw Error(ErrorCode::kConfig, "scenario has no theta");
  }
  if (initial_leader && *initial_leader >= scenario.theta.size()) {
    throw Error(ErrorCode::kConfig, "initial_leader beyond the arm count");
  }
}

SimConfig parse_config(std::string_view text, SimConfig base) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
  SimConfig cfg = std::move(base);
  for (const auto& [section, node] : tree) {
    if (!node.data().empty() && node.empty()) {
      throw Error(ErrorCode::kConfig,
                  "key '" + section + "' outside of any section");
    }
    if (section == "scenario") {
      apply_scenario(node, cfg);
    } else if (section == "policy") {
      apply_policy(node, cfg);
    } else if (section == "simulation") {
      apply_simulation(node, cfg);
    } else {
      throw Error(ErrorCode::kConfig, "unknown section [" + section + "]");
    }
  }
  if (cfg.scenario.theta.empty()) {
    if (auto theta = scenarios::by_name(cfg.scenario.name)) {
      cfg.scenario.theta = std::move(*theta);
    }
  }
  return cfg;
}

SimConfig load_config(const std::filesystem::path& path, SimConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read config " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

}  // namespace uba
