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

// uba_sim: command-line front end.
//
//   uba_sim simulate --config <file> [--policy uba|exhaustive|klucb]
//                    [--runs N] [--seed S] [--horizon T] [--out <dir>]
//                    [--format csv|json] [--threads N]
//   uba_sim bounds --config <file>
//   uba_sim reproduce --figure regret8|regret16|accuracy8|accuracy128
//                     [--out <dir>] [--runs N] [--threads N]

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "uba/error.hpp"
#include "uba/harness.hpp"
#include "uba/results_io.hpp"
#include "uba/sim_config.hpp"
#include "uba/theory_bounds.hpp"

#ifndef UBA_CONFIG_DIR
#define UBA_CONFIG_DIR "configs"
#endif

namespace fs = std::filesystem;

namespace {

struct Overrides {
  std::optional<std::string> policy;
  std::optional<std::uint32_t> runs;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> horizon;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<unsigned> threads;

  void apply(uba::SimConfig& cfg) const {
    if (policy) cfg.policy = uba::parse_policy(*policy);
    if (runs) cfg.runs = *runs;
    if (seed) cfg.base_seed = *seed;
    if (horizon) cfg.horizon = *horizon;
    if (out) cfg.out_dir = *out;
    if (format) cfg.format = uba::parse_format(*format);
    if (threads) cfg.threads = *threads;
  }
};

void print_summary(const std::string& label, const uba::ExperimentResult& r) {
  const auto& cfg = r.config;
  std::printf("%-28s policy=%-10s K=%zu runs=%u T=%llu  regret(T)=%.3f +- %.3f\n",
              label.c_str(), std::string(uba::to_string(cfg.policy)).c_str(),
              cfg.scenario.theta.size(), cfg.runs,
              static_cast<unsigned long long>(cfg.horizon),
              r.regret.mean.back(), r.regret.std_error.back());
  if (r.detection.enabled) {
    const auto& d = r.detection;
    std::printf("%-28s terminated=%llu/%u  accuracy(beam 1)=%.3f  "
                "mean delay=%.2f  median delay=%.1f\n",
                "", static_cast<unsigned long long>(d.terminated()), d.runs,
                d.accuracy(0), d.mean_delay(), d.median_delay());
  }
}

int cmd_simulate(const std::string& config_path, const Overrides& ov) {
  uba::SimConfig cfg = uba::load_config(config_path);
  ov.apply(cfg);
  const auto result = uba::run_experiment(cfg);
  const auto files = uba::emit_results(result, cfg.format, cfg.out_dir);
  print_summary(fs::path(config_path).stem().string(), result);
  for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
  return 0;
}

int cmd_bounds(const std::string& config_path) {
  const uba::SimConfig cfg = uba::load_config(config_path);
  const auto profile = cfg.scenario.build_profile();
  std::cout << uba::bounds_json(uba::bound_report(profile));
  return 0;
}

int cmd_reproduce(const std::string& figure, const std::string& config_dir,
                  const Overrides& ov) {
  const fs::path dir = fs::path(config_dir) / figure;
  if (!fs::is_directory(dir)) {
    throw uba::Error(uba::ErrorCode::kConfig,
                     "no canned configs for figure '" + figure + "' in " +
                         dir.string());
  }
  std::vector<fs::path> configs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".ini") configs.push_back(entry.path());
  }
  std::sort(configs.begin(), configs.end());
  const fs::path out_root = ov.out ? fs::path(*ov.out) : fs::path("results");
  for (const auto& path : configs) {
    uba::SimConfig cfg = uba::load_config(path);
    Overrides local = ov;
    local.out.reset();
    local.apply(cfg);
    cfg.out_dir = out_root / figure / path.stem();
    const auto result = uba::run_experiment(cfg);
    uba::emit_results(result, cfg.format, cfg.out_dir);
    print_summary(path.stem().string(), result);
  }
  std::cout << "results under " << (out_root / figure).string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unimodal beam alignment simulator"};
  app.require_subcommand(1);

  Overrides ov;
  std::string config_path;
  std::string figure;
  std::string config_dir = UBA_CONFIG_DIR;

  auto add_overrides = [&](CLI::App* sub) {
    sub->add_option("--runs", ov.runs, "Monte-Carlo runs");
    sub->add_option("--seed", ov.seed, "base seed");
    sub->add_option("--horizon", ov.horizon, "horizon T in slots");
    sub->add_option("--out", ov.out, "output directory");
    sub->add_option("--format", ov.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", ov.threads, "worker threads");
  };

  auto* simulate = app.add_subcommand("simulate", "run a configured experiment");
  simulate->add_option("--config", config_path, "config file")->required();
  simulate->add_option("--policy", ov.policy, "uba, exhaustive or klucb")
      ->check(CLI::IsMember({"uba", "exhaustive", "klucb"}));
  add_overrides(simulate);

  auto* bounds = app.add_subcommand("bounds", "print the regret-bound report");
  bounds->add_option("--config", config_path, "config file")->required();

  auto* reproduce =
      app.add_subcommand("reproduce", "run the canned figure configurations");
  reproduce->add_option("--figure", figure, "figure id")
      ->required()
      ->check(CLI::IsMember({"regret8", "regret16", "accuracy8", "accuracy128"}));
  reproduce->add_option("--config-dir", config_dir, "canned config root");
  add_overrides(reproduce);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return cmd_simulate(config_path, ov);
    if (*bounds) return cmd_bounds(config_path);
    if (*reproduce) return cmd_reproduce(figure, config_dir, ov);
  } catch (const uba::Error& e) {
    std::cerr << "uba_sim: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
