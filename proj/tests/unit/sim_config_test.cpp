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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "uba/error.hpp"
#include "uba/sim_config.hpp"

namespace uba {
namespace {

TEST(ParseConfig, FullFile) {
  const auto cfg = parse_config(R"(
; leading comment
[scenario]
name = custom
theta = 0.9, 0.6, 0.2   ; trailing comment
power = gaussian
beam_width_deg = 12.5
angle_step_deg = 5

[policy]
name = klucb
gamma = 3
c = 2.5
termination = yes
psi = 5
psi_source = realized
min_slots = 4
initial_leader = 2
exhaustive_mode = scan_then_commit
rounds_per_arm = 2

[simulation]
horizon = 500
pilot_duration = 2
runs = 7
seed = 99
threads = 3
epsilon = 0.2
out = /tmp/x
format = json
stride = 10
)");
  EXPECT_EQ(cfg.scenario.name, "custom");
  EXPECT_EQ(cfg.scenario.theta, (std::vector<double>{0.9, 0.6, 0.2}));
  ASSERT_TRUE(std::holds_alternative<GaussianBeamPower>(cfg.scenario.power));
  EXPECT_EQ(std::get<GaussianBeamPower>(cfg.scenario.power).width_deg, 12.5);
  EXPECT_EQ(cfg.scenario.angle_step_deg, 5.0);
  EXPECT_EQ(cfg.policy, PolicyKind::kVanillaKlucb);
  EXPECT_EQ(cfg.uba.gamma, 3u);
  EXPECT_EQ(cfg.uba.c_const, 2.5);
  EXPECT_TRUE(cfg.uba.termination_enabled);
  EXPECT_EQ(cfg.uba.psi_threshold, 5.0);
  EXPECT_EQ(cfg.uba.psi_source, PsiSource::kRealizedEnergy);
  EXPECT_EQ(cfg.uba.min_slots, 4u);
  EXPECT_EQ(cfg.initial_leader, Arm{1});
  EXPECT_EQ(cfg.exhaustive.mode, ExhaustiveMode::kScanThenCommit);
  EXPECT_EQ(cfg.exhaustive.rounds_per_arm, 2u);
  EXPECT_EQ(cfg.horizon, 500u);
  EXPECT_EQ(cfg.pilot_duration, 2u);
  EXPECT_EQ(cfg.probes(), 250u);
  EXPECT_EQ(cfg.runs, 7u);
  EXPECT_EQ(cfg.base_seed, 99u);
  EXPECT_EQ(cfg.threads, 3u);
  EXPECT_EQ(cfg.epsilon, 0.2);
  EXPECT_EQ(cfg.out_dir, "/tmp/x");
  EXPECT_EQ(cfg.format, OutputFormat::kJson);
  EXPECT_EQ(cfg.curve_stride, 10u);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(ParseConfig, NamedScenarioAndDefaults) {
  const auto cfg = parse_config("[scenario]\nname = quasi_directional\n");
  EXPECT_EQ(cfg.scenario.theta.size(), 8u);
  EXPECT_TRUE(std::holds_alternative<UnitPower>(cfg.scenario.power));
  EXPECT_EQ(cfg.policy, PolicyKind::kUba);
  EXPECT_EQ(cfg.initial_leader, Arm{0});
  EXPECT_EQ(parse_config("[policy]\ninitial_leader = uniform\n").initial_leader,
            std::nullopt);
  // Key order inside a section does not matter.
  const auto a = parse_config("[scenario]\nbeam_width_deg = 8\npower = gaussian\n");
  EXPECT_EQ(std::get<GaussianBeamPower>(a.scenario.power).width_deg, 8.0);
  EXPECT_TRUE(std::holds_alternative<UnitPower>(
      parse_config("[scenario]\npower = unit\n").scenario.power));
}

TEST(ParseConfig, Rejections) {
  auto code = [](const char* text) {
    try {
      parse_config(text).validate();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kState;
  };
  EXPECT_EQ(code("[scenario]\nname = nowhere\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[scenario]\ncolour = red\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[extras]\nx = 1\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[simulation]\nhorizon = -3\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[simulation]\nhorizon = 0\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[policy]\nname = ucb1\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[policy]\ninitial_leader = 0\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[policy]\ninitial_leader = 9\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[scenario]\ntheta = 0.5,,0.2\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[scenario]\nbeam_width_deg = 3\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[simulation]\nformat = xml\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("[simulation\nhorizon = 3\n"), ErrorCode::kConfig);
}

TEST(LoadConfig, ShippedConfigsParse) {
  namespace fs = std::filesystem;
  int n = 0;
  for (const auto& entry : fs::recursive_directory_iterator(UBA_TEST_CONFIG_DIR)) {
    if (entry.path().extension() != ".ini") continue;
    const auto cfg = load_config(entry.path());
    EXPECT_NO_THROW(cfg.validate()) << entry.path();
    EXPECT_NO_THROW(cfg.scenario.build_profile()) << entry.path();
    ++n;
  }
  EXPECT_GE(n, 10);
  EXPECT_THROW(load_config("/nonexistent/file.ini"), Error);
}

TEST(ScenarioConfig, MisalignmentDrivesGaussianPowers) {
  ScenarioConfig sc;
  sc.theta = {0.9, 0.9, 0.9};
  sc.power = GaussianBeamPower{10.0};
  sc.misalignment_deg = {0.0, 10.0, 20.0};
  const auto p = sc.build_profile();
  EXPECT_NEAR(p.power(1), 0.6065306597126334, 1e-15);
  sc.misalignment_deg = {0.0, 10.0};
  EXPECT_THROW(sc.build_profile(), Error);
}

}  // namespace
}  // namespace uba
