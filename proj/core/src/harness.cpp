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

#include "uba/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "uba/baselines.hpp"
#include "uba/error.hpp"

namespace uba {
namespace {

// Regret sums are accumulated in fixed point so the aggregate is an integer
// sum, identical under any run order or thread count.
constexpr double kFixedScale = 16777216.0;  // 2^24
using Wide = __int128;

struct Prepared {
  const SimConfig& cfg;
  RewardProfile profile;
  std::vector<double> gaps;
  std::uint64_t probes;
  std::uint64_t scan_length;
  bool scan_declares;

  explicit Prepared(const SimConfig& c)
      : cfg(c),
        profile(c.scenario.build_profile()),
        probes(c.probes()),
        scan_length(c.exhaustive.scan_length(profile.size())),
        scan_declares(c.policy == PolicyKind::kExhaustive &&
                      c.exhaustive.mode == ExhaustiveMode::kScanThenCommit &&
                      c.uba.termination_enabled) {
    gaps.resize(profile.size());
    for (Arm k = 0; k < profile.size(); ++k) {
      gaps[k] = profile.best_mean() - profile.mean(k);
    }
  }
};

Arm pick_initial_leader(const Prepared& p, const CounterRng& rng) {
  if (p.cfg.initial_leader) return *p.cfg.initial_leader;
  const auto arms = static_cast<double>(p.profile.size());
  const auto k = static_cast<Arm>(
      std::floor(rng.uniform(0, 0, StreamTag::kInitialLeader) * arms));
  return std::min<Arm>(k, p.profile.size() - 1);
}

template <class Sink>
RunSummary simulate_run(const Prepared& p, std::uint32_t run_id, Sink&& sink) {
  const SimConfig& cfg = p.cfg;
  const CounterRng rng(cfg.base_seed, run_id);
  const auto powers = p.profile.powers();
  const std::size_t arms = p.profile.size();

  RunSummary summary;
  summary.initial_leader = pick_initial_leader(p, rng);
  PolicyState state(arms, summary.initial_leader);
  double regret = 0.0;

  for (std::uint64_t probe = 1; probe <= p.probes; ++probe) {
    Arm k = 0;
    RewardSample sample;
    if (state.terminated()) {
      k = *state.terminal_arm();
      sample = sample_reward(p.profile, k, rng, probe - 1);
    } else {
      switch (cfg.policy) {
        case PolicyKind::kUba:
          k = select_arm(state, cfg.uba, arms, powers);
          break;
        case PolicyKind::kExhaustive:
          k = exhaustive_select(state, cfg.exhaustive, arms);
          break;
        case PolicyKind::kVanillaKlucb:
          k = vanilla_klucb_select(state, cfg.uba.c_const, powers);
          break;
      }
      sample = sample_reward(p.profile, k, rng, state.slot());
      update(state, k, sample, powers);
      if (cfg.policy == PolicyKind::kExhaustive) {
        if (p.scan_declares && state.slot() == p.scan_length) {
          state.terminate(best_empirical_arm(state));
        }
      } else if (cfg.uba.termination_enabled) {
        check_termination(state, cfg.uba);
      }
    }
    regret += p.gaps[k];
    sink(TraceRecord{probe, probe * cfg.pilot_duration, k, sample.success,
                     sample.energy, state.leader(), regret,
                     state.terminated()});
  }

  summary.final_regret = regret;
  summary.declared_arm = state.terminal_arm();
  if (auto slot = state.termination_slot()) {
    summary.delay = *slot * cfg.pilot_duration;
  }
  return summary;
}

struct Accumulator {
  std::vector<std::int64_t> sum;
  std::vector<Wide> sum_sq;

  explicit Accumulator(std::size_t n) : sum(n, 0), sum_sq(n, 0) {}

  void add(std::size_t i, double regret) {
    const auto q = static_cast<std::int64_t>(std::llround(regret * kFixedScale));
    sum[i] += q;
    sum_sq[i] += static_cast<Wide>(q) * q;
  }

  void merge(const Accumulator& other) {
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += other.sum[i];
      sum_sq[i] += other.sum_sq[i];
    }
  }
};

}  // namespace

std::vector<double> DetectionStats::frequencies() const {
  std::vector<double> out(declared_counts.size(), 0.0);
  if (runs == 0) return out;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = static_cast<double>(declared_counts[k]) / runs;
  }
  return out;
}

double DetectionStats::accuracy(Arm arm) const {
  const auto n = terminated();
  if (n == 0 || arm >= declared_counts.size()) return 0.0;
  return static_cast<double>(declared_counts[arm]) / static_cast<double>(n);
}

double DetectionStats::mean_delay() const {
  if (delays.empty()) return 0.0;
  long double s = 0;
  for (auto d : delays) s += d;
  return static_cast<double>(s / delays.size());
}

double DetectionStats::median_delay() const {
  if (delays.empty()) return 0.0;
  const std::size_t n = delays.size();
  if (n % 2 == 1) return static_cast<double>(delays[n / 2]);
  return 0.5 * static_cast<double>(delays[n / 2 - 1] + delays[n / 2]);
}

double ExperimentResult::mean_regret_at(std::uint64_t slot) const {
  const auto it = std::lower_bound(regret.slot.begin(), regret.slot.end(), slot);
  if (it == regret.slot.end() || *it != slot) {
    throw Error(ErrorCode::kIndex, "no regret sample at slot " +
                                       std::to_string(slot));
  }
  return regret.mean[static_cast<std::size_t>(it - regret.slot.begin())];
}

std::vector<TraceRecord> run_episode(const SimConfig& cfg, std::uint32_t run_id) {
  cfg.validate();
  const Prepared p(cfg);
  std::vector<TraceRecord> trace;
  trace.reserve(p.probes);
  simulate_run(p, run_id, [&](const TraceRecord& r) { trace.push_back(r); });
  return trace;
}

ExperimentResult run_experiment(const SimConfig& cfg,
                                const ExecutionOptions& exec) {
  cfg.validate();
  const Prepared p(cfg);
  const std::size_t n = p.probes;

  std::vector<std::uint32_t> schedule = exec.schedule;
  if (schedule.empty()) {
    schedule.resize(cfg.runs);
    for (std::uint32_t r = 0; r < cfg.runs; ++r) schedule[r] = r;
  } else {
    if (schedule.size() != cfg.runs) {
      throw Error(ErrorCode::kExperiment, "schedule must list every run once");
    }
    std::vector<std::uint32_t> check = schedule;
    std::sort(check.begin(), check.end());
    for (std::uint32_t r = 0; r < check.size(); ++r) {
      if (check[r] != r) {
        throw Error(ErrorCode::kExperiment,
                    "schedule must be a permutation of the run ids");
      }
    }
  }
  if (schedule.empty()) throw Error(ErrorCode::kExperiment, "no runs");

  unsigned threads = exec.threads ? exec.threads : cfg.threads;
  threads = std::clamp<unsigned>(threads, 1u,
                                 static_cast<unsigned>(schedule.size()));

  ExperimentResult result;
  result.config = cfg;
  result.runs.resize(schedule.size());

  Accumulator total(n);
  std::mutex merge_mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;

  auto worker = [&] {
    Accumulator local(n);
    try {
      for (std::size_t i = next++; i < schedule.size(); i = next++) {
        const std::uint32_t run = schedule[i];
        std::size_t idx = 0;
        result.runs[run] = simulate_run(p, run, [&](const TraceRecord& r) {
          local.add(idx++, r.cumulative_regret);
        });
      }
    } catch (...) {
      std::lock_guard lock(merge_mutex);
      if (!failure) failure = std::current_exception();
      return;
    }
    std::lock_guard lock(merge_mutex);
    total.merge(local);
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  const auto runs = static_cast<long double>(schedule.size());
  auto& curve = result.regret;
  curve.slot.resize(n);
  curve.mean.resize(n);
  curve.std_error.resize(n);
  curve.oracle_reward.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    curve.slot[i] = (i + 1) * cfg.pilot_duration;
    curve.mean[i] = static_cast<double>(total.sum[i] / runs / kFixedScale);
    double se = 0.0;
    if (schedule.size() > 1) {
      const Wide r = static_cast<Wide>(schedule.size());
      const Wide s = total.sum[i];
      const Wide centered = r * total.sum_sq[i] - s * s;  // r (r - 1) var
      const long double var = static_cast<long double>(centered) /
                              (runs * (runs - 1)) / (kFixedScale * kFixedScale);
      se = static_cast<double>(std::sqrt(std::max(0.0L, var) / runs));
    }
    curve.std_error[i] = se;
    curve.oracle_reward[i] = p.profile.best_mean() * static_cast<double>(i + 1);
  }

  auto& det = result.detection;
  det.enabled = cfg.uba.termination_enabled &&
                (cfg.policy != PolicyKind::kExhaustive || p.scan_declares);
  det.runs = static_cast<std::uint32_t>(schedule.size());
  det.declared_counts.assign(p.profile.size(), 0);
  for (const auto& run : result.runs) {
    if (run.declared_arm) {
      ++det.declared_counts[*run.declared_arm];
      det.delays.push_back(*run.delay);
    } else {
      ++det.non_terminated;
    }
  }
  std::sort(det.delays.begin(), det.delays.end());

  try {
    result.bounds = bound_report(p.profile);
  } catch (const Error& e) {
    result.bounds_error = e.what();
  }
  return result;
}

}  // namespace uba
