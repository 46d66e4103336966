// Copyright 2026 The qwalk Authors.
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

#include "qwalk/decoherence.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qwalk {
namespace {

constexpr double kPi = std::numbers::pi;

double standard_normal(NoiseEngine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return normal(rng);
}

// Fills `out` with `count` phase offsets, honoring the sharing mode.
void draw_phases(NoiseEngine& rng, const NoiseConfig& cfg, std::size_t count,
                 std::vector<double>& out) {
  out.resize(count);
  if (cfg.phase_sharing == PhaseSharing::kPerStep) {
    std::fill(out.begin(), out.end(), sample_phase_offset(rng, cfg.sigma_pp));
    return;
  }
  for (double& v : out) v = sample_phase_offset(rng, cfg.sigma_pp);
}

void draw_thetas(NoiseEngine& rng, const NoiseConfig& cfg, std::size_t count,
                 std::vector<double>& out) {
  out.resize(count);
  for (double& v : out) v = sample_theta(rng, cfg.sigma_bs);
}

// One disorder table over k in [-n_steps, n_steps], reused at every layer.
struct FixedTable {
  int span = 0;
  std::vector<double> before;  // 2 per position, (down, side)
  std::vector<double> after;
  std::vector<double> theta;   // 1 per position

  void gather(const std::vector<double>& table, int line, int per_node,
              std::vector<double>& out) const {
    if (table.empty()) {
      out.clear();
      return;
    }
    const int nodes = node_count(line);
    out.resize(static_cast<std::size_t>(nodes * per_node));
    for (int i = 0; i < nodes; ++i) {
      const int pos = node_at(line, i) + span;
      for (int d = 0; d < per_node; ++d) {
        out[i * per_node + d] = table[pos * per_node + d];
      }
    }
  }
};

}  // namespace

void NoiseConfig::validate() const {
  if (!std::isfinite(sigma_pp) || sigma_pp < 0.0) {
    throw std::domain_error("noise config: sigma_pp must be finite and >= 0");
  }
  if (!std::isfinite(sigma_bs) || sigma_bs < 0.0) {
    throw std::domain_error("noise config: sigma_bs must be finite and >= 0");
  }
  if (trials < 1) {
    throw std::domain_error("noise config: trials must be >= 1, got " +
                            std::to_string(trials));
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (trial_index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double phase_offset_from_draw(double l) { return 2.0 * kPi * std::abs(l); }

double theta_from_draw(double m) {
  return std::clamp(kPi / 2 * std::abs(m), 0.0, kPi);
}

double sample_phase_offset(NoiseEngine& rng, double sigma_pp) {
  return phase_offset_from_draw(1.0 + sigma_pp * standard_normal(rng));
}

double sample_theta(NoiseEngine& rng, double sigma_bs) {
  return theta_from_draw(1.0 + sigma_bs * standard_normal(rng));
}

NoiseRealization make_noise_realization(int n_steps, const NoiseConfig& cfg,
                                        NoiseEngine& rng) {
  const bool phases = cfg.sigma_pp > 0.0;
  const bool splitters = cfg.sigma_bs > 0.0;

  if (cfg.randomness == Randomness::kFresh) {
    return [&rng, &cfg, phases, splitters](int line, StepNoise& out) {
      const std::size_t nodes = static_cast<std::size_t>(node_count(line));
      if (phases) {
        draw_phases(rng, cfg, 2 * nodes, out.phase_before);
      } else {
        out.phase_before.clear();
      }
      if (splitters) {
        draw_thetas(rng, cfg, nodes, out.theta);
      } else {
        out.theta.clear();
      }
      if (phases) {
        draw_phases(rng, cfg, 2 * (nodes + 1), out.phase_after);
      } else {
        out.phase_after.clear();
      }
    };
  }

  FixedTable table;
  table.span = n_steps;
  const std::size_t positions = 2 * static_cast<std::size_t>(n_steps) + 1;
  if (phases) {
    draw_phases(rng, cfg, 2 * positions, table.before);
    draw_phases(rng, cfg, 2 * positions, table.after);
  }
  if (splitters) draw_thetas(rng, cfg, positions, table.theta);

  return [table = std::move(table)](int line, StepNoise& out) {
    table.gather(table.before, line, 2, out.phase_before);
    table.gather(table.theta, line, 1, out.theta);
    table.gather(table.after, line + 1, 2, out.phase_after);
  };
}

PhotonDistribution run_trial(int n_steps, const BeamSplitterParams& t1,
                             const NoiseConfig& cfg, int trial_index) {
  cfg.validate();
  if (trial_index < 0) {
    throw std::domain_error("run_trial: negative trial index");
  }
  if (cfg.sigma_pp == 0.0 && cfg.sigma_bs == 0.0) {
    return photon_distribution(propagate(n_steps, t1));
  }
  NoiseEngine rng(trial_seed(cfg.master_seed,
                             static_cast<std::uint64_t>(trial_index)));
  return photon_distribution(
      propagate(n_steps, t1, make_noise_realization(n_steps, cfg, rng)));
}

EnsembleResult run_ensemble(int n_steps, const BeamSplitterParams& t1,
                            const NoiseConfig& cfg, unsigned threads) {
  cfg.validate();
  t1.validate();
  if (n_steps < 1) {
    throw std::domain_error("run_ensemble: n_steps must be >= 1");
  }

  const int trials = cfg.trials;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(trials));

  std::vector<PhotonDistribution> results(trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      try {
        results[t] = run_trial(n_steps, t1, cfg, t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  // Welford in trial order: independent of the schedule above.
  const std::size_t nodes = static_cast<std::size_t>(node_count(n_steps));
  std::vector<double> mean(nodes, 0.0);
  std::vector<double> m2(nodes, 0.0);
  for (int t = 0; t < trials; ++t) {
    const std::span<const double> values = results[t].values();
    for (std::size_t i = 0; i < nodes; ++i) {
      const double delta = values[i] - mean[i];
      mean[i] += delta / (t + 1);
      m2[i] += delta * (values[i] - mean[i]);
    }
  }

  EnsembleResult result;
  result.trials_used = trials;
  for (std::size_t i = 0; i < nodes; ++i) {
    double se = 0.0;
    if (trials > 1) {
      se = std::sqrt(std::max(m2[i], 0.0) / (trials - 1) / trials);
    }
    result.stderr_of_mean.emplace(node_at(n_steps, static_cast<int>(i)), se);
  }
  result.mean = PhotonDistribution(n_steps, std::move(mean));
  return result;
}

}  // namespace qwalk
