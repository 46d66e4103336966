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

// Monte Carlo ensembles over two unitary noise channels of the network:
//
//  * random phase shifters just before and after every T2 block, each
//    shifting its mode by 2*pi*|l| with l ~ Normal(1, sigma_pp);
//  * random splitters, theta = (pi/2)*|m| with m ~ Normal(1, sigma_bs),
//    clamped to [0, pi].
//
// Every trial owns an engine seeded from (master_seed, trial_index), so a
// trial's result does not depend on which thread ran it or in what order.
//
// Draw order inside a trial (Fresh randomness), for each T2 layer j -> j+1:
//   1. before-layer offsets for the nodes of line j, ascending k, down then
//      side (2 draws per node, or one draw per layer with PerStep sharing);
//   2. one splitter angle per node of line j, ascending k;
//   3. after-layer offsets for the nodes of line j+1, same order as 1.
// Channels with sigma = 0 are not sampled at all. With Fixed randomness one
// table over k in [-N, N] is drawn at the start of the trial in the order
// before-layer, after-layer, angles, and reused at every layer.

#ifndef QWALK_DECOHERENCE_H_
#define QWALK_DECOHERENCE_H_

#include <cstdint>
#include <map>
#include <random>

#include "qwalk/distribution.h"
#include "qwalk/optics.h"

namespace qwalk {

enum class Randomness { kFresh, kFixed };
enum class PhaseSharing { kPerMode, kPerStep };

struct NoiseConfig {
  double sigma_pp = 0.0;
  double sigma_bs = 0.0;
  int trials = 50;
  std::uint64_t master_seed = 0;
  Randomness randomness = Randomness::kFresh;
  PhaseSharing phase_sharing = PhaseSharing::kPerMode;

  /// Throws std::domain_error on negative or non-finite sigmas or trials < 1.
  void validate() const;
};

struct EnsembleResult {
  PhotonDistribution mean;
  std::map<int, double> stderr_of_mean;
  int trials_used = 0;
};

using NoiseEngine = std::mt19937_64;

/// Seed of trial `trial_index`: the splitmix64 finalizer applied to
/// master_seed + 0x9E3779B97F4A7C15 * (trial_index + 1).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// 2*pi*|l|. Not reduced modulo 2*pi.
double phase_offset_from_draw(double l);

/// (pi/2)*|m| clamped to [0, pi].
double theta_from_draw(double m);

/// Draws l ~ Normal(1, sigma_pp) and returns phase_offset_from_draw(l).
double sample_phase_offset(NoiseEngine& rng, double sigma_pp);

/// Draws m ~ Normal(1, sigma_bs) and returns theta_from_draw(m).
double sample_theta(NoiseEngine& rng, double sigma_bs);

/// Noise realization for one trial, consuming `rng` in the canonical order.
/// The returned callable keeps references to `rng` and `cfg`.
NoiseRealization make_noise_realization(int n_steps, const NoiseConfig& cfg,
                                        NoiseEngine& rng);

/// Photon distribution of one noisy realization.
PhotonDistribution run_trial(int n_steps, const BeamSplitterParams& t1,
                             const NoiseConfig& cfg, int trial_index);

/// Mean and standard error over cfg.trials realizations. `threads` = 0 picks
/// the hardware concurrency; the result is identical for every value.
/// Throws std::domain_error for an invalid config or n_steps < 1.
EnsembleResult run_ensemble(int n_steps, const BeamSplitterParams& t1,
                            const NoiseConfig& cfg, unsigned threads = 0);

}  // namespace qwalk

#endif  // QWALK_DECOHERENCE_H_
