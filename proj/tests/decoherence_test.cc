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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gtest/gtest.h"
#include "qwalk/optics.h"

namespace qwalk {
namespace {

using std::numbers::pi;

TEST(TrialSeed, MatchesSplitMix64Sequence) {
  // First two outputs of splitmix64 seeded with 0.
  EXPECT_EQ(trial_seed(0, 0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(trial_seed(0, 1), 0x6E789E6AA1B965F4ULL);
  EXPECT_NE(trial_seed(7, 0), trial_seed(8, 0));
}

TEST(NoiseDraws, ArithmeticOfTheMaps) {
  EXPECT_DOUBLE_EQ(phase_offset_from_draw(1.5), 3 * pi);
  EXPECT_DOUBLE_EQ(phase_offset_from_draw(-0.5), pi);
  EXPECT_DOUBLE_EQ(phase_offset_from_draw(1.0), 2 * pi);
  EXPECT_NEAR(theta_from_draw(1.1), 0.55 * pi, 1e-15);
  EXPECT_DOUBLE_EQ(theta_from_draw(2.2), pi);
  EXPECT_DOUBLE_EQ(theta_from_draw(-1.0), pi / 2);
}

TEST(NoiseDraws, ZeroSigmaIsExact) {
  NoiseEngine rng(1);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(sample_phase_offset(rng, 0.0), 2 * pi);
    EXPECT_EQ(sample_theta(rng, 0.0), pi / 2);
  }
  const Amplitude unit = std::polar(1.0, 2 * pi);
  EXPECT_NEAR(unit.real(), 1.0, 1e-15);
  EXPECT_NEAR(unit.imag(), 0.0, 1e-15);
}

TEST(NoiseDraws, GaussianCentredAtOne) {
  NoiseEngine rng(2024);
  constexpr int kDraws = 200000;
  constexpr double kSigma = 0.1;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double l = sample_phase_offset(rng, kSigma) / (2 * pi);
    sum += l;
    sum_sq += l * l;
  }
  const double mean = sum / kDraws;
  const double sd = std::sqrt(sum_sq / kDraws - mean * mean);
  // |l| = l except with probability ~1e-23 at sigma = 0.1.
  EXPECT_NEAR(mean, 1.0, 5 * kSigma / std::sqrt(kDraws));
  EXPECT_NEAR(sd, kSigma, 0.01 * kSigma);
}

TEST(NoiseConfig, Validation) {
  NoiseConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), std::domain_error);
  cfg = NoiseConfig{};
  cfg.sigma_pp = -0.1;
  EXPECT_THROW(cfg.validate(), std::domain_error);
  cfg = NoiseConfig{};
  cfg.sigma_bs = std::nan("");
  EXPECT_THROW(cfg.validate(), std::domain_error);
}

TEST(NoiseRealization, FreshDrawOrder) {
  NoiseConfig cfg;
  cfg.sigma_pp = 0.3;
  cfg.sigma_bs = 0.2;
  NoiseEngine rng(55);
  NoiseRealization noise = make_noise_realization(10, cfg, rng);
  StepNoise step;
  noise(1, step);

  NoiseEngine replay(55);
  ASSERT_EQ(step.phase_before.size(), 4u);
  ASSERT_EQ(step.theta.size(), 2u);
  ASSERT_EQ(step.phase_after.size(), 6u);
  for (double v : step.phase_before) {
    EXPECT_EQ(v, sample_phase_offset(replay, cfg.sigma_pp));
  }
  for (double v : step.theta) EXPECT_EQ(v, sample_theta(replay, cfg.sigma_bs));
  for (double v : step.phase_after) {
    EXPECT_EQ(v, sample_phase_offset(replay, cfg.sigma_pp));
  }
}

TEST(NoiseRealization, PerStepSharesOneDrawPerLayer) {
  NoiseConfig cfg;
  cfg.sigma_pp = 0.3;
  cfg.phase_sharing = PhaseSharing::kPerStep;
  NoiseEngine rng(9);
  NoiseRealization noise = make_noise_realization(10, cfg, rng);
  StepNoise step;
  noise(4, step);
  ASSERT_EQ(step.phase_before.size(), 10u);
  for (double v : step.phase_before) EXPECT_EQ(v, step.phase_before[0]);
  for (double v : step.phase_after) EXPECT_EQ(v, step.phase_after[0]);
  EXPECT_NE(step.phase_before[0], step.phase_after[0]);
  EXPECT_TRUE(step.theta.empty());
}

TEST(NoiseRealization, FixedTableIsReusedAcrossLines) {
  NoiseConfig cfg;
  cfg.sigma_pp = 0.25;
  cfg.sigma_bs = 0.1;
  cfg.randomness = Randomness::kFixed;
  NoiseEngine rng(4);
  NoiseRealization noise = make_noise_realization(12, cfg, rng);
  StepNoise at3;
  StepNoise at5;
  StepNoise at5_again;
  noise(3, at3);
  noise(5, at5);
  noise(5, at5_again);
  EXPECT_EQ(at5.phase_before, at5_again.phase_before);
  EXPECT_EQ(at5.phase_after, at5_again.phase_after);
  EXPECT_EQ(at5.theta, at5_again.theta);
  // node k = 1 is index 2 on line 3 and index 3 on line 5.
  EXPECT_EQ(at3.phase_before[2 * 2], at5.phase_before[2 * 3]);
  EXPECT_EQ(at3.phase_before[2 * 2 + 1], at5.phase_before[2 * 3 + 1]);
  EXPECT_EQ(at3.theta[2], at5.theta[3]);
  // after layer of line 3 -> 4 at k = 0 (index 2), of 5 -> 6 at k = 0 (index 3).
  EXPECT_EQ(at3.phase_after[2 * 2], at5.phase_after[2 * 3]);
}

TEST(RunTrial, NoiseOffMatchesIdealWalk) {
  NoiseConfig cfg;
  cfg.master_seed = 123;
  for (int n : {1, 4, 37, 200}) {
    const PhotonDistribution ideal = photon_distribution(propagate(n, kSymmetricT1));
    const PhotonDistribution trial = run_trial(n, kSymmetricT1, cfg, 3);
    ASSERT_EQ(ideal.values().size(), trial.values().size());
    for (std::size_t i = 0; i < ideal.values().size(); ++i) {
      EXPECT_EQ(ideal.values()[i], trial.values()[i]);
    }
  }
}

TEST(RunTrial, DeterministicPerSeedAndIndex) {
  NoiseConfig cfg;
  cfg.sigma_pp = 0.25;
  cfg.sigma_bs = 0.05;
  cfg.master_seed = 77;
  const PhotonDistribution a = run_trial(60, kSymmetricT1, cfg, 5);
  const PhotonDistribution b = run_trial(60, kSymmetricT1, cfg, 5);
  const PhotonDistribution c = run_trial(60, kSymmetricT1, cfg, 6);
  bool differs = false;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    EXPECT_EQ(a.values()[i], b.values()[i]);
    differs = differs || a.values()[i] != c.values()[i];
  }
  EXPECT_TRUE(differs);
}

TEST(RunTrial, NoisyTrialsStayNormalized) {
  NoiseConfig cfg;
  cfg.sigma_pp = 0.25;
  cfg.master_seed = 1;
  EXPECT_NEAR(run_trial(200, kSymmetricT1, cfg, 0).total(), 1.0, 1e-9);
  cfg.sigma_bs = 0.07;
  cfg.randomness = Randomness::kFixed;
  EXPECT_NEAR(run_trial(200, kSymmetricT1, cfg, 0).total(), 1.0, 1e-9);
}

TEST(RunTrial, SharedPhasesAreAGlobalPhase) {
  // One offset per layer multiplies every mode alike, so the ideal pattern
  // survives at any sigma_pp.
  NoiseConfig cfg;
  cfg.sigma_pp = 0.5;
  cfg.phase_sharing = PhaseSharing::kPerStep;
  const PhotonDistribution ideal = photon_distribution(propagate(80, kSymmetricT1));
  const PhotonDistribution trial = run_trial(80, kSymmetricT1, cfg, 0);
  for (int k = -80; k <= 80; k += 2) EXPECT_NEAR(trial.at(k), ideal.at(k), 1e-10);
}

TEST(RunEnsemble, RejectsBadInput) {
  NoiseConfig cfg;
  cfg.trials = 0;
  EXPECT_THROW(run_ensemble(10, kSymmetricT1, cfg), std::domain_error);
  cfg.trials = 2;
  EXPECT_THROW(run_ensemble(0, kSymmetricT1, cfg), std::domain_error);
}

TEST(RunEnsemble, NoiseOffHasZeroSpread) {
  NoiseConfig cfg;
  cfg.trials = 7;
  const EnsembleResult r = run_ensemble(30, kSymmetricT1, cfg, 3);
  const PhotonDistribution ideal = photon_distribution(propagate(30, kSymmetricT1));
  EXPECT_EQ(r.trials_used, 7);
  for (int k = -30; k <= 30; k += 2) {
    EXPECT_EQ(r.mean.at(k), ideal.at(k));
    EXPECT_EQ(r.stderr_of_mean.at(k), 0.0);
  }
}

TEST(RunEnsemble, IndependentOfThreadCount) {
  NoiseConfig cfg;
  cfg.sigma_pp = 0.13;
  cfg.sigma_bs = 0.03;
  cfg.trials = 12;
  cfg.master_seed = 2;
  const EnsembleResult one = run_ensemble(80, kSymmetricT1, cfg, 1);
  const EnsembleResult many = run_ensemble(80, kSymmetricT1, cfg, 5);
  for (int k = -80; k <= 80; k += 2) {
    EXPECT_EQ(one.mean.at(k), many.mean.at(k));
    EXPECT_EQ(one.stderr_of_mean.at(k), many.stderr_of_mean.at(k));
  }
}

TEST(RunEnsemble, MeanIsTrialAverage) {
  NoiseConfig cfg;
  cfg.sigma_pp = 0.2;
  cfg.trials = 4;
  cfg.master_seed = 31;
  const EnsembleResult r = run_ensemble(20, kSymmetricT1, cfg);
  EXPECT_NEAR(r.mean.total(), 1.0, 1e-9);
  for (int k = -20; k <= 20; k += 2) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int t = 0; t < 4; ++t) {
      const double v = run_trial(20, kSymmetricT1, cfg, t).at(k);
      sum += v;
      sum_sq += v * v;
    }
    const double mean = sum / 4;
    const double var = (sum_sq - 4 * mean * mean) / 3;
    EXPECT_NEAR(r.mean.at(k), mean, 1e-14);
    EXPECT_NEAR(r.stderr_of_mean.at(k), std::sqrt(std::max(var, 0.0) / 4),
                1e-9);
    EXPECT_GE(r.stderr_of_mean.at(k), 0.0);
  }
}

}  // namespace
}  // namespace qwalk
