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

#include "qwalk/analysis.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {
namespace {

constexpr double kNormTolerance = 1e-6;

double checked_total(const Distribution& dist, const char* who) {
  const double total = dist.total();
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw std::domain_error(std::string(who) +
                            ": distribution is not normalized (total " +
                            std::to_string(total) + ")");
  }
  return total;
}

}  // namespace

Moments moments(const Distribution& dist) {
  const double total = checked_total(dist, "moments");
  const int n = dist.steps();
  const std::span<const double> values = dist.values();

  double mean = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    mean += node_at(n, static_cast<int>(i)) * values[i];
  }
  mean /= total;
  double variance = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = node_at(n, static_cast<int>(i)) - mean;
    variance += d * d * values[i];
  }
  variance /= total;
  return {mean, variance, std::sqrt(variance)};
}

double tv_distance(const Distribution& p, const Distribution& q) {
  checked_total(p, "tv_distance");
  checked_total(q, "tv_distance");
  if (p.steps() != q.steps()) {
    throw std::domain_error("tv_distance: supports differ (" +
                            std::to_string(p.steps()) + " vs " +
                            std::to_string(q.steps()) + " steps)");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.values().size(); ++i) {
    sum += std::abs(p.values()[i] - q.values()[i]);
  }
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

double flatness(const Distribution& dist, int k_lo, int k_hi) {
  const int lo = std::max(k_lo, dist.min_node());
  const int hi = std::min(k_hi, dist.max_node());
  double peak = 0.0;
  double sum = 0.0;
  int count = 0;
  for (int k = lo; k <= hi; ++k) {
    if (!is_node(dist.steps(), k)) continue;
    const double v = dist.at(k);
    peak = std::max(peak, v);
    sum += v;
    ++count;
  }
  if (count == 0) {
    throw std::domain_error("flatness: region [" + std::to_string(k_lo) +
                            ", " + std::to_string(k_hi) + "] holds no node");
  }
  if (sum <= 0.0) {
    throw std::domain_error("flatness: region carries no weight");
  }
  return peak / (sum / count);
}

Region default_flatness_region(int n_steps) {
  const int half = static_cast<int>(std::ceil(n_steps / std::numbers::sqrt2));
  return {-half, half};
}

double poisson_photon_probability(double mean_photons, int n) {
  if (!std::isfinite(mean_photons) || mean_photons < 0.0 || n < 0) {
    throw std::domain_error("poisson_photon_probability: need mean >= 0, n >= 0");
  }
  if (mean_photons == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(n * std::log(mean_photons) - mean_photons -
                  std::lgamma(n + 1.0));
}

std::string_view layout_name(Layout layout) {
  switch (layout) {
    case Layout::kDynamicLine: return "line";
    case Layout::kAomLoop: return "aom";
  }
  return "unknown";
}

ResourceCount resource_count(int n_steps, Layout layout) {
  if (n_steps < 1) {
    throw std::domain_error("resource_count: n_steps must be >= 1");
  }
  const std::int64_t n = n_steps;
  ResourceCount rc;
  rc.layout = layout;
  rc.n_steps = n_steps;
  switch (layout) {
    case Layout::kDynamicLine:
      // (n-1)(n+2) is always even.
      rc.beam_splitters = 1 + (n - 1) * (n + 2) / 2;
      rc.phase_shifters = (n - 1) * (n + 2);
      rc.aoms = 0;
      rc.detectors = n + 1;
      break;
    case Layout::kAomLoop:
      rc.beam_splitters = n;
      rc.phase_shifters = 2 * n;
      rc.aoms = 2 * n;
      rc.detectors = 2 * n + 1;
      break;
  }
  return rc;
}

}  // namespace qwalk
