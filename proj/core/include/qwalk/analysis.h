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

#ifndef QWALK_ANALYSIS_H_
#define QWALK_ANALYSIS_H_

#include <cstdint>
#include <string_view>

#include "qwalk/distribution.h"

namespace qwalk {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double std = 0.0;
};

/// Mean and variance over the node index. A total within 1e-6 of 1 is
/// renormalized; anything else throws std::domain_error.
Moments moments(const Distribution& dist);

/// Half the L1 distance. Both inputs must be normalized within 1e-6 and
/// cover the same line; otherwise std::domain_error.
double tv_distance(const Distribution& p, const Distribution& q);

/// max / mean of the values at the nodes of `dist` inside [k_lo, k_hi].
/// 1 means perfectly flat. Throws std::domain_error when the region holds no
/// node or only zero weight.
double flatness(const Distribution& dist, int k_lo, int k_hi);

/// Comparison window [-ceil(n/sqrt2), +ceil(n/sqrt2)] used for flatness.
struct Region {
  int lo;
  int hi;
};
Region default_flatness_region(int n_steps);

/// Poisson probability e^{-mu} mu^n / n!.
double poisson_photon_probability(double mean_photons, int n);

enum class Layout { kDynamicLine, kAomLoop };

std::string_view layout_name(Layout layout);

struct ResourceCount {
  Layout layout = Layout::kDynamicLine;
  int n_steps = 0;
  std::int64_t beam_splitters = 0;
  std::int64_t phase_shifters = 0;
  std::int64_t aoms = 0;
  std::int64_t detectors = 0;
};

/// Element tally for an n-step walk.
///
/// DynamicLine: T1 plus a T2 block (one splitter, two shifters) at every
/// occupied node of lines 1..n-1, and a detector per node of line n:
///   splitters = 1 + (n-1)(n+2)/2, shifters = (n-1)(n+2), detectors = n+1.
/// AomLoop: splitters = n, shifters = 2n, AOMs = 2n, detectors = 2n+1.
/// Throws std::domain_error if n_steps < 1.
ResourceCount resource_count(int n_steps, Layout layout);

}  // namespace qwalk

#endif  // QWALK_ANALYSIS_H_
