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

// Amplitude propagation through the beam-splitter / phase-shifter network.
//
// A field enters sideward at node 0 of line 0. The state-preparation splitter
// T1 sends it to line 1; every later line is reached by a T2 block at each
// occupied node:
//
//   down'(k+1) += cos(t/2) down(k) + sin(t/2) side(k)
//   side'(k-1) += sin(t/2) down(k) - cos(t/2) side(k)
//
// with t = pi/2 for the ideal 50:50 network. Because every element is linear
// and lossless, the amplitudes chi are fractions of the input amplitude and
// M(j, k) = |chi(k, down)|^2 + |chi(k, side)|^2 is independent of the input
// field state.

#ifndef QWALK_OPTICS_H_
#define QWALK_OPTICS_H_

#include <array>
#include <functional>
#include <map>
#include <numbers>
#include <span>
#include <vector>

#include "qwalk/distribution.h"
#include "qwalk/line_state.h"

namespace qwalk {

/// Angles of a splitter B(theta, phi). theta in [0, pi], phi in (-pi, pi].
struct BeamSplitterParams {
  double theta = std::numbers::pi / 2;
  double phi = -std::numbers::pi / 2;

  /// Throws std::domain_error when an angle is out of range or non-finite.
  void validate() const;
};

/// The setting that produces the symmetric walk.
inline constexpr BeamSplitterParams kSymmetricT1{std::numbers::pi / 2,
                                                  -std::numbers::pi / 2};

/// 2x2 single-photon transfer matrix acting on (down, side) amplitudes.
using ModeMatrix = std::array<std::array<Amplitude, 2>, 2>;

/// Transfer matrix of one T2 block with splitter angle `theta`.
ModeMatrix t2_matrix(double theta);

/// Where an extra phase shifter sits relative to a T2 block.
enum class PhaseLayer { kBefore = 0, kAfter = 1 };

/// Optional per-node settings for one application of T2 from line j.
///
/// Every span is either empty (ideal element) or exactly sized:
///   theta        : j + 1 entries, one splitter angle per node of line j;
///   phase_before : 2 * (j + 1) entries, interleaved (down, side) offsets
///                  applied to the modes of line j before the splitters;
///   phase_after  : 2 * (j + 2) entries, applied to the modes of line j + 1.
struct T2Settings {
  std::span<const double> theta;
  std::span<const double> phase_before;
  std::span<const double> phase_after;
};

/// Owning per-step settings, filled by a noise realization.
struct StepNoise {
  std::vector<double> theta;
  std::vector<double> phase_before;
  std::vector<double> phase_after;

  T2Settings view() const { return {theta, phase_before, phase_after}; }
};

/// Supplies the settings for the T2 application that leaves line `line`.
/// Implementations clear or resize the buffers they are handed.
using NoiseRealization = std::function<void(int line, StepNoise& out)>;

/// Sparse helpers keyed the way a user thinks about the network.
using NodeAngleMap = std::map<int, double>;
struct PhaseKey {
  int k;
  Direction dir;
  PhaseLayer layer;
  auto operator<=>(const PhaseKey&) const = default;
};
using PhaseOffsetMap = std::map<PhaseKey, double>;

/// Line 1 produced by T1 from a unit sideward input at node 0.
LineState apply_t1(const BeamSplitterParams& params);

/// One T2 layer: line j to line j + 1.
LineState apply_t2(const LineState& state, const T2Settings& settings = {});

/// Map-based overload. Nodes or modes missing from a map use the ideal
/// setting. Throws std::domain_error if a key does not name a mode of the
/// corresponding line.
LineState apply_t2(const LineState& state, const NodeAngleMap& theta_per_node,
                   const PhaseOffsetMap& phase_offsets);

/// T1 followed by n_steps - 1 T2 layers. Throws std::domain_error if
/// n_steps < 1.
LineState propagate(int n_steps, const BeamSplitterParams& t1,
                    const NoiseRealization& noise = {});

/// M(j, k) = |chi(k, down)|^2 + |chi(k, side)|^2 for every node of the line.
PhotonDistribution photon_distribution(const LineState& state);

/// Mean photon numbers N_p(j, k) = M(j, k) * mean_photons. Throws
/// std::domain_error if mean_photons is negative or non-finite.
std::map<int, double> scale_to_input(const PhotonDistribution& dist,
                                     double mean_photons);

}  // namespace qwalk

#endif  // QWALK_OPTICS_H_
