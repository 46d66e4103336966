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

#include "qwalk/optics.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {
namespace {

constexpr double kPi = std::numbers::pi;

void check_theta(double theta) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
    throw std::domain_error("beam splitter: theta must lie in [0, pi], got " +
                            std::to_string(theta));
  }
}

void check_size(std::span<const double> values, std::size_t expected,
                const char* what) {
  if (!values.empty() && values.size() != expected) {
    throw std::invalid_argument(std::string("apply_t2: ") + what +
                                " has " + std::to_string(values.size()) +
                                " entries, expected " +
                                std::to_string(expected));
  }
}

Amplitude phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

void BeamSplitterParams::validate() const {
  check_theta(theta);
  if (!std::isfinite(phi) || phi <= -kPi || phi > kPi) {
    throw std::domain_error("beam splitter: phi must lie in (-pi, pi], got " +
                            std::to_string(phi));
  }
}

ModeMatrix t2_matrix(double theta) {
  check_theta(theta);
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {{{Amplitude{c}, Amplitude{s}}, {Amplitude{s}, Amplitude{-c}}}};
}

LineState apply_t1(const BeamSplitterParams& params) {
  params.validate();
  LineState out(1);
  out.set(+1, Direction::kDown, Amplitude{std::cos(params.theta / 2)});
  out.set(-1, Direction::kSide,
          phase(params.phi) * std::sin(params.theta / 2));
  return out;
}

LineState apply_t2(const LineState& state, const T2Settings& settings) {
  const int line = state.line();
  const std::size_t nodes = static_cast<std::size_t>(state.node_count());
  check_size(settings.theta, nodes, "theta");
  check_size(settings.phase_before, 2 * nodes, "phase_before");
  check_size(settings.phase_after, 2 * (nodes + 1), "phase_after");

  const std::span<const Amplitude> in = state.modes();
  std::vector<Amplitude> out(2 * (nodes + 1));

  const double ideal = std::sqrt(0.5);
  for (std::size_t i = 0; i < nodes; ++i) {
    Amplitude down = in[2 * i];
    Amplitude side = in[2 * i + 1];
    if (!settings.phase_before.empty()) {
      down *= phase(settings.phase_before[2 * i]);
      side *= phase(settings.phase_before[2 * i + 1]);
    }
    double c = ideal;
    double s = ideal;
    if (!settings.theta.empty()) {
      check_theta(settings.theta[i]);
      c = std::cos(settings.theta[i] / 2);
      s = std::sin(settings.theta[i] / 2);
    }
    // node k = node_at(line, i): down exits to k+1 (index i+1 on line+1),
    // side exits to k-1 (index i on line+1).
    out[2 * (i + 1)] += c * down + s * side;
    out[2 * i + 1] += s * down - c * side;
  }
  if (!settings.phase_after.empty()) {
    for (std::size_t m = 0; m < out.size(); ++m) {
      out[m] *= phase(settings.phase_after[m]);
    }
  }
  return LineState::from_modes(line + 1, std::move(out));
}

LineState apply_t2(const LineState& state, const NodeAngleMap& theta_per_node,
                   const PhaseOffsetMap& phase_offsets) {
  const int line = state.line();
  const std::size_t nodes = static_cast<std::size_t>(state.node_count());

  std::vector<double> theta;
  if (!theta_per_node.empty()) {
    theta.assign(nodes, kPi / 2);
    for (const auto& [k, angle] : theta_per_node) {
      if (!is_node(line, k)) {
        throw std::domain_error("apply_t2: theta given for k=" +
                                std::to_string(k) + ", not a node of line " +
                                std::to_string(line));
      }
      theta[node_index(line, k)] = angle;
    }
  }

  std::vector<double> before;
  std::vector<double> after;
  for (const auto& [key, angle] : phase_offsets) {
    const bool is_before = key.layer == PhaseLayer::kBefore;
    const int target_line = is_before ? line : line + 1;
    if (!is_node(target_line, key.k)) {
      throw std::domain_error("apply_t2: phase offset for k=" +
                              std::to_string(key.k) + ", not a node of line " +
                              std::to_string(target_line));
    }
    std::vector<double>& layer = is_before ? before : after;
    if (layer.empty()) layer.assign(2 * node_count(target_line), 0.0);
    layer[2 * node_index(target_line, key.k) + static_cast<int>(key.dir)] =
        angle;
  }
  return apply_t2(state, T2Settings{theta, before, after});
}

LineState propagate(int n_steps, const BeamSplitterParams& t1,
                    const NoiseRealization& noise) {
  if (n_steps < 1) {
    throw std::domain_error("propagate: n_steps must be >= 1, got " +
                            std::to_string(n_steps));
  }
  LineState state = apply_t1(t1);
  StepNoise buffers;
  for (int line = 1; line < n_steps; ++line) {
    if (noise) {
      noise(line, buffers);
      state = apply_t2(state, buffers.view());
    } else {
      state = apply_t2(state);
    }
  }
  return state;
}

PhotonDistribution photon_distribution(const LineState& state) {
  const std::span<const Amplitude> modes = state.modes();
  std::vector<double> values(state.node_count());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::norm(modes[2 * i]) + std::norm(modes[2 * i + 1]);
  }
  return PhotonDistribution(state.line(), std::move(values));
}

std::map<int, double> scale_to_input(const PhotonDistribution& dist,
                                     double mean_photons) {
  if (!std::isfinite(mean_photons) || mean_photons < 0.0) {
    throw std::domain_error("scale_to_input: mean photon number must be >= 0");
  }
  std::map<int, double> out;
  for (int i = 0; i < node_count(dist.steps()); ++i) {
    out.emplace(node_at(dist.steps(), i), dist.values()[i] * mean_photons);
  }
  return out;
}

}  // namespace qwalk
