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

#include "qwalk/coined_walk.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

Amplitude CoinWalkState::at(int x, Coin coin) const {
  if (!is_node(steps_, x)) return {};
  return amps_[2 * node_index(steps_, x) + static_cast<int>(coin)];
}

double CoinWalkState::norm_squared() const {
  double sum = 0.0;
  for (const Amplitude& a : amps_) sum += std::norm(a);
  return sum;
}

CoinWalkState init_coin(Amplitude a_right, Amplitude a_left) {
  const double norm = std::norm(a_right) + std::norm(a_left);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12) {
    throw std::domain_error("init_coin: coin state is not normalized (norm " +
                            std::to_string(norm) + ")");
  }
  CoinWalkState state;
  state.steps_ = 0;
  state.amps_ = {a_right, a_left};
  return state;
}

CoinWalkState step(const CoinWalkState& state) {
  const double h = std::sqrt(0.5);
  const std::size_t positions = static_cast<std::size_t>(state.steps_) + 1;
  CoinWalkState next;
  next.steps_ = state.steps_ + 1;
  next.amps_.assign(2 * (positions + 1), Amplitude{});
  for (std::size_t i = 0; i < positions; ++i) {
    const Amplitude right = state.amps_[2 * i];
    const Amplitude left = state.amps_[2 * i + 1];
    // x+1 has index i+1 on the next line, x-1 has index i.
    next.amps_[2 * (i + 1)] += h * (right + left);
    next.amps_[2 * i + 1] += h * (right - left);
  }
  return next;
}

PositionDistribution walk_distribution(int n, const CoinWalkState& initial) {
  if (n < 0) {
    throw std::domain_error("walk_distribution: negative step count " +
                            std::to_string(n));
  }
  CoinWalkState state = initial;
  for (int i = 0; i < n; ++i) state = step(state);

  std::vector<double> values(node_count(state.steps()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int x = node_at(state.steps(), static_cast<int>(i));
    values[i] = std::norm(state.at(x, Coin::kRight)) +
                std::norm(state.at(x, Coin::kLeft));
  }
  return PositionDistribution(state.steps(), std::move(values));
}

PositionDistribution classical_distribution(int n) {
  if (n < 0) {
    throw std::domain_error("classical_distribution: negative step count");
  }
  // log-space binomial keeps n in the thousands finite.
  std::vector<double> values(node_count(n));
  const double log_norm = std::lgamma(n + 1.0) - n * std::log(2.0);
  for (int r = 0; r <= n; ++r) {
    values[r] =
        std::exp(log_norm - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0));
  }
  return PositionDistribution(n, std::move(values));
}

CoinWalkState coin_for_t1(const BeamSplitterParams& params) {
  params.validate();
  const Amplitude down{std::cos(params.theta / 2)};
  const Amplitude side = std::polar(1.0, params.phi) * std::sin(params.theta / 2);
  const double h = std::sqrt(0.5);
  return init_coin(h * (down + side), h * (down - side));
}

}  // namespace qwalk
