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

#ifndef QWALK_DISTRIBUTION_H_
#define QWALK_DISTRIBUTION_H_

#include <span>
#include <vector>

namespace qwalk {

/// Number of lattice sites with the parity of `steps` inside [-steps, steps].
constexpr int node_count(int steps) { return steps + 1; }

/// Dense index of node `k` on a line of depth `steps` (k = -steps maps to 0).
constexpr int node_index(int steps, int k) { return (k + steps) / 2; }

/// Node label of dense index `index` on a line of depth `steps`.
constexpr int node_at(int steps, int index) { return 2 * index - steps; }

/// True if `k` is a site reachable after `steps` steps.
constexpr bool is_node(int steps, int k) {
  return k >= -steps && k <= steps && ((k + steps) % 2 == 0);
}

/// A non-negative weight per node of a line after `steps` steps.
///
/// Only the nodes with the parity of `steps` are stored; `at()` reports 0 for
/// the parity holes and for positions outside [-steps, steps]. The same type
/// carries the photon-number distribution M(j, k) of the optical network and
/// the position distribution P_n(x) of the coined walk, so that the analysis
/// routines apply to both.
class Distribution {
 public:
  Distribution() = default;

  /// `values[i]` is the weight of node node_at(steps, i). Throws
  /// std::domain_error if steps < 0, the size does not match, or any value is
  /// negative or non-finite.
  Distribution(int steps, std::vector<double> values);

  /// Point mass of weight 1 at node `k`.
  static Distribution point_mass(int steps, int k);

  int steps() const { return steps_; }
  int min_node() const { return -steps_; }
  int max_node() const { return steps_; }

  double at(int k) const;
  std::span<const double> values() const { return values_; }

  double total() const;

 private:
  int steps_ = 0;
  std::vector<double> values_ = {1.0};
};

using PhotonDistribution = Distribution;
using PositionDistribution = Distribution;

}  // namespace qwalk

#endif  // QWALK_DISTRIBUTION_H_
