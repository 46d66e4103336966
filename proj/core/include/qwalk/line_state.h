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

#ifndef QWALK_LINE_STATE_H_
#define QWALK_LINE_STATE_H_

#include <complex>
#include <span>
#include <vector>

#include "qwalk/distribution.h"

namespace qwalk {

using Amplitude = std::complex<double>;

/// Propagation direction of a field mode incident on a node.
enum class Direction { kDown = 0, kSide = 1 };

/// Field amplitudes incident on the nodes of one dynamic line.
///
/// Each node k of line j (|k| <= j, k = j mod 2) has a downward and a
/// sideward incident mode. Amplitudes are fractions of the input field
/// amplitude, so sum |chi|^2 is the fraction of input photons that reached
/// the line. The outermost nodes only receive light from one side: at
/// k = +j only the downward mode can be populated, at k = -j only the
/// sideward one (for j >= 1).
class LineState {
 public:
  /// All-vacuum line of depth `line`. Throws std::domain_error if line < 0.
  explicit LineState(int line);

  int line() const { return line_; }
  int node_count() const { return line_ + 1; }

  /// Amplitude of mode (k, dir); zero for vacuum modes and for positions that
  /// are not nodes of this line.
  Amplitude at(int k, Direction dir) const;

  /// Sets mode (k, dir). Throws std::domain_error if k is not a node of this
  /// line or the mode is a forbidden edge mode and `amp` is non-zero.
  void set(int k, Direction dir, Amplitude amp);

  /// Builds a line from interleaved storage (see modes()). Throws
  /// std::domain_error on a size mismatch or a populated forbidden edge mode.
  static LineState from_modes(int line, std::vector<Amplitude> modes);

  /// Interleaved storage: element 2*i + dir belongs to node node_at(line, i).
  std::span<const Amplitude> modes() const { return modes_; }

  /// sum over all modes of |chi|^2.
  double total_power() const;

 private:
  int line_;
  std::vector<Amplitude> modes_;
};

/// True if (k, dir) is a mode that can carry light on line `line`.
bool is_populatable_mode(int line, int k, Direction dir);

}  // namespace qwalk

#endif  // QWALK_LINE_STATE_H_
