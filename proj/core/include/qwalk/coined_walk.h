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

// Hadamard-coined quantum walk on a line and the classical binomial walk.
// These are reference models for the optical network in optics.h.

#ifndef QWALK_COINED_WALK_H_
#define QWALK_COINED_WALK_H_

#include <vector>

#include "qwalk/distribution.h"
#include "qwalk/line_state.h"
#include "qwalk/optics.h"

namespace qwalk {

enum class Coin { kRight = 0, kLeft = 1 };

/// Walker amplitudes over (position, coin) after `steps` steps.
class CoinWalkState {
 public:
  int steps() const { return steps_; }

  /// Zero for positions that cannot be reached after steps().
  Amplitude at(int x, Coin coin) const;

  double norm_squared() const;

 private:
  friend CoinWalkState init_coin(Amplitude, Amplitude);
  friend CoinWalkState step(const CoinWalkState&);

  int steps_ = 0;
  // Element 2*i + coin belongs to position node_at(steps_, i).
  std::vector<Amplitude> amps_;
};

/// Walker at x = 0 with coin a_right|R> + a_left|L>. Throws std::domain_error
/// unless |a_right|^2 + |a_left|^2 = 1 within 1e-12.
CoinWalkState init_coin(Amplitude a_right, Amplitude a_left);

/// One Hadamard step:
///   |x,R> -> (|x+1,R> + |x-1,L>)/sqrt2,  |x,L> -> (|x+1,R> - |x-1,L>)/sqrt2.
CoinWalkState step(const CoinWalkState& state);

/// Marginal position distribution after n further steps from `initial`.
/// Throws std::domain_error if n < 0.
PositionDistribution walk_distribution(int n, const CoinWalkState& initial);

/// Binomial distribution of an unbiased classical walk after n steps.
PositionDistribution classical_distribution(int n);

/// Initial coin whose walk reproduces the optical network fed through T1.
///
/// T1 already routes the down output to k = +1 and the side output to
/// k = -1, i.e. it performs the first conditional shift on the coin
/// (cos(theta/2), e^{i phi} sin(theta/2)). Line N of the network therefore
/// equals N Hadamard steps started from the Hadamard image of that pair.
/// For the symmetric setting this is (|R> + i|L>)/sqrt2 up to a global phase.
CoinWalkState coin_for_t1(const BeamSplitterParams& params);

}  // namespace qwalk

#endif  // QWALK_COINED_WALK_H_
