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

#include "qwalk/line_state.h"

#include <stdexcept>
#include <string>

namespace qwalk {

bool is_populatable_mode(int line, int k, Direction dir) {
  if (!is_node(line, k)) return false;
  if (line == 0) return true;
  if (k == line && dir == Direction::kSide) return false;
  if (k == -line && dir == Direction::kDown) return false;
  return true;
}

LineState::LineState(int line) : line_(line) {
  if (line < 0) throw std::domain_error("line state: negative line index");
  modes_.assign(2 * static_cast<std::size_t>(qwalk::node_count(line)), Amplitude{});
}

LineState LineState::from_modes(int line, std::vector<Amplitude> modes) {
  LineState state(line);
  if (modes.size() != state.modes_.size()) {
    throw std::domain_error("line state: expected " +
                            std::to_string(state.modes_.size()) +
                            " modes, got " + std::to_string(modes.size()));
  }
  if (line > 0) {
    // side mode of k = +line and down mode of k = -line
    if (modes[modes.size() - 1] != Amplitude{} || modes[0] != Amplitude{}) {
      throw std::domain_error("line state: populated edge mode");
    }
  }
  state.modes_ = std::move(modes);
  return state;
}

Amplitude LineState::at(int k, Direction dir) const {
  if (!is_node(line_, k)) return {};
  return modes_[2 * node_index(line_, k) + static_cast<int>(dir)];
}

void LineState::set(int k, Direction dir, Amplitude amp) {
  if (!is_node(line_, k)) {
    throw std::domain_error("line state: k=" + std::to_string(k) +
                            " is not a node of line " + std::to_string(line_));
  }
  if (!is_populatable_mode(line_, k, dir) && amp != Amplitude{}) {
    throw std::domain_error("line state: edge node k=" + std::to_string(k) +
                            " cannot carry this direction");
  }
  modes_[2 * node_index(line_, k) + static_cast<int>(dir)] = amp;
}

double LineState::total_power() const {
  double sum = 0.0;
  for (const Amplitude& a : modes_) sum += std::norm(a);
  return sum;
}

}  // namespace qwalk
