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

#include "qwalk/distribution.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

Distribution::Distribution(int steps, std::vector<double> values)
    : steps_(steps), values_(std::move(values)) {
  if (steps_ < 0) throw std::domain_error("distribution: negative step count");
  if (values_.size() != static_cast<std::size_t>(node_count(steps_))) {
    throw std::domain_error("distribution: expected " +
                            std::to_string(node_count(steps_)) +
                            " node values, got " +
                            std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::domain_error("distribution: values must be finite and >= 0");
    }
  }
}

Distribution Distribution::point_mass(int steps, int k) {
  if (!is_node(steps, k)) {
    throw std::domain_error("point_mass: k is not a node of the line");
  }
  std::vector<double> values(node_count(steps), 0.0);
  values[node_index(steps, k)] = 1.0;
  return Distribution(steps, std::move(values));
}

double Distribution::at(int k) const {
  if (!is_node(steps_, k)) return 0.0;
  return values_[node_index(steps_, k)];
}

double Distribution::total() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum;
}

}  // namespace qwalk
