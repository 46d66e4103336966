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

#ifndef QWALK_TOOLS_CLI_H_
#define QWALK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Parses a radian angle: a plain number, or `[-][a*]pi[/b]` such as
/// `pi/2`, `-pi/2`, `2*pi/3`. Throws std::invalid_argument otherwise.
double parse_angle(std::string_view text);

/// Runs the tool. `args` excludes the program name. Data goes to `out` unless
/// --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qwalk::cli

#endif  // QWALK_TOOLS_CLI_H_
