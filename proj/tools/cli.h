// Copyright 2026 The ewcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef EWCERT_TOOLS_CLI_H_
#define EWCERT_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ewcert::cli {

// Exit codes shared by all subcommands. verify additionally uses
// kUndetected when the data do not certify entanglement.
inline constexpr int kOk = 0;
inline constexpr int kEntangled = 0;
inline constexpr int kUndetected = 1;
inline constexpr int kInputError = 2;
inline constexpr int kSolverFailure = 3;

// An angle, exact when written as a rational multiple of pi ("7pi/9",
// "-pi", "0").
struct Angle {
  std::optional<std::pair<std::int64_t, std::int64_t>> pi_fraction;
  double radians = 0.0;
  std::string label;
};

Angle parse_angle(std::string_view text);
// steps >= 2 evenly spaced angles including both ends.
std::vector<Angle> angle_range(const Angle& from, const Angle& to, int steps);

std::string input_digest(std::string_view canonical_input);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ewcert::cli

#endif  // EWCERT_TOOLS_CLI_H_
