// Copyright 2026 The VoxML Authors
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

// Independent oracles and helpers shared by the unit and acceptance tests.

#ifndef VOXML_TESTS_ORACLES_HPP_
#define VOXML_TESTS_ORACLES_HPP_

#include <string>

#include "voxml/geometry.hpp"
#include "voxml/vec3.hpp"

namespace oracle {

// RCC-8 by brute force: samples every point of the 0.5-spaced lattice over
// the union of the two boxes and decides from point membership alone. Exact
// for boxes whose corners lie on the integer lattice.
voxml::Rcc8 rcc8_by_sampling(const voxml::Box& a, const voxml::Box& b);

// Resting point of a figure of height `figure_h` put "on" an unrotated
// ground box (centre c, full extents e). Concave grounds sink by half their
// height; the horizontal inset is symmetric so the centre does not move.
voxml::Vec3 placement_point(voxml::Vec3 c, voxml::Vec3 e, bool concave, double figure_h);

}  // namespace oracle

namespace support {

std::string path(const std::string& relative);  // under the source tree
std::string slurp(const std::string& file);

struct CliResult {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};
// Runs the built voxml binary with `args` (already shell-quoted).
CliResult cli(const std::string& args);

}  // namespace support

#endif  // VOXML_TESTS_ORACLES_HPP_
