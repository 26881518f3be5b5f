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

#include "oracles.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace oracle {

namespace {

struct Membership {
  bool interior, closure;
};

Membership classify(const voxml::Box& b, const voxml::Vec3& p) {
  bool in = true, cl = true;
  for (int i = 0; i < 3; ++i) {
    in = in && p[i] > b.min[i] && p[i] < b.max[i];
    cl = cl && p[i] >= b.min[i] && p[i] <= b.max[i];
  }
  return {in, cl};
}

}  // namespace

voxml::Rcc8 rcc8_by_sampling(const voxml::Box& a, const voxml::Box& b) {
  using voxml::Rcc8;
  std::array<std::vector<double>, 3> grid;
  for (int i = 0; i < 3; ++i) {
    double lo = std::min(a.min[i], b.min[i]), hi = std::max(a.max[i], b.max[i]);
    for (double v = lo; v <= hi + 1e-12; v += 0.5) grid[i].push_back(v);
  }
  bool meet = false, overlap = false;
  bool a_in_b = true, b_in_a = true;   // closure containment
  bool a_touches_db = false, b_touches_da = false;
  for (double x : grid[0]) {
    for (double y : grid[1]) {
      for (double z : grid[2]) {
        voxml::Vec3 p{x, y, z};
        auto ma = classify(a, p), mb = classify(b, p);
        meet |= ma.closure && mb.closure;
        overlap |= ma.interior && mb.interior;
        if (ma.closure && !mb.closure) a_in_b = false;
        if (mb.closure && !ma.closure) b_in_a = false;
        // closure point of one region on the other's boundary
        if (ma.closure && mb.closure && !mb.interior) a_touches_db = true;
        if (mb.closure && ma.closure && !ma.interior) b_touches_da = true;
      }
    }
  }
  if (!meet) return Rcc8::kDC;
  if (!overlap) return Rcc8::kEC;
  if (a_in_b && b_in_a) return Rcc8::kEQ;
  if (a_in_b) return a_touches_db ? Rcc8::kTPP : Rcc8::kNTPP;
  if (b_in_a) return b_touches_da ? Rcc8::kTPPi : Rcc8::kNTPPi;
  return Rcc8::kPO;
}

voxml::Vec3 placement_point(voxml::Vec3 c, voxml::Vec3 e, bool concave, double figure_h) {
  double surface = c.y + e.y / 2.0;
  if (concave) surface -= e.y / 2.0;
  return {c.x, surface + figure_h / 2.0, c.z};
}

}  // namespace oracle

namespace support {

std::string path(const std::string& relative) {
  return std::string(VOXML_SOURCE_DIR) + "/" + relative;
}

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult cli(const std::string& args) {
  CliResult r;
  std::string cmd = std::string(VOXML_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace support
