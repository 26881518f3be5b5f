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

#include "voxml/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace voxml {

Box Box::centered(Vec3 center, Vec3 extents) {
  Vec3 half = 0.5 * extents;
  return {center - half, center + half};
}

Box Box::inflated(double margin) const {
  Vec3 m{margin, margin, margin};
  return {min - m, max + m};
}

bool Box::contains(const Box& o) const {
  for (int i = 0; i < 3; ++i) {
    if (o.min[i] < min[i] || o.max[i] > max[i]) return false;
  }
  return true;
}

bool Box::strictly_contains(const Box& o) const {
  for (int i = 0; i < 3; ++i) {
    if (!(o.min[i] > min[i] && o.max[i] < max[i])) return false;
  }
  return true;
}

std::string Box::str() const {
  return "[" + format_vec(min) + ", " + format_vec(max) + "]";
}

Box union_of(const Box& a, const Box& b) {
  Box u;
  for (int i = 0; i < 3; ++i) {
    u.min[i] = std::min(a.min[i], b.min[i]);
    u.max[i] = std::max(a.max[i], b.max[i]);
  }
  return u;
}

namespace {

// sin/cos in degrees, exact at multiples of 90.
void sincos_deg(double deg, double& s, double& c) {
  double q = deg / 90.0;
  if (q == std::floor(q) && std::abs(q) < 1e15) {
    long long k = static_cast<long long>(q) % 4;
    if (k < 0) k += 4;
    static constexpr double kSin[4] = {0.0, 1.0, 0.0, -1.0};
    static constexpr double kCos[4] = {1.0, 0.0, -1.0, 0.0};
    s = kSin[k];
    c = kCos[k];
    return;
  }
  double rad = deg * std::numbers::pi / 180.0;
  s = std::sin(rad);
  c = std::cos(rad);
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      r[i][j] = acc;
    }
  }
  return r;
}

}  // namespace

Mat3 rotation_matrix(Vec3 euler) {
  double sx, cx, sy, cy, sz, cz;
  sincos_deg(euler.x, sx, cx);
  sincos_deg(euler.y, sy, cy);
  sincos_deg(euler.z, sz, cz);
  const Mat3 rx{{{1, 0, 0}, {0, cx, -sx}, {0, sx, cx}}};
  const Mat3 ry{{{cy, 0, sy}, {0, 1, 0}, {-sy, 0, cy}}};
  const Mat3 rz{{{cz, -sz, 0}, {sz, cz, 0}, {0, 0, 1}}};
  return multiply(ry, multiply(rx, rz));
}

Vec3 rotate(const Mat3& r, Vec3 v) {
  return {r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
          r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
          r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z};
}

Box rotated_box(Vec3 center, Vec3 extents, Vec3 euler_degrees) {
  if (euler_degrees == Vec3{}) return Box::centered(center, extents);
  const Mat3 r = rotation_matrix(euler_degrees);
  Vec3 half = 0.5 * extents;
  Box b{center, center};
  bool first = true;
  for (int corner = 0; corner < 8; ++corner) {
    Vec3 local{(corner & 1) ? half.x : -half.x, (corner & 2) ? half.y : -half.y,
               (corner & 4) ? half.z : -half.z};
    Vec3 p = center + rotate(r, local);
    if (first) {
      b = {p, p};
      first = false;
    } else {
      b = union_of(b, Box{p, p});
    }
  }
  return b;
}

Rcc8 rcc8(const Box& a, const Box& b, double eps) {
  bool interiors_overlap = true;
  for (int i = 0; i < 3; ++i) {
    double overlap = std::min(a.max[i], b.max[i]) - std::max(a.min[i], b.min[i]);
    if (overlap < -eps) return Rcc8::kDC;
    if (overlap <= eps) interiors_overlap = false;
  }
  if (!interiors_overlap) return Rcc8::kEC;

  auto near = [eps](double u, double v) { return std::abs(u - v) <= eps; };
  bool a_in_b = true;
  bool b_in_a = true;
  bool shared_face = false;
  bool all_faces = true;
  for (int i = 0; i < 3; ++i) {
    a_in_b = a_in_b && a.min[i] >= b.min[i] - eps && a.max[i] <= b.max[i] + eps;
    b_in_a = b_in_a && b.min[i] >= a.min[i] - eps && b.max[i] <= a.max[i] + eps;
    bool lo = near(a.min[i], b.min[i]);
    bool hi = near(a.max[i], b.max[i]);
    shared_face = shared_face || lo || hi;
    all_faces = all_faces && lo && hi;
  }
  if (all_faces) return Rcc8::kEQ;
  if (a_in_b) return shared_face ? Rcc8::kTPP : Rcc8::kNTPP;
  if (b_in_a) return shared_face ? Rcc8::kTPPi : Rcc8::kNTPPi;
  return Rcc8::kPO;
}

Rcc8 converse(Rcc8 r) {
  switch (r) {
    case Rcc8::kTPP:
      return Rcc8::kTPPi;
    case Rcc8::kTPPi:
      return Rcc8::kTPP;
    case Rcc8::kNTPP:
      return Rcc8::kNTPPi;
    case Rcc8::kNTPPi:
      return Rcc8::kNTPP;
    default:
      return r;
  }
}

int Region::dimension() const {
  int d = 0;
  for (int i = 0; i < 3; ++i) d += (max[i] - min[i]) > 0.0 ? 1 : 0;
  return d;
}

std::string Region::carrier() const {
  static const char* kNames[4] = {"point", "segment", "patch", "box"};
  return kNames[dimension()];
}

bool Region::within(const Region& outer) const {
  for (int i = 0; i < 3; ++i) {
    if (min[i] < outer.min[i] || max[i] > outer.max[i]) return false;
  }
  return true;
}

std::string Region::str() const {
  return carrier() + "[" + format_vec(min) + ", " + format_vec(max) + "]";
}

}  // namespace voxml
