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

#ifndef VOXML_VEC3_HPP_
#define VOXML_VEC3_HPP_

#include <array>
#include <cmath>
#include <string>

namespace voxml {

enum class Axis { kX = 0, kY = 1, kZ = 2 };

inline int index_of(Axis a) { return static_cast<int>(a); }
inline char axis_char(Axis a) { return "XYZ"[index_of(a)]; }

// A world axis with a direction, e.g. +Y or -Z.
struct SignedAxis {
  Axis axis = Axis::kY;
  bool positive = true;

  std::string str() const {
    return std::string(1, positive ? '+' : '-') + axis_char(axis);
  }
  friend bool operator==(const SignedAxis&, const SignedAxis&) = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](Axis a) const { return (*this)[index_of(a)]; }
  double& operator[](Axis a) { return (*this)[index_of(a)]; }

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
  friend Vec3 operator*(Vec3 v, double s) { return s * v; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  static Vec3 unit(Axis a) {
    Vec3 v;
    v[a] = 1.0;
    return v;
  }
  static Vec3 unit(SignedAxis s) {
    Vec3 v;
    v[s.axis] = s.positive ? 1.0 : -1.0;
    return v;
  }
};

// Euclidean distance; the metric used by motion guards and monotonicity
// checks.
inline double distance(Vec3 a, Vec3 b) { return (a - b).norm(); }

// Canonical real formatting shared by every serializer: at most 9
// significant digits, no negative zero.
std::string format_real(double v);

// "<x, y, z>" using format_real.
std::string format_vec(Vec3 v);

}  // namespace voxml

#endif  // VOXML_VEC3_HPP_
