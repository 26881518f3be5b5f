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

// World-axis-aligned geometry: boxes, rotations, lower-dimensional regions
// and the RCC-8 classifier.

#ifndef VOXML_GEOMETRY_HPP_
#define VOXML_GEOMETRY_HPP_

#include <array>
#include <string>

#include "voxml/model.hpp"
#include "voxml/vec3.hpp"

namespace voxml {

struct Box {
  Vec3 min;
  Vec3 max;

  static Box centered(Vec3 center, Vec3 extents);
  Vec3 center() const { return 0.5 * (min + max); }
  Vec3 extents() const { return max - min; }
  Box inflated(double margin) const;
  // Closed containment of `other` (boundaries may coincide).
  bool contains(const Box& other) const;
  // Open containment: every face of `other` strictly inside.
  bool strictly_contains(const Box& other) const;
  std::string str() const;
  friend bool operator==(const Box&, const Box&) = default;
};

Box union_of(const Box& a, const Box& b);

using Mat3 = std::array<std::array<double, 3>, 3>;

// Rotation for Euler angles in degrees applied extrinsically about world Z,
// then X, then Y (R = Ry * Rx * Rz). Multiples of 90 degrees produce exact
// 0/+-1 entries.
Mat3 rotation_matrix(Vec3 euler_degrees);
Vec3 rotate(const Mat3& r, Vec3 v);

// Axis-aligned box enclosing a box of full `extents` centred at `center`
// after rotation.
Box rotated_box(Vec3 center, Vec3 extents, Vec3 euler_degrees);

// Contact tolerance eps: boundaries closer than eps touch.
Rcc8 rcc8(const Box& a, const Box& b, double eps);

// The converse relation: rcc8(b, a) == converse(rcc8(a, b)).
Rcc8 converse(Rcc8 r);

// A point, axis-aligned segment, axis-aligned rectangle patch or box. The
// dimensionality is the number of axes with non-zero extent.
struct Region {
  Vec3 min;
  Vec3 max;

  static Region from_box(const Box& b) { return {b.min, b.max}; }
  static Region point(Vec3 p) { return {p, p}; }
  int dimension() const;
  std::string carrier() const;  // "point", "segment", "patch", "box"
  Vec3 center() const { return 0.5 * (min + max); }
  // Closed containment, used to check that a function's output lies on its
  // input.
  bool within(const Region& outer) const;
  std::string str() const;
  friend bool operator==(const Region&, const Region&) = default;
};

}  // namespace voxml

#endif  // VOXML_GEOMETRY_HPP_
