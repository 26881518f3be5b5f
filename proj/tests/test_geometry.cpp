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

#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "voxml/geometry.hpp"

using namespace voxml;

namespace {

std::vector<Box> integer_boxes() {
  std::vector<std::pair<int, int>> spans;
  for (int lo = 0; lo <= 3; ++lo) {
    for (int hi = lo + 1; hi <= 3; ++hi) spans.push_back({lo, hi});
  }
  std::vector<Box> out;
  for (auto [x0, x1] : spans) {
    for (auto [y0, y1] : spans) {
      for (auto [z0, z1] : spans) out.push_back({{double(x0), double(y0), double(z0)},
                                                 {double(x1), double(y1), double(z1)}});
    }
  }
  return out;
}

Box random_box(std::mt19937& rng) {
  std::uniform_real_distribution<double> c(-2.0, 2.0), e(0.1, 2.0);
  return Box::centered({c(rng), c(rng), c(rng)}, {e(rng), e(rng), e(rng)});
}

}  // namespace

TEST_CASE("rotation convention: Z then X then Y, exact at right angles") {
  Mat3 r = rotation_matrix({0, 0, 90});
  Vec3 x = rotate(r, {1, 0, 0});
  CHECK(x == Vec3{0, 1, 0});
  // X by 90 sends +Y to +Z
  CHECK(rotate(rotation_matrix({90, 0, 0}), {0, 1, 0}) == Vec3{0, 0, 1});
  // Y by 90 sends +Z to +X
  CHECK(rotate(rotation_matrix({0, 90, 0}), {0, 0, 1}) == Vec3{1, 0, 0});
  // extrinsic order: Z first, then X. +X -> +Y (Z90) -> +Z (X90)
  CHECK(rotate(rotation_matrix({90, 0, 90}), {1, 0, 0}) == Vec3{0, 0, 1});
  CHECK(rotate(rotation_matrix({180, 0, 0}), {0, 1, 0}) == Vec3{0, -1, 0});
}

TEST_CASE("rotated boxes") {
  Box b = rotated_box({0, 0, 0}, {4, 3, 0.2}, {0, 90, 0});
  CHECK(b.extents().x == doctest::Approx(0.2));
  CHECK(b.extents().z == doctest::Approx(4.0));
  Box same = rotated_box({1, 2, 3}, {1, 2, 3}, {});
  CHECK(same == Box::centered({1, 2, 3}, {1, 2, 3}));
  Box diag = rotated_box({0, 0, 0}, {1, 1, 1}, {0, 45, 0});
  CHECK(diag.extents().x == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("rcc8 agrees with point sampling on every integer box pair") {
  auto boxes = integer_boxes();
  REQUIRE(boxes.size() == 216);
  long mismatches = 0;
  for (const auto& a : boxes) {
    for (const auto& b : boxes) {
      if (rcc8(a, b, 1e-6) != oracle::rcc8_by_sampling(a, b)) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("rcc8 is JEPD and converse-consistent on random pairs") {
  std::mt19937 rng(99);
  for (int i = 0; i < 1000; ++i) {
    Box a = random_box(rng), b = random_box(rng);
    Rcc8 ab = rcc8(a, b, 1e-6), ba = rcc8(b, a, 1e-6);
    CHECK(ba == converse(ab));
    CHECK(converse(converse(ab)) == ab);
  }
  // nested and touching real-valued cases
  Box outer = Box::centered({0, 0, 0}, {2, 2, 2});
  CHECK(rcc8(Box::centered({0, 0, 0}, {1, 1, 1}), outer, 1e-6) == Rcc8::kNTPP);
  CHECK(rcc8(Box::centered({0.5, 0, 0}, {1, 1, 1}), outer, 1e-6) == Rcc8::kTPP);
  CHECK(rcc8(Box::centered({2, 0, 0}, {2, 2, 2}), outer, 1e-6) == Rcc8::kEC);
  CHECK(rcc8(Box::centered({2 + 1e-7, 0, 0}, {2, 2, 2}), outer, 1e-6) == Rcc8::kEC);
  CHECK(rcc8(Box::centered({2.1, 0, 0}, {2, 2, 2}), outer, 1e-6) == Rcc8::kDC);
  CHECK(rcc8(outer, outer, 1e-6) == Rcc8::kEQ);
}

TEST_CASE("regions: dimension and carrier") {
  Region cube = Region::from_box(Box::centered({0, 0, 0}, {1, 1, 1}));
  CHECK(cube.dimension() == 3);
  CHECK(cube.carrier() == "box");
  Region patch{{0, 1, 0}, {1, 1, 1}};
  CHECK(patch.dimension() == 2);
  CHECK(patch.carrier() == "patch");
  CHECK(Region{{0, 1, 0}, {0, 2, 0}}.carrier() == "segment");
  CHECK(Region::point({1, 2, 3}).dimension() == 0);
  CHECK(patch.within(cube) == false);
  CHECK(Region{{0, 0.5, 0}, {0.5, 0.5, 0.5}}.within(cube));
}

TEST_CASE("distance") {
  CHECK(distance({1, 2, 3}, {1, 2, 3}) == 0.0);
  CHECK(distance({0, 0, 0}, {1, 2.3, -0.8}) == doctest::Approx(std::sqrt(1 + 5.29 + 0.64)));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 200; ++i) {
    Vec3 a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)}, c{u(rng), u(rng), u(rng)};
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
  }
}
