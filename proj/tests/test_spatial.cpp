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

#include "doctest.h"
#include "oracles.hpp"
#include "voxml/error.hpp"
#include "voxml/spatial.hpp"
#include "voxml/voxicon.hpp"

using namespace voxml;

namespace {

Voxicon paper() { return load_voxicon(support::path("data/paper.vox")); }

const ObjectVoxeme& object(const Voxicon& vx, const char* pred) {
  return *vx.lookup(pred, VoxemeKind::kObject)->object();
}

SceneObject obj(const char* id, Vec3 pos, Vec3 ext, Vec3 rot = {}) {
  return {id, id, pos, rot, ext, std::nullopt};
}

bool group_holds(const ObjectVoxeme& v, const SceneObject& o, const SceneState& s = {},
                 SpatialParams p = {}) {
  return check_habitat_group(v.habitat.intrinsic.at(0), o, s, p);
}

}  // namespace

TEST_CASE("align and face labels follow the rotation") {
  Voxicon vx = paper();
  const auto& plate = object(vx, "plate");
  SceneObject p = obj("plate1", {0, 1, 0}, {0.3, 0.05, 0.3});
  CHECK(group_holds(plate, p));
  p.rotation = {180, 0, 0};
  CHECK_FALSE(group_holds(plate, p));
  p.rotation = {0, 73, 0};  // about the aligned axis itself
  CHECK(group_holds(plate, p));
  p.rotation = {4, 0, 0};
  CHECK(group_holds(plate, p));
  p.rotation = {6, 0, 0};
  CHECK_FALSE(group_holds(plate, p));
  SpatialParams loose;
  loose.align_tol_deg = 10;
  CHECK(group_holds(plate, p, {}, loose));
}

TEST_CASE("align is invariant under rotation about the aligned axis") {
  // The Y Euler angle is applied last, about world Y.
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ang(-180, 180);
  HabitatConstraint up = AlignConstraint{Axis::kY, Axis::kY};
  for (int i = 0; i < 200; ++i) {
    SceneObject o = obj("o", {}, {1, 1, 1}, {ang(rng) / 20, 0, ang(rng) / 20});
    SceneObject spun = o;
    spun.rotation.y = ang(rng);
    CHECK(axis_deviation_deg(o, {Axis::kY, true}, {Axis::kY, true}) ==
          doctest::Approx(axis_deviation_deg(spun, {Axis::kY, true}, {Axis::kY, true})));
    CHECK(check_habitat(up, o, {}, 5, 0.25) == check_habitat(up, spun, {}, 5, 0.25));
  }
}

TEST_CASE("relative dimension: wall passes, unit cube fails") {
  Voxicon vx = paper();
  const auto& wall = object(vx, "wall");
  CHECK(group_holds(wall, obj("wall1", {}, {4, 3, 0.2})));
  CHECK_FALSE(group_holds(wall, obj("cube1", {}, {1, 1, 1})));
  HabitatConstraint zy = RelativeDimConstraint{Axis::kZ, Axis::kY};
  CHECK(check_habitat(zy, obj("w", {}, {4, 3, 0.75}), {}, 5, 0.25));
  CHECK_FALSE(check_habitat(zy, obj("w", {}, {4, 3, 0.76}), {}, 5, 0.25));
}

TEST_CASE("predicate constraints read scene facts about the instance") {
  Voxicon vx = paper();
  const auto& chair = object(vx, "chair");
  SceneState s;
  SceneObject c = obj("chair1", {}, {0.5, 1, 0.5});
  CHECK_FALSE(group_holds(chair, c, s));
  s.facts.insert(parse_logical_form("clear(chair1, seat)"));
  CHECK(group_holds(chair, c, s));
}

TEST_CASE("top reduces dimension by one: cube, sheet patch, segment") {
  Voxicon vx = paper();
  const FunctionVoxeme& top = *vx.lookup("top", VoxemeKind::kFunction)->function();

  Region cube = Region::from_box(Box::centered({0, 0, 0}, {1, 1, 1}));
  Region face = eval_spatial_function(top, cube);
  CHECK(face.dimension() == 2);
  CHECK(face == Region{{-0.5, 0.5, -0.5}, {0.5, 0.5, 0.5}});

  Region sheet{{0, 0, 0}, {2, 1, 0}};  // XY patch
  Region edge = eval_spatial_function(top, sheet);
  CHECK(edge.dimension() == 1);
  CHECK(edge == Region{{0, 1, 0}, {2, 1, 0}});

  Region segment{{1, 0, 1}, {1, 3, 1}};
  Region end = eval_spatial_function(top, segment);
  CHECK(end.dimension() == 0);
  CHECK(end == Region::point({1, 3, 1}));

  CHECK_THROWS_AS(eval_spatial_function(top, end), SpatialError);
  CHECK_THROWS_AS(eval_spatial_function(top, Region{{0, 1, 0}, {1, 1, 1}}), SpatialError);
}

TEST_CASE("object-space functions rotate their axis first") {
  Voxicon vx = paper();
  FunctionVoxeme top = *vx.lookup("top", VoxemeKind::kFunction)->function();
  top.orientation.space = FunctionSpace::kObject;
  Region cube = Region::from_box(Box::centered({0, 0, 0}, {1, 2, 3}));
  // upside down: the object's top is the world bottom
  CHECK(eval_spatial_function(top, cube, {180, 0, 0}).max.y == -1.0);
  // on its side (Z by -90): local +Y points along world +X
  CHECK(eval_spatial_function(top, cube, {0, 0, -90}).min.x == 0.5);
}

TEST_CASE("reduction is a subset of the closure of its input") {
  Voxicon vx = paper();
  const FunctionVoxeme& top = *vx.lookup("top", VoxemeKind::kFunction)->function();
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    Vec3 a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
    Region r{{std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)},
             {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)}};
    Region t = eval_spatial_function(top, r);
    CHECK(t.dimension() == r.dimension() - 1);
    CHECK(t.within(r));
  }
}

TEST_CASE("symmetry claims of shipped objects hold") {
  Voxicon vx = paper();
  CHECK(check_symmetry_claims(object(vx, "wall"), {4, 3, 0.2}, 1e-9).all_confirmed());
  CHECK(check_symmetry_claims(object(vx, "table"), {2, 1, 1.2}, 1e-9).all_confirmed());
  CHECK(check_symmetry_claims(object(vx, "plate"), {0.3, 0.05, 0.3}, 1e-9).all_confirmed());
  CHECK(check_symmetry_claims(object(vx, "apple"), {0.08, 0.08, 0.08}, 1e-9).all_confirmed());
  CHECK(check_symmetry_claims(object(vx, "chair"), {0.5, 1, 0.5}, 1e-9).all_confirmed());

  // a sphere proxy: every axis also at quarter turns
  ObjectVoxeme ball = object(vx, "apple");
  ball.type.rotat_sym = {Axis::kX, Axis::kY, Axis::kZ};
  auto r = check_symmetry_claims(ball, {1, 1, 1}, 1e-9);
  CHECK(r.all_confirmed());
  for (const auto& c : r.claims) {
    if (c.rotational) CHECK(c.order == 4);
  }
  // the thin wall only at half turns about Y and X
  auto w = check_symmetry_claims(object(vx, "wall"), {4, 3, 0.2}, 1e-9);
  CHECK(w.claims[2].order == 2);
}

TEST_CASE("a frustum mirrored across XZ is unsupported") {
  Voxicon vx = paper();
  ObjectVoxeme cup = object(vx, "plate");
  cup.type.head.shape = HeadShape::kFrustum;
  cup.type.reflect_sym = {Plane::kXZ};
  cup.type.rotat_sym = {Axis::kY, Axis::kX};
  auto r = check_symmetry_claims(cup, {1, 1, 1}, 1e-9);
  CHECK_FALSE(r.all_confirmed());
  auto bad = r.unsupported();
  REQUIRE(bad.size() == 2);
  CHECK(bad[0].find("ROTATSYM X") == 0);
  CHECK(bad[1].find("REFLECTSYM XZ") == 0);
}

TEST_CASE("canonical heads") {
  CHECK(canonicalize_head(HeadShape::kParallelepiped, {Plane::kXY, Plane::kYZ}) ==
        HeadShape::kRectangularPrism);
  CHECK(canonicalize_head(HeadShape::kRectangularPrism, {Plane::kXY, Plane::kYZ}) ==
        HeadShape::kRectangularPrism);
  CHECK(canonicalize_head(HeadShape::kParallelepiped, {Plane::kXY}) ==
        HeadShape::kParallelepiped);
  for (int i = 0; i < kHeadShapeCount; ++i) {
    auto h = static_cast<HeadShape>(i);
    auto once = canonicalize_head(h, {Plane::kXY, Plane::kYZ});
    CHECK(canonicalize_head(once, {Plane::kXY, Plane::kYZ}) == once);
  }
}

TEST_CASE("placement on flat and concave grounds") {
  Voxicon vx = paper();
  SceneObject table = obj("table1", {0, 0.5, 0}, {2, 1, 1.2});
  Region top = placement_region(table, &object(vx, "table"), {});
  CHECK(top == Region{{-1, 1, -0.6}, {1, 1, 0.6}});

  SceneObject plate = obj("plate1", {0.5, 1.025, 0.2}, {0.3, 0.05, 0.3});
  Region inner = placement_region(plate, &object(vx, "plate"), {});
  CHECK(inner.max.y < plate.world_box().max.y);
  CHECK(inner.min.y == doctest::Approx(1.025));
  CHECK(inner.min.x == doctest::Approx(0.38));
  CHECK(inner.max.z == doctest::Approx(0.32));
  Vec3 expect = oracle::placement_point(plate.position, plate.extents, true, 0.0);
  CHECK(distance(inner.center(), expect) < 1e-12);

  plate.rotation = {180, 0, 0};
  try {
    placement_region(plate, &object(vx, "plate"), {});
    FAIL("upside-down plate accepted");
  } catch (const SpatialError& e) {
    CHECK(std::string(e.what()).find("support habitat unsatisfied") != std::string::npos);
  }
}

TEST_CASE("minimal embedding space") {
  std::vector<SceneObject> one{obj("a", {}, {1, 1, 1})};
  CHECK(minimal_embedding_space(one, 0) == Box{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}});
  one.push_back(obj("b", {3, 0, 0}, {1, 1, 1}));
  Box two = minimal_embedding_space(one, 0);
  CHECK(two.min.x == -0.5);
  CHECK(two.max.x == 3.5);
  CHECK_THROWS_AS(minimal_embedding_space(std::vector<SceneObject>{}, 0), SpatialError);
  CHECK_THROWS_AS(minimal_embedding_space(one, -1), SpatialError);

  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-5, 5), e(0.1, 2);
  std::vector<SceneObject> objs;
  Box prev;
  for (int i = 0; i < 50; ++i) {
    objs.push_back(obj("o", {u(rng), u(rng), u(rng)}, {e(rng), e(rng), e(rng)},
                       {u(rng) * 30, u(rng) * 30, u(rng) * 30}));
    Box mes = minimal_embedding_space(objs, 1.0);
    for (const auto& o : objs) CHECK(mes.strictly_contains(o.world_box()));
    if (i > 0) CHECK(mes.contains(prev));
    prev = mes;
  }
}

TEST_CASE("derived relation facts of the kitchen scene") {
  SceneState s = load_scene(support::path("data/kitchen.scene"));
  auto facts = relation_facts(s, 1e-6);
  auto has = [&](const char* text) {
    return std::find(facts.begin(), facts.end(), parse_logical_form(text)) != facts.end();
  };
  CHECK(has("EC(plate1, table1)"));
  CHECK(has("EC(apple1, table1)"));
  CHECK_FALSE(has("EC(apple1, plate1)"));
}
