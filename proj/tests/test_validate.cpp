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

#include "doctest.h"
#include "oracles.hpp"
#include "voxml/io.hpp"
#include "voxml/validate.hpp"
#include "voxml/voxicon.hpp"

using namespace voxml;

namespace {

Voxicon paper() { return load_voxicon(support::path("data/paper.vox")); }

ObjectVoxeme plate() { return *paper().lookup("plate", VoxemeKind::kObject)->object(); }

ValidationReport check(ObjectVoxeme o) { return validate(Voxeme{"x", std::move(o)}); }

}  // namespace

TEST_CASE("every shipped voxeme validates with zero errors") {
  Voxicon vx = paper();
  for (const auto& v : vx.entries()) {
    auto r = validate(v);
    CHECK_MESSAGE(r.ok(), v.pred());
  }
  // wall, table and apple elide their affordances: warnings only
  CHECK(validate(*vx.lookup("wall", VoxemeKind::kObject)).has("affordance structure elided"));
}

TEST_CASE("coindexes") {
  ObjectVoxeme o = plate();
  o.type.head.coindex = 2;
  CHECK(check(o).has("dangling coindex"));
  o.type.components[0].coindex = 2;
  CHECK(check(o).ok());
  o.type.components[1].coindex = 2;
  CHECK(check(o).has("ambiguous coindex"));
}

TEST_CASE("symmetry duplicates and excess") {
  ObjectVoxeme o = plate();
  o.type.rotat_sym = {Axis::kY, Axis::kY};
  CHECK(check(o).has("duplicate symmetry axis Y"));
  o = plate();
  o.type.reflect_sym = {Plane::kXY, Plane::kXY};
  CHECK(check(o).has("duplicate symmetry plane"));
  o = plate();
  o.type.head.shape = HeadShape::kWedge;
  o.type.rotat_sym = {Axis::kX};
  auto r = check(o);
  CHECK(r.ok());
  CHECK(r.warnings() >= 1);
}

TEST_CASE("habitats and affordances") {
  ObjectVoxeme o = plate();
  o.afford_str[0].condition = {2};
  CHECK(check(o).has("unresolved habitat reference H[2]"));
  o = plate();
  o.afford_str[0].result = parse_logical_form("hold(w, x)");
  CHECK(check(o).has("result variable w is not bound by the event"));
  o = plate();
  o.afford_str[0].result.reset();
  auto r = check(o);
  CHECK(r.ok());
  CHECK(r.has("telic affordance without a result"));
  o = plate();
  o.habitat.intrinsic.push_back(o.habitat.intrinsic[0]);
  CHECK(check(o).has("duplicate habitat index"));
}

TEST_CASE("programs, relations and functions") {
  Voxicon vx = paper();
  ProgramVoxeme put = *vx.lookup("put", VoxemeKind::kProgram)->program();
  put.body.push_back(parse_logical_form("move(w)"));
  CHECK(validate(Voxeme{"put", put}).has("undeclared variable w"));
  put.body.clear();
  CHECK(validate(Voxeme{"put", put}).has("empty body"));

  RelationVoxeme rel = *vx.lookup("is_touching", VoxemeKind::kRelation)->relation();
  rel.value = "TOUCH";
  CHECK(validate(Voxeme{"touching", rel}).has("RCC-8"));
  rel.relation_class = RelationClass::kForceDynamic;
  CHECK(validate(Voxeme{"touching", rel}).ok());

  FunctionVoxeme top = *vx.lookup("top", VoxemeKind::kFunction)->function();
  top.mapping.reduction = 2;
  CHECK(validate(Voxeme{"top", top}).has("exactly one"));
  top = *vx.lookup("top", VoxemeKind::kFunction)->function();
  top.referent = {"y", "HEAD"};
  CHECK_FALSE(validate(Voxeme{"top", top}).ok());
}
