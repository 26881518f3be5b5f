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

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "voxml/interpreter.hpp"
#include "voxml/io.hpp"
#include "voxml/voxicon.hpp"

using namespace voxml;

namespace {

Voxicon paper() { return load_voxicon(support::path("data/paper.vox")); }

int count(const std::vector<Diagnostic>& ds, Severity s) {
  return static_cast<int>(
      std::count_if(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.severity == s; }));
}

}  // namespace

TEST_CASE("lookup by predicate and kind") {
  Voxicon vx = paper();
  REQUIRE(vx.lookup("plate", VoxemeKind::kObject));
  CHECK(vx.lookup("plate", VoxemeKind::kObject)->object()->type.concavity == Concavity::kConcave);
  CHECK(vx.lookup("plate", VoxemeKind::kProgram) == nullptr);
  CHECK(vx.lookup_any("is_touching")->label == "touching");
  CHECK(vx.lookup_any("unicorn") == nullptr);
  CHECK_THROWS_AS(vx.insert(*vx.lookup("put", VoxemeKind::kProgram)), std::invalid_argument);
}

TEST_CASE("merge keeps both libraries") {
  Voxicon vx = paper();
  vx.merge(load_voxicon(support::path("data/extensions.vox")));
  CHECK(vx.size() == 14);
  CHECK(vx.lookup("block", VoxemeKind::kObject));
}

TEST_CASE("stats on the shipped voxicon") {
  auto s = stats(paper());
  CHECK(s.count(VoxemeKind::kObject) == 5);
  CHECK(s.count(VoxemeKind::kProgram) == 2);
  CHECK(s.count(VoxemeKind::kAttribute) == 2);
  CHECK(s.count(VoxemeKind::kRelation) == 1);
  CHECK(s.count(VoxemeKind::kFunction) == 1);
  CHECK(s.by_head.at(HeadShape::kSheet) == 2);
  CHECK(s.by_program_head.at(ProgramHead::kTransition) == 1);
  CHECK(s.str().find("object") != std::string::npos);
}

TEST_CASE("lint: shipped voxicon has no errors with primitives registered") {
  auto ds = lint(paper(), primitive_symbols());
  CHECK(count(ds, Severity::kError) == 0);
  // chair's sit is neither a program nor a primitive
  CHECK(std::any_of(ds.begin(), ds.end(), [](const Diagnostic& d) {
    return d.message == "unknown event predicate sit";
  }));
  // without the primitives, put and slide bodies are flagged
  auto bare = lint(paper(), {});
  CHECK(std::any_of(bare.begin(), bare.end(), [](const Diagnostic& d) {
    return d.message == "unknown body primitive grasp";
  }));
}

TEST_CASE("lint: undeclared component and unknown type tag") {
  Voxicon vx = paper();
  ObjectVoxeme chair = *vx.lookup("chair", VoxemeKind::kObject)->object();
  chair.habitat.intrinsic[0].entries[1].constraints = {
      PredicateConstraint{parse_logical_form("clear(cushion)")}};
  AttributeVoxeme brown = *vx.lookup("brown", VoxemeKind::kAttribute)->attribute();
  brown.arg.type = "gas";
  Voxicon mine;
  mine.insert(Voxeme{"chair", chair});
  mine.insert(Voxeme{"brown", brown});
  auto ds = lint(mine, primitive_symbols());
  CHECK(count(ds, Severity::kError) == 1);
  CHECK(std::any_of(ds.begin(), ds.end(), [](const Diagnostic& d) {
    return d.message == "undeclared component cushion";
  }));
  CHECK(std::any_of(ds.begin(), ds.end(), [](const Diagnostic& d) {
    return d.message == "unknown argument type tag gas";
  }));
}
