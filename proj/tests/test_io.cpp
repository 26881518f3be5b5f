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

#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "voxml/error.hpp"
#include "voxml/io.hpp"
#include "voxml/scene.hpp"
#include "voxml/voxicon.hpp"

using namespace voxml;

namespace {

const char* kSlide = R"(program slide {
  LEX {
    PRED = slide
    TYPE = process
  }
  TYPE {
    HEAD = process
    ARGS {
      A1 = x:physobj
      A2 = y:physobj
    }
    BODY {
      E1 = while(EC(x, y), move(x))
    }
  }
}
)";

ParseError parse_error_of(const std::string& text) {
  try {
    parse_voxeme(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return syntax_error({0, 0}, "");
}

Voxicon paper() { return load_voxicon(support::path("data/paper.vox")); }

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("slide parses to a process with one while statement") {
  Voxeme v = parse_voxeme(kSlide);
  REQUIRE(v.program());
  CHECK(v.program()->head == ProgramHead::kProcess);
  REQUIRE(v.program()->body.size() == 1);
  CHECK(v.program()->body[0].str() == "while(EC(x, y), move(x))");
  CHECK(serialize_voxeme(v) == kSlide);
}

TEST_CASE("empty document is a syntax error") {
  auto e = parse_error_of("");
  CHECK(e.kind() == ParseErrorKind::kSyntax);
  CHECK(std::string(e.message()).find("empty document") != std::string::npos);
  CHECK(parse_error_of("# only a comment\n").kind() == ParseErrorKind::kSyntax);
}

TEST_CASE("HEAD = cube is an unknown enum at the value position") {
  std::string plate = serialize_voxeme(*paper().lookup("plate", VoxemeKind::kObject));
  auto e = parse_error_of(replace(plate, "HEAD = sheet", "HEAD = cube"));
  CHECK(e.kind() == ParseErrorKind::kSchema);
  CHECK(std::string(e.message()).find("cube") != std::string::npos);
  CHECK(e.pos().line == 7);
  CHECK(e.pos().column == 12);
}

TEST_CASE("structural errors are syntax errors with positions") {
  auto e = parse_error_of("object a {\n  LEX {\n    PRED = a\n");
  CHECK(e.kind() == ParseErrorKind::kSyntax);
  CHECK(std::string(e.message()).find("unclosed") != std::string::npos);

  e = parse_error_of("}\n");
  CHECK(e.kind() == ParseErrorKind::kSyntax);
  CHECK(e.pos().line == 1);

  e = parse_error_of("object a {\n  LEX\n}\n");
  CHECK(e.kind() == ParseErrorKind::kSyntax);
  CHECK(e.pos().line == 2);
}

TEST_CASE("serializer tokens") {
  Voxicon vx = paper();
  CHECK(serialize_voxeme(*vx.lookup("brown", VoxemeKind::kAttribute)).find("SCALE = nominal") !=
        std::string::npos);
  CHECK(serialize_voxeme(*vx.lookup("top", VoxemeKind::kFunction))
            .find("MAPPING = dimension(n):n-1") != std::string::npos);
  CHECK(serialize_voxeme(*vx.lookup("put", VoxemeKind::kProgram))
            .find("E3 = at(y, z) -> ungrasp(x, y)") != std::string::npos);
}

TEST_CASE("shipped voxicon round-trips byte for byte") {
  std::string text = support::slurp(support::path("data/paper.vox"));
  auto entries = parse_voxemes(text);
  CHECK(entries.size() == 11);
  CHECK(serialize_voxemes(entries) == text);
  for (const auto& v : entries) {
    CHECK(parse_voxeme(serialize_voxeme(v)) == v);
  }
  std::string ext = support::slurp(support::path("data/extensions.vox"));
  CHECK(serialize_voxemes(parse_voxemes(ext)) == ext);
}

TEST_CASE("aliases and elisions normalize") {
  std::string plate = serialize_voxeme(*paper().lookup("plate", VoxemeKind::kObject));
  Voxeme a = parse_voxeme(replace(plate, "ROTATSYM", "ROTASYM"));
  CHECK(a == parse_voxeme(plate));
  std::string small = serialize_voxeme(*paper().lookup("small", VoxemeKind::kAttribute));
  CHECK(parse_voxeme(replace(small, "ordinal", "ratio")).attribute()->scale ==
        ScaleKind::kRational);
}

TEST_CASE("voxicon: ten section entries, empty file, duplicates") {
  Voxicon vx = paper();
  CHECK(vx.size() == 11);
  CHECK(vx.remove("chair", VoxemeKind::kObject));
  CHECK(vx.size() == 10);
  CHECK(parse_voxicon("").empty());

  std::string plate = serialize_voxeme(*paper().lookup("plate", VoxemeKind::kObject));
  try {
    parse_voxicon(plate + "\n" + plate);
    FAIL("duplicate accepted");
  } catch (const VoxiconParseError& e) {
    REQUIRE(e.entries().size() == 1);
    CHECK(e.schema_only());
    CHECK(e.entries()[0].index == 1);
    CHECK(std::string(e.entries()[0].error.message()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("voxicon: per-entry errors are aggregated") {
  std::string plate = serialize_voxeme(*paper().lookup("plate", VoxemeKind::kObject));
  std::string bad = replace(plate, "CONCAVITY = concave", "CONCAVITY = hollow");
  std::string worse = replace(serialize_voxeme(*paper().lookup("brown", VoxemeKind::kAttribute)),
                              "nominal", "colour");
  try {
    parse_voxicon(bad + "\n" + serialize_voxeme(*paper().lookup("put", VoxemeKind::kProgram)) +
                  "\n" + worse);
    FAIL("errors not raised");
  } catch (const VoxiconParseError& e) {
    REQUIRE(e.entries().size() == 2);
    CHECK(e.entries()[0].index == 0);
    CHECK(e.entries()[1].index == 2);
  }
}

TEST_CASE("scene text round trip and errors") {
  SceneState s = load_scene(support::path("data/kitchen.scene"));
  CHECK(s.objects.size() == 6);
  CHECK(s.check().empty());
  CHECK(s.has_fact(parse_logical_form("clear(chair1, seat)")));
  CHECK(parse_scene(serialize_scene(s)) == s);

  auto fails = [](const std::string& text, int line) {
    try {
      parse_scene(text);
    } catch (const ParseError& e) {
      CHECK(e.pos().line == line);
      return;
    }
    FAIL("accepted: " << text);
  };
  fails("instance a cube pos <0, 0, 0> rot <0, 0, 0> ext <0, 1, 1>\n", 1);
  fails("instance a cube pos <0, 0, 0> rot <0, 0, 0> ext <1, 1, 1>\n"
        "instance a cube pos <0, 0, 0> rot <0, 0, 0> ext <1, 1, 1>\n",
        2);
  fails("\nfact hold(nobody, a)\n", 2);
  fails("instance a cube pos <0, 0> rot <0, 0, 0> ext <1, 1, 1>\n", 1);
}
