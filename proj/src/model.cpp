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

#include "voxml/model.hpp"

#include <array>
#include <utility>

namespace voxml {

namespace {

template <typename E, std::size_t N>
using Table = std::array<std::pair<E, std::string_view>, N>;

template <typename E, std::size_t N>
std::string_view name_in(const Table<E, N>& table, E v) {
  for (const auto& [e, s] : table) {
    if (e == v) return s;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> lookup_in(const Table<E, N>& table, std::string_view s) {
  for (const auto& [e, name] : table) {
    if (name == s) return e;
  }
  return std::nullopt;
}

constexpr Table<HeadShape, kHeadShapeCount> kHeads{{
    {HeadShape::kPrismatoid, "prismatoid"},
    {HeadShape::kPyramid, "pyramid"},
    {HeadShape::kWedge, "wedge"},
    {HeadShape::kParallelepiped, "parallelepiped"},
    {HeadShape::kCupola, "cupola"},
    {HeadShape::kFrustum, "frustum"},
    {HeadShape::kCylindroid, "cylindroid"},
    {HeadShape::kEllipsoid, "ellipsoid"},
    {HeadShape::kHemiellipsoid, "hemiellipsoid"},
    {HeadShape::kBipyramid, "bipyramid"},
    {HeadShape::kRectangularPrism, "rectangular_prism"},
    {HeadShape::kToroid, "toroid"},
    {HeadShape::kSheet, "sheet"},
}};

constexpr Table<Concavity, 3> kConcavities{{
    {Concavity::kConcave, "concave"},
    {Concavity::kFlat, "flat"},
    {Concavity::kConvex, "convex"},
}};

constexpr Table<Plane, 3> kPlanes{{
    {Plane::kXY, "XY"},
    {Plane::kXZ, "XZ"},
    {Plane::kYZ, "YZ"},
}};

constexpr Table<Axis, 3> kAxes{{
    {Axis::kX, "X"},
    {Axis::kY, "Y"},
    {Axis::kZ, "Z"},
}};

constexpr Table<ProgramHead, 5> kProgramHeads{{
    {ProgramHead::kState, "state"},
    {ProgramHead::kProcess, "process"},
    {ProgramHead::kTransition, "transition"},
    {ProgramHead::kAssignment, "assignment"},
    {ProgramHead::kTest, "test"},
}};

constexpr Table<ScaleKind, 5> kScales{{
    {ScaleKind::kNominal, "nominal"},
    {ScaleKind::kBinary, "binary"},
    {ScaleKind::kOrdinal, "ordinal"},
    {ScaleKind::kInterval, "interval"},
    {ScaleKind::kRational, "rational"},
}};

constexpr Table<Arity, 2> kArities{{
    {Arity::kTransitive, "transitive"},
    {Arity::kIntransitive, "intransitive"},
}};

constexpr Table<RelationClass, 2> kRelationClasses{{
    {RelationClass::kConfig, "config"},
    {RelationClass::kForceDynamic, "force_dynamic"},
}};

constexpr Table<Rcc8, 8> kRcc8{{
    {Rcc8::kDC, "DC"},
    {Rcc8::kEC, "EC"},
    {Rcc8::kPO, "PO"},
    {Rcc8::kTPP, "TPP"},
    {Rcc8::kNTPP, "NTPP"},
    {Rcc8::kTPPi, "TPPi"},
    {Rcc8::kNTPPi, "NTPPi"},
    {Rcc8::kEQ, "EQ"},
}};

constexpr Table<AffordanceKind, 2> kAffordanceKinds{{
    {AffordanceKind::kGibsonian, "gibsonian"},
    {AffordanceKind::kTelic, "telic"},
}};

constexpr Table<EmbodimentScale, 3> kEmbodimentScales{{
    {EmbodimentScale::kSmallerThanAgent, "<agent"},
    {EmbodimentScale::kAgentSized, "agent"},
    {EmbodimentScale::kLargerThanAgent, ">agent"},
}};

constexpr Table<FunctionSpace, 2> kSpaces{{
    {FunctionSpace::kWorld, "world"},
    {FunctionSpace::kObject, "object"},
}};

constexpr Table<VoxemeKind, 5> kKinds{{
    {VoxemeKind::kObject, "object"},
    {VoxemeKind::kProgram, "program"},
    {VoxemeKind::kAttribute, "attribute"},
    {VoxemeKind::kRelation, "relation"},
    {VoxemeKind::kFunction, "function"},
}};

}  // namespace

std::string_view to_string(HeadShape v) { return name_in(kHeads, v); }
std::string_view to_string(Concavity v) { return name_in(kConcavities, v); }
std::string_view to_string(Plane v) { return name_in(kPlanes, v); }
std::string_view to_string(ProgramHead v) { return name_in(kProgramHeads, v); }
std::string_view to_string(ScaleKind v) { return name_in(kScales, v); }
std::string_view to_string(Arity v) { return name_in(kArities, v); }
std::string_view to_string(RelationClass v) { return name_in(kRelationClasses, v); }
std::string_view to_string(Rcc8 v) { return name_in(kRcc8, v); }
std::string_view to_string(AffordanceKind v) { return name_in(kAffordanceKinds, v); }
std::string_view to_string(EmbodimentScale v) { return name_in(kEmbodimentScales, v); }
std::string_view to_string(FunctionSpace v) { return name_in(kSpaces, v); }
std::string_view to_string(VoxemeKind v) { return name_in(kKinds, v); }

std::optional<HeadShape> parse_head_shape(std::string_view s) { return lookup_in(kHeads, s); }
std::optional<Concavity> parse_concavity(std::string_view s) { return lookup_in(kConcavities, s); }
std::optional<Plane> parse_plane(std::string_view s) { return lookup_in(kPlanes, s); }
std::optional<Axis> parse_axis(std::string_view s) { return lookup_in(kAxes, s); }

std::optional<SignedAxis> parse_signed_axis(std::string_view s) {
  if (s.size() != 2 || (s[0] != '+' && s[0] != '-')) return std::nullopt;
  auto axis = parse_axis(s.substr(1));
  if (!axis) return std::nullopt;
  return SignedAxis{*axis, s[0] == '+'};
}

std::optional<ProgramHead> parse_program_head(std::string_view s) {
  return lookup_in(kProgramHeads, s);
}

std::optional<ScaleKind> parse_scale_kind(std::string_view s) {
  if (s == "ratio") return ScaleKind::kRational;
  return lookup_in(kScales, s);
}

std::optional<Arity> parse_arity(std::string_view s) { return lookup_in(kArities, s); }

std::optional<RelationClass> parse_relation_class(std::string_view s) {
  if (s == "configuration") return RelationClass::kConfig;
  return lookup_in(kRelationClasses, s);
}

std::optional<Rcc8> parse_rcc8(std::string_view s) { return lookup_in(kRcc8, s); }

std::optional<AffordanceKind> parse_affordance_kind(std::string_view s) {
  return lookup_in(kAffordanceKinds, s);
}

std::optional<EmbodimentScale> parse_embodiment_scale(std::string_view s) {
  return lookup_in(kEmbodimentScales, s);
}

std::optional<FunctionSpace> parse_function_space(std::string_view s) {
  return lookup_in(kSpaces, s);
}

std::optional<VoxemeKind> parse_voxeme_kind(std::string_view s) {
  return lookup_in(kKinds, s);
}

Axis plane_normal(Plane p) {
  switch (p) {
    case Plane::kXY:
      return Axis::kZ;
    case Plane::kXZ:
      return Axis::kY;
    case Plane::kYZ:
      return Axis::kX;
  }
  return Axis::kY;
}

std::string to_string(const HabitatConstraint& c) {
  struct Printer {
    std::string operator()(const AlignConstraint& a) const {
      return std::string("align(") + axis_char(a.object_axis) + ", E_" +
             axis_char(a.world_axis) + ")";
    }
    std::string operator()(const FaceLabelConstraint& f) const {
      return f.label + "(" + f.axis.str() + ")";
    }
    std::string operator()(const RelativeDimConstraint& r) const {
      return std::string(1, axis_char(r.lesser)) + " << " + axis_char(r.greater);
    }
    std::string operator()(const PredicateConstraint& p) const { return p.term.str(); }
  };
  return std::visit(Printer{}, c);
}

const HabitatGroup* HabitatSpec::find(int index) const {
  for (const auto* list : {&intrinsic, &extrinsic}) {
    for (const auto& g : *list) {
      if (g.index == index) return &g;
    }
  }
  return nullptr;
}

std::optional<Rcc8> RelationVoxeme::rcc8_value() const {
  if (relation_class != RelationClass::kConfig) return std::nullopt;
  return parse_rcc8(value);
}

std::string DimensionMapping::str() const {
  return "dimension(" + var + "):" + var + "-" + std::to_string(reduction);
}

std::string ArityRule::str() const {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += "->";
    s += path[i];
  }
  if (selector) s += "[" + selector->str() + "]";
  return s + ":" + std::string(to_string(arity));
}

const Lex& Voxeme::lex() const {
  return std::visit([](const auto& v) -> const Lex& { return v.lex; }, body);
}

HeadShape canonicalize_head(HeadShape head, const std::vector<Plane>& reflect_sym) {
  if (head != HeadShape::kParallelepiped) return head;
  int distinct = 0;
  for (Plane p : {Plane::kXY, Plane::kXZ, Plane::kYZ}) {
    for (Plane q : reflect_sym) {
      if (p == q) {
        ++distinct;
        break;
      }
    }
  }
  return distinct >= 2 ? HeadShape::kRectangularPrism : head;
}

SymmetrySets primitive_symmetry(HeadShape head) {
  const SymmetrySets full{{Axis::kX, Axis::kY, Axis::kZ},
                          {Plane::kXY, Plane::kXZ, Plane::kYZ}};
  // Upright primitives that taper or close toward +Y keep only the vertical
  // axis and the two vertical planes.
  const SymmetrySets upright{{Axis::kY}, {Plane::kXY, Plane::kYZ}};
  switch (head) {
    case HeadShape::kParallelepiped:
    case HeadShape::kCylindroid:
    case HeadShape::kEllipsoid:
    case HeadShape::kBipyramid:
    case HeadShape::kRectangularPrism:
    case HeadShape::kToroid:
      return full;
    case HeadShape::kPrismatoid:
    case HeadShape::kPyramid:
    case HeadShape::kCupola:
    case HeadShape::kFrustum:
    case HeadShape::kHemiellipsoid:
    case HeadShape::kSheet:
      return upright;
    case HeadShape::kWedge:
      // A ramp: mirror-symmetric left to right only.
      return {{}, {Plane::kYZ}};
  }
  return {};
}

}  // namespace voxml
