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

// The VoxML data model: objects, programs, attributes, relations and
// functions, with their closed value sets. Everything here is a plain value
// type; nothing is mutated after parsing.

#ifndef VOXML_MODEL_HPP_
#define VOXML_MODEL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "voxml/term.hpp"
#include "voxml/vec3.hpp"

namespace voxml {

enum class HeadShape {
  kPrismatoid,
  kPyramid,
  kWedge,
  kParallelepiped,
  kCupola,
  kFrustum,
  kCylindroid,
  kEllipsoid,
  kHemiellipsoid,
  kBipyramid,
  kRectangularPrism,
  kToroid,
  kSheet,
};
inline constexpr int kHeadShapeCount = 13;

enum class Concavity { kConcave, kFlat, kConvex };

// Reflection planes, named by the two axes spanning them.
enum class Plane { kXY, kXZ, kYZ };

enum class ProgramHead { kState, kProcess, kTransition, kAssignment, kTest };

enum class ScaleKind { kNominal, kBinary, kOrdinal, kInterval, kRational };

enum class Arity { kTransitive, kIntransitive };

enum class RelationClass { kConfig, kForceDynamic };

enum class Rcc8 { kDC, kEC, kPO, kTPP, kNTPP, kTPPi, kNTPPi, kEQ };

enum class AffordanceKind { kGibsonian, kTelic };

enum class EmbodimentScale { kSmallerThanAgent, kAgentSized, kLargerThanAgent };

enum class FunctionSpace { kWorld, kObject };

enum class VoxemeKind { kObject, kProgram, kAttribute, kRelation, kFunction };

std::string_view to_string(HeadShape v);
std::string_view to_string(Concavity v);
std::string_view to_string(Plane v);
std::string_view to_string(ProgramHead v);
std::string_view to_string(ScaleKind v);
std::string_view to_string(Arity v);
std::string_view to_string(RelationClass v);
std::string_view to_string(Rcc8 v);
std::string_view to_string(AffordanceKind v);
std::string_view to_string(EmbodimentScale v);  // "<agent", "agent", ">agent"
std::string_view to_string(FunctionSpace v);
std::string_view to_string(VoxemeKind v);

std::optional<HeadShape> parse_head_shape(std::string_view s);
std::optional<Concavity> parse_concavity(std::string_view s);
std::optional<Plane> parse_plane(std::string_view s);
std::optional<Axis> parse_axis(std::string_view s);
std::optional<SignedAxis> parse_signed_axis(std::string_view s);
std::optional<ProgramHead> parse_program_head(std::string_view s);
// Accepts "ratio" as a spelling of rational.
std::optional<ScaleKind> parse_scale_kind(std::string_view s);
std::optional<Arity> parse_arity(std::string_view s);
// Accepts "configuration" as a spelling of config.
std::optional<RelationClass> parse_relation_class(std::string_view s);
std::optional<Rcc8> parse_rcc8(std::string_view s);
std::optional<AffordanceKind> parse_affordance_kind(std::string_view s);
std::optional<EmbodimentScale> parse_embodiment_scale(std::string_view s);
std::optional<FunctionSpace> parse_function_space(std::string_view s);
std::optional<VoxemeKind> parse_voxeme_kind(std::string_view s);

Axis plane_normal(Plane p);

struct Lex {
  std::string pred;
  std::vector<std::string> gl_types;
  friend bool operator==(const Lex&, const Lex&) = default;
};

struct HeadSpec {
  HeadShape shape = HeadShape::kRectangularPrism;
  std::optional<int> coindex;
  friend bool operator==(const HeadSpec&, const HeadSpec&) = default;
};

// "surface[1]", "leg+", "fruit[1]".
struct Component {
  std::string name;
  std::optional<int> coindex;
  bool plural = false;
  friend bool operator==(const Component&, const Component&) = default;
};

struct ObjectTypeStructure {
  HeadSpec head;
  std::vector<Component> components;
  Concavity concavity = Concavity::kFlat;
  // Kept in declaration order so duplicates survive parsing and can be
  // reported by validate().
  std::vector<Axis> rotat_sym;
  std::vector<Plane> reflect_sym;
  friend bool operator==(const ObjectTypeStructure&, const ObjectTypeStructure&) = default;
};

// align(d, E_d'): the object's local axis d points along world axis d'.
struct AlignConstraint {
  Axis object_axis = Axis::kY;
  Axis world_axis = Axis::kY;
  friend bool operator==(const AlignConstraint&, const AlignConstraint&) = default;
};

// top(+Y), front(+Z): the labeled face is the one facing `axis`.
struct FaceLabelConstraint {
  std::string label;
  SignedAxis axis;
  friend bool operator==(const FaceLabelConstraint&, const FaceLabelConstraint&) = default;
};

// Z << Y: the object extent along `lesser` is much smaller than along
// `greater`.
struct RelativeDimConstraint {
  Axis lesser = Axis::kZ;
  Axis greater = Axis::kY;
  friend bool operator==(const RelativeDimConstraint&, const RelativeDimConstraint&) = default;
};

// clear(seat): a predicate over the object's components.
struct PredicateConstraint {
  Term term;
  friend bool operator==(const PredicateConstraint&, const PredicateConstraint&) = default;
};

using HabitatConstraint = std::variant<AlignConstraint, FaceLabelConstraint,
                                       RelativeDimConstraint, PredicateConstraint>;

std::string to_string(const HabitatConstraint& c);

// One "UP = align(Y, E_Y)" line; a label may carry several constraints
// ("CONSTR = Z << Y, Z << X").
struct LabeledConstraints {
  std::string label;
  std::vector<HabitatConstraint> constraints;
  friend bool operator==(const LabeledConstraints&, const LabeledConstraints&) = default;
};

// Habitat H[index].
struct HabitatGroup {
  int index = 1;
  std::vector<LabeledConstraints> entries;
  friend bool operator==(const HabitatGroup&, const HabitatGroup&) = default;
};

// Elided blocks ("EXTR = ...") are represented as empty lists.
struct HabitatSpec {
  std::vector<HabitatGroup> intrinsic;
  std::vector<HabitatGroup> extrinsic;

  const HabitatGroup* find(int index) const;
  friend bool operator==(const HabitatSpec&, const HabitatSpec&) = default;
};

// A[index] = H[i] -> [event] result
struct Affordance {
  int index = 1;
  AffordanceKind kind = AffordanceKind::kTelic;
  std::vector<int> condition;  // conjunction of habitat indices; empty = always
  Term event;
  std::optional<Term> result;  // absent for purely Gibsonian affordances
  friend bool operator==(const Affordance&, const Affordance&) = default;
};

struct Embodiment {
  EmbodimentScale scale = EmbodimentScale::kSmallerThanAgent;
  bool movable = true;
  friend bool operator==(const Embodiment&, const Embodiment&) = default;
};

struct ObjectVoxeme {
  Lex lex;
  ObjectTypeStructure type;
  HabitatSpec habitat;
  std::vector<Affordance> afford_str;
  Embodiment embodiment;
  friend bool operator==(const ObjectVoxeme&, const ObjectVoxeme&) = default;
};

// x:agent
struct TypedVar {
  std::string var;
  std::string type;
  std::string str() const { return var + ":" + type; }
  friend bool operator==(const TypedVar&, const TypedVar&) = default;
};

// Body statements are terms. The conditional "test -> action" is stored as
// cond(test, action); loops as while(test, action).
struct ProgramVoxeme {
  Lex lex;
  ProgramHead head = ProgramHead::kProcess;
  std::vector<TypedVar> args;
  std::vector<Term> body;
  friend bool operator==(const ProgramVoxeme&, const ProgramVoxeme&) = default;
};

struct AttributeVoxeme {
  Lex lex;
  ScaleKind scale = ScaleKind::kNominal;
  Arity arity = Arity::kIntransitive;
  TypedVar arg;
  friend bool operator==(const AttributeVoxeme&, const AttributeVoxeme&) = default;
};

struct RelationVoxeme {
  Lex lex;
  RelationClass relation_class = RelationClass::kConfig;
  // RCC-8 name for config relations; an opaque tag for force_dynamic ones.
  std::string value;
  std::vector<TypedVar> args;

  std::optional<Rcc8> rcc8_value() const;
  friend bool operator==(const RelationVoxeme&, const RelationVoxeme&) = default;
};

// dimension(n):n-1
struct DimensionMapping {
  std::string var = "n";
  int reduction = 1;
  std::string str() const;
  friend bool operator==(const DimensionMapping&, const DimensionMapping&) = default;
};

// x->HABITAT->INTR[top(axis)]:intransitive
struct ArityRule {
  std::vector<std::string> path;
  std::optional<Term> selector;
  Arity arity = Arity::kIntransitive;
  std::string str() const;
  friend bool operator==(const ArityRule&, const ArityRule&) = default;
};

struct FunctionOrientation {
  FunctionSpace space = FunctionSpace::kWorld;
  SignedAxis axis;
  std::optional<ArityRule> arity;
  friend bool operator==(const FunctionOrientation&, const FunctionOrientation&) = default;
};

struct FunctionVoxeme {
  Lex lex;
  TypedVar arg;
  // Path into the argument, rooted at its variable: {"x", "HEAD"}. A bare
  // {"x"} means the whole voxeme.
  std::vector<std::string> referent;
  DimensionMapping mapping;
  FunctionOrientation orientation;
  friend bool operator==(const FunctionVoxeme&, const FunctionVoxeme&) = default;
};

using VoxemeBody = std::variant<ObjectVoxeme, ProgramVoxeme, AttributeVoxeme,
                                RelationVoxeme, FunctionVoxeme>;

// One voxicon entry. `label` is the entry's display name (the bold header of
// the attribute-value matrix); it usually equals the predicate.
struct Voxeme {
  std::string label;
  VoxemeBody body;

  VoxemeKind kind() const { return static_cast<VoxemeKind>(body.index()); }
  const Lex& lex() const;
  const std::string& pred() const { return lex().pred; }

  const ObjectVoxeme* object() const { return std::get_if<ObjectVoxeme>(&body); }
  const ProgramVoxeme* program() const { return std::get_if<ProgramVoxeme>(&body); }
  const AttributeVoxeme* attribute() const { return std::get_if<AttributeVoxeme>(&body); }
  const RelationVoxeme* relation() const { return std::get_if<RelationVoxeme>(&body); }
  const FunctionVoxeme* function() const { return std::get_if<FunctionVoxeme>(&body); }

  friend bool operator==(const Voxeme&, const Voxeme&) = default;
};

// A parallelepiped with at least two reflection planes is a rectangular
// prism; every other head is returned unchanged. Idempotent.
HeadShape canonicalize_head(HeadShape head, const std::vector<Plane>& reflect_sym);

struct SymmetrySets {
  std::vector<Axis> rotational;
  std::vector<Plane> reflection;
  friend bool operator==(const SymmetrySets&, const SymmetrySets&) = default;
};

// Maximal world-relative symmetry a head primitive supports in its canonical
// upright orientation. Shape families whose symmetry depends on proportions
// report their most symmetric member (a sphere for ellipsoid), except sheet,
// which is the thin-Y, unequal-X/Z case.
SymmetrySets primitive_symmetry(HeadShape head);

}  // namespace voxml

#endif  // VOXML_MODEL_HPP_
