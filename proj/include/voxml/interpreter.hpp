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

// Grounds logical forms against a voxicon and a scene, turns program voxemes
// into small state machines and runs them tick by tick.

#ifndef VOXML_INTERPRETER_HPP_
#define VOXML_INTERPRETER_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "voxml/scene.hpp"
#include "voxml/spatial.hpp"
#include "voxml/term.hpp"
#include "voxml/trace.hpp"
#include "voxml/voxicon.hpp"

namespace voxml {

struct InterpreterParams {
  double speed = 0.1;       // world units per move tick
  long max_ticks = 10000;
  double at_eps = 1e-3;     // tolerance of the at(y, z) guard
  SpatialParams spatial;
};

// Predicates the interpreter executes or evaluates without a voxicon entry.
const std::set<std::string>& primitive_symbols();

struct EvalStep {
  Term input;
  Term output;
  std::string str() const { return input.str() + " => " + output.str(); }
};

struct Grounding {
  Term term;   // fully grounded: instance ids and coordinate literals
  Term event;  // same, with placement points replaced by their ground object
  std::vector<EvalStep> log;  // innermost-out, left to right
};

// Throws GroundingError on unknown atoms or predicates, ambiguous atoms and
// arity mismatches.
Grounding ground(const Term& lf, const Voxicon& voxicon, const SceneState& scene,
                 const SpatialParams& params = {});

using Value = std::variant<std::string, Vec3>;  // instance id or location

struct Binding {
  std::map<std::string, Value> values;
  void bind(const std::string& var, Value v);  // throws on a second binding
  const Value* find(const std::string& var) const;
};

// Positional binding of the grounded arguments of `grounded` to the
// program's declared args. If exactly one argument is missing and the
// program declares an agent arg, the scene's single "agent" instance fills
// it. Types: agent/physobj/3D/2D/1D need an instance, location/region a
// point (an instance is taken at its position).
Binding bind_arguments(const ProgramVoxeme& p, const Term& grounded, const SceneState& scene);

class ProgramInstance {
 public:
  const std::vector<Term>& body() const { return body_; }
  bool finished() const { return pc_ >= body_.size(); }
  bool stuck() const { return stuck_; }
  std::size_t pc() const { return pc_; }

 private:
  friend ProgramInstance operationalize(const ProgramVoxeme&, const Binding&);
  friend std::pair<SceneState, std::optional<Term>> step(const SceneState&, ProgramInstance&,
                                                         const InterpreterParams&);
  std::vector<Term> body_;          // substituted body statements
  std::optional<Vec3> target_;      // first bound location, if any
  std::size_t pc_ = 0;
  bool stuck_ = false;
};

// Substitutes the binding into the body. Throws GroundingError for an
// unbound argument or a body predicate outside the primitive set.
ProgramInstance operationalize(const ProgramVoxeme& p, const Binding& b);

// Advances the machine by one action. Guards that end a loop or pass a
// statement consume no tick; the returned state has tick + 1 when an action
// was performed. Returns no action once the machine is finished or stuck.
std::pair<SceneState, std::optional<Term>> step(const SceneState& scene, ProgramInstance& m,
                                                const InterpreterParams& params);

// Evaluates a ground guard: RCC-8 names, hold, at.
bool eval_guard(const Term& guard, const SceneState& scene, const InterpreterParams& params);

// Adds the results of every affordance whose event pattern matches `event`
// and whose habitat condition holds on its owner in `scene`.
SceneState fire_affordances(const SceneState& scene, const Term& event, const Voxicon& voxicon,
                            const SpatialParams& params = {});

Trace run(const Term& lf, const Voxicon& voxicon, const SceneState& scene,
          const InterpreterParams& params = {});

}  // namespace voxml

#endif  // VOXML_INTERPRETER_HPP_
