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

#ifndef VOXML_SCENE_HPP_
#define VOXML_SCENE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "voxml/geometry.hpp"
#include "voxml/term.hpp"

namespace voxml {

struct SceneObject {
  std::string id;
  std::string pred;   // voxeme predicate this instance realizes
  Vec3 position;      // box centre
  Vec3 rotation;      // Euler degrees, extrinsic Z then X then Y
  Vec3 extents{1.0, 1.0, 1.0};  // full box dimensions before rotation
  std::optional<std::string> attached_to;

  Box world_box() const { return rotated_box(position, extents, rotation); }
  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

// One state of the transition system: placed objects, ground facts such as
// hold(agent1, apple1), and the tick counter.
struct SceneState {
  std::map<std::string, SceneObject> objects;
  std::set<Term> facts;
  long tick = 0;

  const SceneObject* find(std::string_view id) const;
  SceneObject* find(std::string_view id);
  bool has_fact(const Term& fact) const { return facts.count(fact) > 0; }

  // Instances realizing voxeme `pred`, in id order.
  std::vector<const SceneObject*> instances_of(std::string_view pred) const;

  // Adds hold(holder, held) and attaches `held` to `holder`. Returns false
  // (and changes nothing) if the attachment would create a cycle or `held`
  // already has a holder.
  bool attach(const std::string& holder, const std::string& held);
  // Removes hold(holder, held) and the matching attachment.
  void detach(const std::string& holder, const std::string& held);

  // Translates `id` and everything transitively attached to it.
  void translate(const std::string& id, Vec3 delta);

  // Checks ids are unique, extents positive and finite, facts reference
  // existing instances, and the attachment graph is acyclic. Returns an
  // empty string when the state is well formed.
  std::string check() const;

  friend bool operator==(const SceneState&, const SceneState&) = default;
};

// .scene text format, one record per line:
//
//   instance apple1 apple pos <0.4, 1.04, 0.2> rot <0, 0, 0> ext <0.08, 0.08, 0.08>
//   fact clear(chair1, seat)
//
// Lines starting with '#' are comments. Throws ParseError (kSyntax) with the
// offending line and column.
SceneState parse_scene(std::string_view text);
SceneState load_scene(const std::string& path);
std::string serialize_scene(const SceneState& scene);

}  // namespace voxml

#endif  // VOXML_SCENE_HPP_
