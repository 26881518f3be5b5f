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

// Labeled transition system traces and their line-oriented serialization.

#ifndef VOXML_TRACE_HPP_
#define VOXML_TRACE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "voxml/scene.hpp"
#include "voxml/term.hpp"

namespace voxml {

struct Transition {
  SceneState pre;
  Term action;  // ground primitive, e.g. grasp(agent1, apple1)
  SceneState post;
};

enum class Outcome { kCompleted, kTickLimit, kStuck };
std::string_view to_string(Outcome o);

struct Trace {
  SceneState initial;
  std::vector<Transition> transitions;
  Outcome outcome = Outcome::kCompleted;
  Term event;  // collapsed event term used for affordance firing

  const SceneState& final_state() const {
    return transitions.empty() ? initial : transitions.back().post;
  }
  // Number of transitions whose action has predicate `pred`.
  std::size_t count(std::string_view pred) const;
};

// One JSON object per line and per transition:
//
//   {"tick":1,"action":"grasp(agent1, apple1)","objects":[{"id":"agent1",
//    "position":[..],"rotation":[..]}, ...],"facts":[...],"relations":[...]}
//
// Objects are in id order, facts in term order, relations are the non-DC
// RCC-8 pairs of the post-state decided at `eps`. Reals use format_real.
std::string serialize_trace(const Trace& trace, double eps = 1e-6);

}  // namespace voxml

#endif  // VOXML_TRACE_HPP_
