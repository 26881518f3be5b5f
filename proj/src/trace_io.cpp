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
#include <string>

#include "voxml/spatial.hpp"
#include "voxml/trace.hpp"

namespace voxml {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kCompleted:
      return "completed";
    case Outcome::kTickLimit:
      return "tick_limit";
    case Outcome::kStuck:
      return "stuck";
  }
  return "?";
}

std::size_t Trace::count(std::string_view pred) const {
  return static_cast<std::size_t>(std::count_if(
      transitions.begin(), transitions.end(),
      [&](const Transition& t) { return t.action.name() == pred; }));
}

namespace {

void quoted(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

void vec(std::string& out, Vec3 v) {
  out += '[' + format_real(v.x) + ',' + format_real(v.y) + ',' + format_real(v.z) + ']';
}

template <typename Range>
void strings(std::string& out, const Range& terms) {
  out += '[';
  bool first = true;
  for (const Term& t : terms) {
    if (!first) out += ',';
    first = false;
    quoted(out, t.str());
  }
  out += ']';
}

}  // namespace

std::string serialize_trace(const Trace& trace, double eps) {
  std::string out;
  for (const auto& t : trace.transitions) {
    out += "{\"tick\":" + std::to_string(t.post.tick) + ",\"action\":";
    quoted(out, t.action.str());
    out += ",\"objects\":[";
    bool first = true;
    for (const auto& [id, obj] : t.post.objects) {
      if (!first) out += ',';
      first = false;
      out += "{\"id\":";
      quoted(out, id);
      out += ",\"position\":";
      vec(out, obj.position);
      out += ",\"rotation\":";
      vec(out, obj.rotation);
      out += '}';
    }
    out += "],\"facts\":";
    strings(out, t.post.facts);  // std::set: already in term order
    out += ",\"relations\":";
    strings(out, relation_facts(t.post, eps));
    out += "}\n";
  }
  return out;
}

}  // namespace voxml
