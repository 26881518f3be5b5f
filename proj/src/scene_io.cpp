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

#include <cctype>
#include <sstream>

#include "voxml/io.hpp"
#include "voxml/scene.hpp"

namespace voxml {

const SceneObject* SceneState::find(std::string_view id) const {
  auto it = objects.find(std::string(id));
  return it == objects.end() ? nullptr : &it->second;
}

SceneObject* SceneState::find(std::string_view id) {
  auto it = objects.find(std::string(id));
  return it == objects.end() ? nullptr : &it->second;
}

std::vector<const SceneObject*> SceneState::instances_of(std::string_view pred) const {
  std::vector<const SceneObject*> out;
  for (const auto& [id, obj] : objects) {
    if (obj.pred == pred) out.push_back(&obj);
  }
  return out;
}

bool SceneState::attach(const std::string& holder, const std::string& held) {
  SceneObject* h = find(held);
  if (!h || !find(holder) || holder == held || h->attached_to) return false;
  for (const SceneObject* cur = find(holder); cur && cur->attached_to;
       cur = find(*cur->attached_to)) {
    if (*cur->attached_to == held) return false;
  }
  h->attached_to = holder;
  facts.insert(Term::apply("hold", {Term::symbol(holder), Term::symbol(held)}));
  return true;
}

void SceneState::detach(const std::string& holder, const std::string& held) {
  facts.erase(Term::apply("hold", {Term::symbol(holder), Term::symbol(held)}));
  if (SceneObject* h = find(held); h && h->attached_to == holder) h->attached_to.reset();
}

void SceneState::translate(const std::string& id, Vec3 delta) {
  std::vector<std::string> moving{id};
  for (std::size_t i = 0; i < moving.size(); ++i) {
    for (const auto& [other_id, obj] : objects) {
      if (obj.attached_to == moving[i]) moving.push_back(other_id);
    }
  }
  for (const auto& m : moving) {
    SceneObject& obj = objects.at(m);
    obj.position = obj.position + delta;
  }
}

std::string SceneState::check() const {
  for (const auto& [id, obj] : objects) {
    if (id != obj.id) return "object key " + id + " does not match its id " + obj.id;
    for (int i = 0; i < 3; ++i) {
      if (!(obj.extents[i] > 0.0) || !std::isfinite(obj.extents[i])) {
        return "object " + id + " has a non-positive extent";
      }
    }
    if (!obj.position.finite() || !obj.rotation.finite()) {
      return "object " + id + " has a non-finite pose";
    }
    std::set<std::string> seen{id};
    for (const SceneObject* cur = &obj; cur->attached_to;) {
      if (!seen.insert(*cur->attached_to).second) return "attachment cycle through " + id;
      cur = find(*cur->attached_to);
      if (!cur) return "object " + id + " is attached to a missing instance";
    }
  }
  for (const auto& f : facts) {
    if (!f.is_apply() || f.arity() == 0) continue;
    // Only the first argument must be an instance; later ones may name
    // components (clear(chair1, seat)).
    const Term& subject = f.args().front();
    if (subject.is_symbol() && !find(subject.name())) {
      return "fact " + f.str() + " references unknown instance " + subject.name();
    }
  }
  return {};
}

namespace {

struct Cursor {
  std::string_view line;
  int number;
  std::size_t pos = 0;

  SourcePos here() const { return {number, static_cast<int>(pos) + 1}; }
  void skip_ws() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= line.size();
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() && (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_')) {
      ++pos;
    }
    return std::string(line.substr(start, pos - start));
  }
  Vec3 vec() {
    skip_ws();
    SourcePos at = here();
    if (pos >= line.size() || line[pos] != '<') throw syntax_error(at, "expected vector <x, y, z>");
    std::size_t close = line.find('>', pos);
    if (close == std::string_view::npos) throw syntax_error(at, "unterminated vector literal");
    Term t = parse_term_at(line.substr(pos, close - pos + 1), at);
    pos = close + 1;
    return t.vector_value();
  }
};

}  // namespace

SceneState parse_scene(std::string_view text) {
  SceneState scene;
  std::vector<std::pair<Term, SourcePos>> facts;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    Cursor c{text.substr(start, end - start), number};
    start = end + 1;
    if (c.done() || c.line[c.pos] == '#') {
      if (end == text.size()) break;
      continue;
    }

    SourcePos record_pos = c.here();
    std::string kind = c.word();
    if (kind == "instance") {
      SceneObject obj;
      SourcePos id_pos = (c.skip_ws(), c.here());
      obj.id = c.word();
      if (!is_identifier(obj.id)) throw syntax_error(id_pos, "expected instance id");
      SourcePos pred_pos = (c.skip_ws(), c.here());
      obj.pred = c.word();
      if (!is_identifier(obj.pred)) throw syntax_error(pred_pos, "expected voxeme predicate");
      bool has_pos = false;
      bool has_ext = false;
      while (!c.done()) {
        SourcePos key_pos = c.here();
        std::string key = c.word();
        if (key == "pos") {
          obj.position = c.vec();
          has_pos = true;
        } else if (key == "rot") {
          obj.rotation = c.vec();
        } else if (key == "ext") {
          SourcePos at = (c.skip_ws(), c.here());
          obj.extents = c.vec();
          for (int i = 0; i < 3; ++i) {
            if (!(obj.extents[i] > 0.0)) throw syntax_error(at, "extents must be strictly positive");
          }
          has_ext = true;
        } else {
          throw syntax_error(key_pos, "expected pos, rot or ext");
        }
      }
      if (!has_pos) throw syntax_error(record_pos, "instance " + obj.id + " lacks pos");
      if (!has_ext) throw syntax_error(record_pos, "instance " + obj.id + " lacks ext");
      if (scene.objects.count(obj.id)) {
        throw syntax_error(id_pos, "duplicate instance id " + obj.id);
      }
      std::string id = obj.id;
      scene.objects.emplace(id, std::move(obj));
    } else if (kind == "fact") {
      c.skip_ws();
      SourcePos at = c.here();
      Term t = parse_term_at(c.line.substr(c.pos), at);
      if (!t.is_apply()) throw syntax_error(at, "a fact must be a predicate application");
      facts.emplace_back(std::move(t), at);
    } else {
      throw syntax_error(record_pos, "expected 'instance' or 'fact' record");
    }
    if (end == text.size()) break;
  }

  for (auto& [fact, at] : facts) {
    if (fact.is_call("hold", 2) && fact.args()[0].is_symbol() && fact.args()[1].is_symbol()) {
      if (!scene.attach(fact.args()[0].name(), fact.args()[1].name())) {
        throw syntax_error(at, "cannot attach: " + fact.str());
      }
      continue;
    }
    const Term& subject = fact.args().front();
    if (subject.is_symbol() && !scene.find(subject.name())) {
      throw syntax_error(at, "fact references unknown instance " + subject.name());
    }
    scene.facts.insert(std::move(fact));
  }
  return scene;
}

SceneState load_scene(const std::string& path) { return parse_scene(read_file(path)); }

std::string serialize_scene(const SceneState& scene) {
  std::ostringstream os;
  for (const auto& [id, obj] : scene.objects) {
    os << "instance " << id << " " << obj.pred << " pos " << format_vec(obj.position) << " rot "
       << format_vec(obj.rotation) << " ext " << format_vec(obj.extents) << "\n";
  }
  for (const auto& f : scene.facts) os << "fact " << f.str() << "\n";
  return os.str();
}

}  // namespace voxml
