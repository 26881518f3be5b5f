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

#include "voxml/voxicon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "voxml/io.hpp"

namespace voxml {

void Voxicon::insert(Voxeme v) {
  Key key{v.pred(), v.kind()};
  if (index_.count(key)) {
    throw std::invalid_argument("duplicate entry " + std::string(to_string(key.second)) + " " +
                                key.first);
  }
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back(std::move(v));
}

bool Voxicon::remove(std::string_view pred, VoxemeKind kind) {
  auto it = index_.find(Key{std::string(pred), kind});
  if (it == index_.end()) return false;
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(it->second));
  index_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_.emplace(Key{entries_[i].pred(), entries_[i].kind()}, i);
  }
  return true;
}

const Voxeme* Voxicon::lookup(std::string_view pred, VoxemeKind kind) const {
  auto it = index_.find(Key{std::string(pred), kind});
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const Voxeme* Voxicon::lookup_any(std::string_view pred) const {
  for (VoxemeKind k : {VoxemeKind::kObject, VoxemeKind::kProgram, VoxemeKind::kRelation,
                       VoxemeKind::kFunction, VoxemeKind::kAttribute}) {
    if (const Voxeme* v = lookup(pred, k)) return v;
  }
  return nullptr;
}

void Voxicon::merge(const Voxicon& other) {
  for (const auto& v : other.entries()) insert(v);
}

Voxicon parse_voxicon(std::string_view text) {
  std::vector<SourcePos> positions;
  auto entries = parse_voxemes(text, &positions);
  Voxicon voxicon;
  std::vector<VoxiconParseError::Entry> failures;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (voxicon.lookup(entries[i].pred(), entries[i].kind())) {
      failures.push_back({static_cast<int>(i),
                          schema_error(positions[i], "duplicate entry " +
                                                         std::string(to_string(entries[i].kind())) +
                                                         " " + entries[i].pred())});
      continue;
    }
    voxicon.insert(std::move(entries[i]));
  }
  if (!failures.empty()) throw VoxiconParseError(std::move(failures));
  return voxicon;
}

Voxicon load_voxicon(const std::string& path) { return parse_voxicon(read_file(path)); }

const std::set<std::string>& known_type_tags() {
  static const std::set<std::string> tags{"physobj", "agent", "location", "region",
                                          "3D",      "2D",    "1D"};
  return tags;
}

std::vector<Diagnostic> lint(const Voxicon& voxicon, const std::set<std::string>& known_symbols) {
  std::vector<Diagnostic> out;
  auto defined = [&](const std::string& pred) {
    return known_symbols.count(pred) || voxicon.lookup_any(pred) != nullptr;
  };
  auto check_type = [&](const std::string& pred, const std::string& path, const TypedVar& tv) {
    if (!known_type_tags().count(tv.type)) {
      out.push_back({Severity::kWarning, pred, path, "unknown argument type tag " + tv.type});
    }
  };

  for (const auto& v : voxicon.entries()) {
    const std::string& pred = v.pred();
    if (const auto* o = v.object()) {
      std::set<std::string> components;
      for (const auto& c : o->type.components) components.insert(c.name);
      for (const auto* groups : {&o->habitat.intrinsic, &o->habitat.extrinsic}) {
        for (const auto& g : *groups) {
          for (const auto& e : g.entries) {
            for (const auto& c : e.constraints) {
              const auto* p = std::get_if<PredicateConstraint>(&c);
              if (!p) continue;
              for (const auto& sym : symbols_of(p->term)) {
                if (!components.count(sym)) {
                  out.push_back({Severity::kError, pred,
                                 "HABITAT.H" + std::to_string(g.index) + "." + e.label,
                                 "undeclared component " + sym});
                }
              }
            }
          }
        }
      }
      for (const auto& a : o->afford_str) {
        if (a.event.is_apply() && !voxicon.lookup(a.event.name(), VoxemeKind::kProgram) &&
            !known_symbols.count(a.event.name())) {
          out.push_back({Severity::kWarning, pred,
                         "AFFORD_STR.A" + std::to_string(a.index) + ".EVENT",
                         "unknown event predicate " + a.event.name()});
        }
      }
    } else if (const auto* p = v.program()) {
      for (std::size_t i = 0; i < p->body.size(); ++i) {
        for (const auto& name : predicates_of(p->body[i])) {
          if (!defined(name)) {
            out.push_back({Severity::kWarning, pred, "TYPE.BODY.E" + std::to_string(i + 1),
                           "unknown body primitive " + name});
          }
        }
      }
      for (const auto& a : p->args) check_type(pred, "TYPE.ARGS", a);
    } else if (const auto* a = v.attribute()) {
      check_type(pred, "TYPE.ARG", a->arg);
    } else if (const auto* r = v.relation()) {
      for (const auto& a : r->args) check_type(pred, "TYPE.ARGS", a);
    } else if (const auto* f = v.function()) {
      check_type(pred, "TYPE.ARG", f->arg);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int VoxiconStats::count(VoxemeKind k) const {
  auto it = by_kind.find(k);
  return it == by_kind.end() ? 0 : it->second;
}

std::string VoxiconStats::str() const {
  std::ostringstream os;
  for (VoxemeKind k : {VoxemeKind::kObject, VoxemeKind::kProgram, VoxemeKind::kAttribute,
                       VoxemeKind::kRelation, VoxemeKind::kFunction}) {
    os << to_string(k) << ": " << count(k) << "\n";
  }
  for (const auto& [h, n] : by_head) os << "head " << to_string(h) << ": " << n << "\n";
  for (const auto& [h, n] : by_program_head) os << "program head " << to_string(h) << ": " << n << "\n";
  for (const auto& [s, n] : by_scale) os << "scale " << to_string(s) << ": " << n << "\n";
  return os.str();
}

VoxiconStats stats(const Voxicon& voxicon) {
  VoxiconStats s;
  for (const auto& v : voxicon.entries()) {
    ++s.by_kind[v.kind()];
    if (const auto* o = v.object()) ++s.by_head[o->type.head.shape];
    if (const auto* p = v.program()) ++s.by_program_head[p->head];
    if (const auto* a = v.attribute()) ++s.by_scale[a->scale];
  }
  return s;
}

}  // namespace voxml
