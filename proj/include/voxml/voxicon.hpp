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

#ifndef VOXML_VOXICON_HPP_
#define VOXML_VOXICON_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "voxml/model.hpp"
#include "voxml/validate.hpp"

namespace voxml {

// A library of voxemes keyed by (pred, kind). The same lexeme may name an
// object and a program at once.
class Voxicon {
 public:
  using Key = std::pair<std::string, VoxemeKind>;

  // Throws std::invalid_argument on a duplicate key.
  void insert(Voxeme v);
  bool remove(std::string_view pred, VoxemeKind kind);

  const Voxeme* lookup(std::string_view pred, VoxemeKind kind) const;
  // Any entry with this predicate, preferring objects, then programs.
  const Voxeme* lookup_any(std::string_view pred) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Entries in insertion order.
  const std::vector<Voxeme>& entries() const { return entries_; }

  // Appends every entry of `other`; throws std::invalid_argument on a clash.
  void merge(const Voxicon& other);

 private:
  std::vector<Voxeme> entries_;
  std::map<Key, std::size_t> index_;
};

// Parses a .vox document. Duplicate (pred, kind) entries are reported as
// schema errors at the duplicate's header; every failure is collected into
// one VoxiconParseError.
Voxicon parse_voxicon(std::string_view text);

// Reads and parses a .vox file.
Voxicon load_voxicon(const std::string& path);

// Voxicon-wide cross checks. `known_symbols` lists predicates defined
// outside the voxicon (the interpreter's primitives). Output is sorted, so it
// does not depend on entry order.
std::vector<Diagnostic> lint(const Voxicon& voxicon, const std::set<std::string>& known_symbols);

// Argument type tags the linter accepts without comment.
const std::set<std::string>& known_type_tags();

struct VoxiconStats {
  std::map<VoxemeKind, int> by_kind;
  std::map<HeadShape, int> by_head;
  std::map<ProgramHead, int> by_program_head;
  std::map<ScaleKind, int> by_scale;

  int count(VoxemeKind k) const;
  std::string str() const;
};

VoxiconStats stats(const Voxicon& voxicon);

}  // namespace voxml

#endif  // VOXML_VOXICON_HPP_
