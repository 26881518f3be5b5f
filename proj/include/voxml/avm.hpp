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

// Line-oriented reader for the attribute-value-matrix text layout used by
// .vox files:
//
//   object plate {
//     LEX {
//       PRED = plate
//     }
//     EMBODIMENT {
//       SCALE = <agent
//     }
//   }
//
// The reader only knows about blocks and "KEY = value" leaves; the meaning
// of each key is decided by the voxeme decoder in io.cpp.

#ifndef VOXML_AVM_HPP_
#define VOXML_AVM_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "voxml/error.hpp"

namespace voxml::avm {

struct Node {
  std::string key;
  SourcePos key_pos;
  bool is_block = false;
  std::string value;  // leaf text after '=', trimmed
  SourcePos value_pos;
  std::vector<Node> children;
};

struct Entry {
  std::string kind;
  SourcePos kind_pos;
  std::string label;
  SourcePos label_pos;
  std::vector<Node> fields;
};

// Throws a syntax ParseError on malformed layout (unclosed block, stray '}',
// a line that is neither a header, a leaf, nor a closing brace).
std::vector<Entry> read(std::string_view text);

}  // namespace voxml::avm

#endif  // VOXML_AVM_HPP_
