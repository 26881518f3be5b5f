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

#ifndef VOXML_IO_HPP_
#define VOXML_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "voxml/model.hpp"

namespace voxml {

// Parses exactly one voxeme entry. Throws ParseError: kSyntax for layout
// problems (including an empty document), kSchema for unknown fields,
// unknown enum values and missing required fields.
Voxeme parse_voxeme(std::string_view text);

// Canonical text: fixed field order, two-space indentation, trailing
// newline. parse_voxeme(serialize_voxeme(v)) == v.
std::string serialize_voxeme(const Voxeme& v);

// Parses any number of entries, collecting every per-entry failure before
// throwing VoxiconParseError. Syntax errors abort immediately (entry index
// -1) because the entry boundaries cannot be trusted.
// When `positions` is given it receives the header position of each entry.
std::vector<Voxeme> parse_voxemes(std::string_view text,
                                  std::vector<SourcePos>* positions = nullptr);

// Concatenation of serialize_voxeme outputs separated by blank lines.
std::string serialize_voxemes(const std::vector<Voxeme>& entries);

// Reads a whole file into a string; throws std::runtime_error when the file
// cannot be opened.
std::string read_file(const std::string& path);

}  // namespace voxml

#endif  // VOXML_IO_HPP_
