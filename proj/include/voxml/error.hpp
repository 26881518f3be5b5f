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

#ifndef VOXML_ERROR_HPP_
#define VOXML_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace voxml {

// 1-based line and column; 0 means "unknown".
struct SourcePos {
  int line = 0;
  int column = 0;

  std::string str() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

// Syntax errors break the document structure (unbalanced braces, bad
// tokens). Schema errors are structurally fine text that does not describe a
// voxeme (unknown field, unknown enum value, missing field).
enum class ParseErrorKind { kSyntax, kSchema };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, SourcePos pos, const std::string& message)
      : std::runtime_error(pos.str() + ": " + message),
        kind_(kind),
        pos_(pos),
        message_(message) {}

  ParseErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  SourcePos pos_;
  std::string message_;
};

inline ParseError syntax_error(SourcePos pos, const std::string& msg) {
  return ParseError(ParseErrorKind::kSyntax, pos, msg);
}

inline ParseError schema_error(SourcePos pos, const std::string& msg) {
  return ParseError(ParseErrorKind::kSchema, pos, msg);
}

// Raised by parse_voxicon when one or more entries fail; every failure is
// kept along with the index of the entry it came from.
class VoxiconParseError : public std::runtime_error {
 public:
  struct Entry {
    int index;  // 0-based entry index, -1 for file-level errors
    ParseError error;
  };

  explicit VoxiconParseError(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  // True when every failure is a schema failure (the file is well formed).
  bool schema_only() const;

 private:
  std::vector<Entry> entries_;
};

// Grounding a logical form against a voxicon and scene failed.
class GroundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Spatial evaluation could not produce a value (degenerate axis, unsatisfied
// support habitat, empty input).
class SpatialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace voxml

#endif  // VOXML_ERROR_HPP_
