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

#include "voxml/avm.hpp"

#include <cctype>

#include "voxml/term.hpp"

namespace voxml::avm {

namespace {

struct Line {
  std::string_view text;  // trimmed
  int number;
  int column;  // column of the first non-blank character
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    std::size_t b = 0;
    while (b < raw.size() && is_blank(raw[b])) ++b;
    std::size_t e = raw.size();
    while (e > b && is_blank(raw[e - 1])) --e;
    out.push_back({raw.substr(b, e - b), number, static_cast<int>(b) + 1});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size() && is_blank(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && is_blank(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// Leading identifier of `s`, or empty.
std::string_view leading_identifier(std::string_view s) {
  std::size_t n = 0;
  while (n < s.size() &&
         (std::isalnum(static_cast<unsigned char>(s[n])) || s[n] == '_')) {
    ++n;
  }
  std::string_view id = s.substr(0, n);
  return is_identifier(id) ? id : std::string_view{};
}

struct Frame {
  std::vector<Node>* children;
  SourcePos opened;
};

}  // namespace

std::vector<Entry> read(std::string_view text) {
  std::vector<Entry> entries;
  std::vector<Frame> stack;

  for (const Line& line : split_lines(text)) {
    if (line.text.empty() || line.text.front() == '#') continue;
    SourcePos pos{line.number, line.column};

    if (stack.empty()) {
      // "<kind> <label> {"
      if (line.text == "}") throw syntax_error(pos, "unbalanced '}' outside any entry");
      std::string_view rest = line.text;
      std::string_view kind = leading_identifier(rest);
      if (kind.empty()) {
        throw syntax_error(pos, "expected entry header '<kind> <label> {'");
      }
      rest = rest.substr(kind.size());
      std::size_t skipped = rest.size();
      rest = trim(rest);
      skipped -= rest.size();
      std::string_view label = leading_identifier(rest);
      SourcePos label_pos{line.number,
                          line.column + static_cast<int>(kind.size() + skipped)};
      if (label.empty()) {
        throw syntax_error(label_pos, "expected entry label after '" + std::string(kind) + "'");
      }
      rest = trim(rest.substr(label.size()));
      if (rest != "{") {
        throw syntax_error(label_pos, "expected '{' after entry label");
      }
      Entry e;
      e.kind = std::string(kind);
      e.kind_pos = pos;
      e.label = std::string(label);
      e.label_pos = label_pos;
      entries.push_back(std::move(e));
      stack.push_back({&entries.back().fields, pos});
      continue;
    }

    if (line.text == "}") {
      stack.pop_back();
      continue;
    }

    std::string_view key = leading_identifier(line.text);
    if (key.empty()) {
      throw syntax_error(pos, "expected 'KEY = value', 'KEY {' or '}'");
    }
    std::string_view rest = line.text.substr(key.size());
    std::size_t offset = key.size();
    while (!rest.empty() && is_blank(rest.front())) {
      rest.remove_prefix(1);
      ++offset;
    }

    Node node;
    node.key = std::string(key);
    node.key_pos = pos;
    if (rest == "{") {
      node.is_block = true;
      stack.back().children->push_back(std::move(node));
      stack.push_back({&stack.back().children->back().children, pos});
      continue;
    }
    if (rest == "{ }" || rest == "{}") {
      // An empty block written on one line reads the same as "KEY = {}".
      node.value = "{}";
      node.value_pos = {line.number, line.column + static_cast<int>(offset)};
      stack.back().children->push_back(std::move(node));
      continue;
    }
    if (rest.empty() || rest.front() != '=') {
      throw syntax_error({line.number, line.column + static_cast<int>(offset)},
                         "expected '=' or '{' after key " + std::string(key));
    }
    rest.remove_prefix(1);
    ++offset;
    while (!rest.empty() && is_blank(rest.front())) {
      rest.remove_prefix(1);
      ++offset;
    }
    if (rest.empty()) {
      throw syntax_error({line.number, line.column + static_cast<int>(offset)},
                         "missing value for key " + std::string(key));
    }
    node.value = std::string(rest);
    node.value_pos = {line.number, line.column + static_cast<int>(offset)};
    stack.back().children->push_back(std::move(node));
  }

  if (!stack.empty()) {
    throw syntax_error(stack.back().opened, "unclosed block: '{' is never closed");
  }
  return entries;
}

}  // namespace voxml::avm
