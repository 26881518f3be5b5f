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

#include "voxml/term.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace voxml {

std::string format_real(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  std::string s(buf);
  if (s == "-0") return "0";
  return s;
}

std::string format_vec(Vec3 v) {
  return "<" + format_real(v.x) + ", " + format_real(v.y) + ", " +
         format_real(v.z) + ">";
}

Term Term::symbol(std::string name) {
  Term t;
  t.kind_ = Kind::kSymbol;
  t.name_ = std::move(name);
  return t;
}

Term Term::number(double value) {
  Term t;
  t.kind_ = Kind::kNumber;
  t.number_ = value;
  return t;
}

Term Term::vector(Vec3 value) {
  Term t;
  t.kind_ = Kind::kVector;
  t.vec_ = value;
  return t;
}

Term Term::apply(std::string pred, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::kApply;
  t.name_ = std::move(pred);
  t.args_ = std::move(args);
  return t;
}

int Term::depth() const {
  int d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

std::string Term::str() const {
  switch (kind_) {
    case Kind::kSymbol:
      return name_;
    case Kind::kNumber:
      return format_real(number_);
    case Kind::kVector:
      return format_vec(vec_);
    case Kind::kApply: {
      std::string s = name_ + "(";
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) s += ", ";
        s += args_[i].str();
      }
      return s + ")";
    }
  }
  return {};
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Term::Kind::kSymbol:
      return a.name_ == b.name_;
    case Term::Kind::kNumber:
      return a.number_ == b.number_;
    case Term::Kind::kVector:
      return a.vec_ == b.vec_;
    case Term::Kind::kApply:
      return a.name_ == b.name_ && a.args_ == b.args_;
  }
  return false;
}

namespace {

std::strong_ordering compare_double(double a, double b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case Term::Kind::kSymbol:
      return a.name_ <=> b.name_;
    case Term::Kind::kNumber:
      return compare_double(a.number_, b.number_);
    case Term::Kind::kVector:
      for (int i = 0; i < 3; ++i) {
        if (auto c = compare_double(a.vec_[i], b.vec_[i]); c != 0) return c;
      }
      return std::strong_ordering::equal;
    case Term::Kind::kApply:
      if (auto c = a.name_ <=> b.name_; c != 0) return c;
      return std::lexicographical_compare_three_way(
          a.args_.begin(), a.args_.end(), b.args_.begin(), b.args_.end());
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << t.str();
}

namespace {

void collect_symbols(const Term& t, std::vector<std::string>& out) {
  if (t.is_symbol()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
      out.push_back(t.name());
    }
    return;
  }
  for (const auto& a : t.args()) collect_symbols(a, out);
}

void collect_predicates(const Term& t, std::set<std::string>& out) {
  if (!t.is_apply()) return;
  out.insert(t.name());
  for (const auto& a : t.args()) collect_predicates(a, out);
}

}  // namespace

std::vector<std::string> symbols_of(const Term& t) {
  std::vector<std::string> out;
  collect_symbols(t, out);
  return out;
}

std::set<std::string> predicates_of(const Term& t) {
  std::set<std::string> out;
  collect_predicates(t, out);
  return out;
}

Term substitute(const Term& t, const std::map<std::string, Term>& subst) {
  if (t.is_symbol()) {
    auto it = subst.find(t.name());
    return it == subst.end() ? t : it->second;
  }
  if (!t.is_apply()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(substitute(a, subst));
  return Term::apply(t.name(), std::move(args));
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto c0 = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(c0) || c0 == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_';
  });
}

namespace {

// Recursive-descent reader for the logical-form grammar:
//   term   := vector | number | ident [ '(' term { ',' term } ')' ]
//   vector := '<' number ',' number ',' number '>'
class TermReader {
 public:
  TermReader(std::string_view text, SourcePos origin)
      : text_(text), origin_(origin) {}

  Term read_all() {
    skip_ws();
    if (at_end()) throw error(pos_, "empty logical form");
    Term t = read_term();
    skip_ws();
    if (!at_end()) {
      if (peek() == ')') throw error(pos_, "unbalanced parenthesis: unexpected ')'");
      throw error(pos_, "trailing garbage after term");
    }
    return t;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  SourcePos position(std::size_t offset) const {
    int line = origin_.line == 0 ? 1 : origin_.line;
    int col = origin_.column == 0 ? 1 : origin_.column;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  ParseError error(std::size_t offset, const std::string& msg) const {
    return syntax_error(position(offset), msg);
  }

  static bool starts_number(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
           c == '.';
  }

  double read_number() {
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    bool digits = false;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
      digits = true;
    }
    if (!at_end() && peek() == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
        digits = true;
      }
    }
    if (!digits) throw error(start, "malformed number");
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
      bool exp_digits = false;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
        exp_digits = true;
      }
      if (!exp_digits) pos_ = save;
    }
    std::string token(text_.substr(start, pos_ - start));
    return std::strtod(token.c_str(), nullptr);
  }

  Term read_vector() {
    std::size_t open = pos_;
    ++pos_;  // '<'
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
      skip_ws();
      if (at_end()) throw error(open, "unterminated vector literal");
      if (!starts_number(peek())) throw error(pos_, "expected number in vector literal");
      v[i] = read_number();
      skip_ws();
      if (at_end()) throw error(open, "unterminated vector literal");
      char want = i < 2 ? ',' : '>';
      if (peek() != want) {
        throw error(pos_, std::string("expected '") + want + "' in vector literal");
      }
      ++pos_;
    }
    return Term::vector(v);
  }

  Term read_term() {
    skip_ws();
    if (at_end()) throw error(pos_, "unbalanced parenthesis: unexpected end of input");
    char c = peek();
    if (c == ',' || c == ')') throw error(pos_, "empty argument");
    if (c == '(') throw error(pos_, "unexpected '(' without predicate");
    if (c == '<') return read_vector();
    if (starts_number(c)) return Term::number(read_number());
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
      throw error(pos_, std::string("unexpected character '") + c + "'");
    }
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    skip_ws();
    if (at_end() || peek() != '(') return Term::symbol(std::move(name));

    std::size_t open = pos_;
    ++pos_;  // '('
    std::vector<Term> args;
    for (;;) {
      skip_ws();
      if (at_end()) throw error(open, "unbalanced parenthesis: '(' is never closed");
      if (peek() == ')' || peek() == ',') throw error(pos_, "empty argument");
      args.push_back(read_term());
      skip_ws();
      if (at_end()) throw error(open, "unbalanced parenthesis: '(' is never closed");
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      throw error(pos_, std::string("expected ',' or ')' but found '") + peek() + "'");
    }
    return Term::apply(std::move(name), std::move(args));
  }

  std::string_view text_;
  SourcePos origin_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_logical_form(std::string_view text) {
  return TermReader(text, SourcePos{1, 1}).read_all();
}

Term parse_term_at(std::string_view text, SourcePos origin) {
  return TermReader(text, origin).read_all();
}

}  // namespace voxml
