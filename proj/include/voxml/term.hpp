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

#ifndef VOXML_TERM_HPP_
#define VOXML_TERM_HPP_

#include <compare>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "voxml/error.hpp"
#include "voxml/vec3.hpp"

namespace voxml {

// Predicate-argument tree. Logical forms, program bodies, affordance events
// and results, habitat predicates and scene facts all share this type.
//
//   put(apple, on(plate))   apply(put, [sym(apple), apply(on, [sym(plate)])])
//   put(apple, <1, 2.3, -0.8>)
class Term {
 public:
  enum class Kind { kSymbol, kNumber, kVector, kApply };

  Term() = default;

  static Term symbol(std::string name);
  static Term number(double value);
  static Term vector(Vec3 value);
  static Term apply(std::string pred, std::vector<Term> args);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ != Kind::kApply; }
  bool is_symbol() const { return kind_ == Kind::kSymbol; }
  bool is_apply() const { return kind_ == Kind::kApply; }
  bool is_vector() const { return kind_ == Kind::kVector; }

  // Symbol name or predicate name; empty for numeric atoms.
  const std::string& name() const { return name_; }
  double number_value() const { return number_; }
  Vec3 vector_value() const { return vec_; }
  const std::vector<Term>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  // True for an application of `pred` with exactly `n` arguments.
  bool is_call(std::string_view pred, std::size_t n) const {
    return kind_ == Kind::kApply && name_ == pred && args_.size() == n;
  }

  int depth() const;
  std::string str() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Kind kind_ = Kind::kSymbol;
  std::string name_;
  double number_ = 0.0;
  Vec3 vec_;
  std::vector<Term> args_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

// All symbol atoms in the tree (including nested arguments), in first-seen
// order without repeats.
std::vector<std::string> symbols_of(const Term& t);

// Every predicate name used in the tree.
std::set<std::string> predicates_of(const Term& t);

// Replaces symbol atoms found in `subst`.
Term substitute(const Term& t, const std::map<std::string, Term>& subst);

// Identifier per the logical-form grammar: [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view s);

// Parses a logical form. Whitespace between tokens is ignored. Throws a
// syntax ParseError carrying the 1-based column (line is always 1 unless the
// text contains newlines).
Term parse_logical_form(std::string_view text);

// Same, but positions are reported relative to `origin` (used when a term is
// embedded in a larger document).
Term parse_term_at(std::string_view text, SourcePos origin);

}  // namespace voxml

#endif  // VOXML_TERM_HPP_
