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

#include "voxml/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "voxml/avm.hpp"

namespace voxml {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VoxiconParseError::VoxiconParseError(std::vector<Entry> entries)
    : std::runtime_error([&] {
        std::string msg;
        for (const auto& e : entries) {
          if (!msg.empty()) msg += "\n";
          if (e.index >= 0) msg += "entry " + std::to_string(e.index) + ": ";
          msg += e.error.what();
        }
        return msg;
      }()),
      entries_(std::move(entries)) {}

bool VoxiconParseError::schema_only() const {
  for (const auto& e : entries_) {
    if (e.error.kind() != ParseErrorKind::kSchema) return false;
  }
  return true;
}

namespace {

using avm::Node;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

SourcePos shifted(SourcePos p, std::size_t offset) {
  return {p.line, p.column + static_cast<int>(offset)};
}

// A piece of a leaf value along with where it starts in the source.
struct Slice {
  std::string_view text;
  SourcePos pos;
};

Slice trimmed(Slice s) {
  std::size_t lead = 0;
  while (lead < s.text.size() && std::isspace(static_cast<unsigned char>(s.text[lead]))) ++lead;
  std::string_view t = trim(s.text);
  return {t, shifted(s.pos, lead)};
}

// Splits on `sep` at parenthesis/bracket depth zero.
std::vector<Slice> split_top(Slice s, char sep) {
  std::vector<Slice> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.text.size(); ++i) {
    char c = s.text[i];
    if (c == '(' || c == '[' || c == '<' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '>' || c == '}') --depth;
    // "<<" and "->" are operators, not brackets.
    if (c == '<' && i + 1 < s.text.size() && s.text[i + 1] == '<') {
      depth -= 1;
      ++i;
      continue;
    }
    if (c == '>' && i > 0 && s.text[i - 1] == '-') ++depth;
    if (c == sep && depth == 0) {
      out.push_back(trimmed({s.text.substr(start, i - start), shifted(s.pos, start)}));
      start = i + 1;
    }
  }
  out.push_back(trimmed({s.text.substr(start), shifted(s.pos, start)}));
  return out;
}

// Reads a block's children one key at a time and rejects leftovers.
class Fields {
 public:
  Fields(const std::vector<Node>& children, std::string where)
      : children_(children), used_(children.size(), false), where_(std::move(where)) {}

  const Node* optional(std::string_view key, std::string_view alias = {}) {
    for (std::size_t i = 0; i < children_.size(); ++i) {
      const Node& n = children_[i];
      if (n.key == key || (!alias.empty() && n.key == alias)) {
        if (used_[i]) throw schema_error(n.key_pos, "duplicate field " + n.key);
        used_[i] = true;
        return &n;
      }
    }
    return nullptr;
  }

  const Node& required(std::string_view key, SourcePos owner) {
    const Node* n = optional(key);
    if (!n) throw schema_error(owner, "missing field " + where_ + "." + std::string(key));
    return *n;
  }

  // Indexed keys (A1, A2, ... / E1, ... / H1, ...) in document order.
  std::vector<std::pair<int, const Node*>> indexed(char prefix) {
    std::vector<std::pair<int, const Node*>> out;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      const Node& n = children_[i];
      if (used_[i] || n.key.size() < 2 || n.key[0] != prefix) continue;
      bool digits = true;
      for (std::size_t k = 1; k < n.key.size(); ++k) {
        digits = digits && std::isdigit(static_cast<unsigned char>(n.key[k]));
      }
      if (!digits) continue;
      used_[i] = true;
      out.emplace_back(std::stoi(n.key.substr(1)), &n);
    }
    return out;
  }

  void finish() const {
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (!used_[i]) {
        throw schema_error(children_[i].key_pos,
                           "unknown field " + where_ + "." + children_[i].key);
      }
    }
  }

 private:
  const std::vector<Node>& children_;
  std::vector<bool> used_;
  std::string where_;
};

const Node& expect_block(const Node& n) {
  if (!n.is_block) throw schema_error(n.key_pos, "field " + n.key + " must be a block");
  return n;
}

Slice leaf(const Node& n) {
  if (n.is_block) throw schema_error(n.key_pos, "field " + n.key + " must be a value");
  return {n.value, n.value_pos};
}

bool is_elided(const Node& n) {
  return !n.is_block && (n.value == "..." || n.value == "{}" || n.value == "nil");
}

template <typename E, typename F>
E parse_enum(Slice s, F parse, std::string_view what) {
  auto v = parse(s.text);
  if (!v) {
    throw schema_error(s.pos, "unknown " + std::string(what) + " value '" + std::string(s.text) + "'");
  }
  return *v;
}

std::string parse_ident(Slice s, std::string_view what) {
  if (!is_identifier(s.text)) {
    throw schema_error(s.pos, "expected " + std::string(what) + ", got '" + std::string(s.text) + "'");
  }
  return std::string(s.text);
}

bool parse_bool(Slice s) {
  if (s.text == "true") return true;
  if (s.text == "false") return false;
  throw schema_error(s.pos, "expected true or false, got '" + std::string(s.text) + "'");
}

int parse_index(Slice s) {
  if (s.text.empty()) throw schema_error(s.pos, "expected an index");
  for (char c : s.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw schema_error(s.pos, "expected a non-negative integer index, got '" + std::string(s.text) + "'");
    }
  }
  return std::stoi(std::string(s.text));
}

// "name", "name[1]", "name+", "name+[2]"; whitespace allowed before '['.
Component parse_component(Slice s) {
  Component c;
  std::string_view t = s.text;
  std::size_t n = 0;
  while (n < t.size() && (std::isalnum(static_cast<unsigned char>(t[n])) || t[n] == '_')) ++n;
  c.name = parse_ident({t.substr(0, n), s.pos}, "component name");
  std::string_view rest = t.substr(n);
  std::size_t off = n;
  if (!rest.empty() && rest.front() == '+') {
    c.plural = true;
    rest.remove_prefix(1);
    ++off;
  }
  Slice tail = trimmed({rest, shifted(s.pos, off)});
  if (!tail.text.empty()) {
    if (tail.text.front() != '[' || tail.text.back() != ']') {
      throw schema_error(tail.pos, "malformed coindex '" + std::string(tail.text) + "'");
    }
    c.coindex = parse_index(trimmed({tail.text.substr(1, tail.text.size() - 2), shifted(tail.pos, 1)}));
  }
  return c;
}

HeadSpec parse_head(Slice s) {
  HeadSpec h;
  std::size_t br = s.text.find('[');
  Slice name = trimmed({s.text.substr(0, br), s.pos});
  h.shape = parse_enum<HeadShape>(name, parse_head_shape, "HEAD");
  if (br != std::string_view::npos) {
    Slice tag{s.text.substr(br), shifted(s.pos, br)};
    if (tag.text.back() != ']') throw schema_error(tag.pos, "malformed coindex");
    h.coindex = parse_index(trimmed({tag.text.substr(1, tag.text.size() - 2), shifted(tag.pos, 1)}));
  }
  return h;
}

// "{X, Y}" -> elements; "{}" -> none.
std::vector<Slice> parse_braced_list(Slice s) {
  if (s.text.size() < 2 || s.text.front() != '{' || s.text.back() != '}') {
    throw schema_error(s.pos, "expected a braced set such as {X, Y}");
  }
  Slice inner = trimmed({s.text.substr(1, s.text.size() - 2), shifted(s.pos, 1)});
  if (inner.text.empty()) return {};
  return split_top(inner, ',');
}

std::vector<std::string> parse_ident_list(Slice s, std::string_view what) {
  std::vector<std::string> out;
  if (s.text == "nil") return out;
  for (const auto& piece : split_top(s, ',')) out.push_back(parse_ident(piece, what));
  return out;
}

TypedVar parse_typed_var(Slice s) {
  auto colon = s.text.find(':');
  if (colon == std::string_view::npos) {
    throw schema_error(s.pos, "expected 'var:type', got '" + std::string(s.text) + "'");
  }
  TypedVar tv;
  tv.var = parse_ident(trimmed({s.text.substr(0, colon), s.pos}), "argument variable");
  Slice type = trimmed({s.text.substr(colon + 1), shifted(s.pos, colon + 1)});
  if (type.text.empty()) throw schema_error(type.pos, "missing argument type");
  for (char c : type.text) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      throw schema_error(type.pos, "malformed argument type '" + std::string(type.text) + "'");
    }
  }
  tv.type = std::string(type.text);
  return tv;
}

Term parse_term_slice(Slice s) {
  try {
    return parse_term_at(s.text, s.pos);
  } catch (const ParseError& e) {
    // A malformed term inside a well-formed document is a schema problem.
    throw schema_error(e.pos(), e.message());
  }
}

std::optional<Axis> axis_of(std::string_view s) { return parse_axis(trim(s)); }

HabitatConstraint parse_constraint(Slice s) {
  if (auto ll = s.text.find("<<"); ll != std::string_view::npos) {
    auto lesser = axis_of(s.text.substr(0, ll));
    auto greater = axis_of(s.text.substr(ll + 2));
    if (!lesser || !greater) {
      throw schema_error(s.pos, "relative dimension needs world axes: '" + std::string(s.text) + "'");
    }
    return RelativeDimConstraint{*lesser, *greater};
  }
  auto open = s.text.find('(');
  if (open != std::string_view::npos && s.text.back() == ')') {
    std::string_view name = trim(s.text.substr(0, open));
    std::string_view inner = s.text.substr(open + 1, s.text.size() - open - 2);
    if (name == "align") {
      auto comma = inner.find(',');
      if (comma == std::string_view::npos) {
        throw schema_error(s.pos, "align takes an object axis and an embedding axis");
      }
      auto obj = axis_of(inner.substr(0, comma));
      std::string_view emb = trim(inner.substr(comma + 1));
      std::optional<Axis> world;
      if (emb.size() == 3 && emb[0] == 'E' && emb[1] == '_') world = parse_axis(emb.substr(2));
      if (!obj || !world) {
        throw schema_error(s.pos, "malformed alignment '" + std::string(s.text) + "'");
      }
      return AlignConstraint{*obj, *world};
    }
    if (auto signed_axis = parse_signed_axis(trim(inner)); signed_axis && is_identifier(name)) {
      return FaceLabelConstraint{std::string(name), *signed_axis};
    }
  }
  return PredicateConstraint{parse_term_slice(s)};
}

std::vector<HabitatGroup> parse_habitat_groups(const Node& n, const std::string& where) {
  std::vector<HabitatGroup> groups;
  if (is_elided(n)) return groups;
  if (!n.is_block) {
    throw schema_error(n.value_pos, "expected habitat groups, '{}' or '...'");
  }
  Fields f(n.children, where);
  for (const auto& [index, node] : f.indexed('H')) {
    HabitatGroup g;
    g.index = index;
    const Node& block = expect_block(*node);
    for (const Node& entry : block.children) {
      if (entry.is_block) throw schema_error(entry.key_pos, "habitat entries must be values");
      LabeledConstraints lc;
      lc.label = entry.key;
      for (const auto& piece : split_top(leaf(entry), ',')) {
        lc.constraints.push_back(parse_constraint(piece));
      }
      g.entries.push_back(std::move(lc));
    }
    groups.push_back(std::move(g));
  }
  f.finish();
  return groups;
}

std::vector<int> parse_condition(Slice s) {
  std::vector<int> out;
  if (s.text == "nil") return out;
  for (const auto& piece : split_top(s, ',')) {
    std::string_view t = piece.text;
    if (t.size() >= 4 && t[0] == 'H' && t[1] == '[' && t.back() == ']') {
      out.push_back(parse_index({t.substr(2, t.size() - 3), shifted(piece.pos, 2)}));
    } else if (t.size() >= 2 && t[0] == 'H') {
      out.push_back(parse_index({t.substr(1), shifted(piece.pos, 1)}));
    } else {
      throw schema_error(piece.pos, "expected habitat reference H[i], got '" + std::string(t) + "'");
    }
  }
  return out;
}

Lex parse_lex(const Node& n) {
  const Node& block = expect_block(n);
  Fields f(block.children, "LEX");
  Lex lex;
  lex.pred = parse_ident(leaf(f.required("PRED", n.key_pos)), "predicate");
  if (const Node* t = f.optional("TYPE")) lex.gl_types = parse_ident_list(leaf(*t), "lexical type");
  f.finish();
  return lex;
}

// Checks A1, A2, ... appear in order without gaps.
void expect_sequence(const std::vector<std::pair<int, const Node*>>& items, char prefix) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].first != static_cast<int>(i) + 1) {
      throw schema_error(items[i].second->key_pos,
                         std::string("expected ") + prefix + std::to_string(i + 1) +
                             ", found " + items[i].second->key);
    }
  }
}

std::vector<TypedVar> parse_args_block(const Node& n) {
  std::vector<TypedVar> args;
  if (is_elided(n)) return args;
  const Node& block = expect_block(n);
  Fields f(block.children, "ARGS");
  auto items = f.indexed('A');
  expect_sequence(items, 'A');
  for (const auto& [index, node] : items) {
    Slice s = leaf(*node);
    if (s.text == "...") continue;
    args.push_back(parse_typed_var(s));
  }
  f.finish();
  return args;
}

Term parse_statement(Slice s) {
  std::size_t depth = 0;
  for (std::size_t i = 0; i + 1 < s.text.size(); ++i) {
    char c = s.text[i];
    if (c == '(') ++depth;
    if (c == ')' && depth > 0) --depth;
    if (depth == 0 && c == '-' && s.text[i + 1] == '>') {
      Term test = parse_term_slice(trimmed({s.text.substr(0, i), s.pos}));
      Term act = parse_term_slice(trimmed({s.text.substr(i + 2), shifted(s.pos, i + 2)}));
      return Term::apply("cond", {std::move(test), std::move(act)});
    }
  }
  return parse_term_slice(s);
}

ObjectVoxeme decode_object(const avm::Entry& e) {
  Fields f(e.fields, "object");
  ObjectVoxeme o;
  o.lex = parse_lex(f.required("LEX", e.kind_pos));

  const Node& type = expect_block(f.required("TYPE", e.kind_pos));
  {
    Fields t(type.children, "TYPE");
    o.type.head = parse_head(leaf(t.required("HEAD", type.key_pos)));
    if (const Node* c = t.optional("COMPONENTS")) {
      Slice s = leaf(*c);
      if (s.text != "nil") {
        for (const auto& piece : split_top(s, ',')) o.type.components.push_back(parse_component(piece));
      }
    }
    o.type.concavity = parse_enum<Concavity>(leaf(t.required("CONCAVITY", type.key_pos)),
                                             parse_concavity, "CONCAVITY");
    if (const Node* r = t.optional("ROTATSYM", "ROTASYM")) {
      for (const auto& piece : parse_braced_list(leaf(*r))) {
        o.type.rotat_sym.push_back(parse_enum<Axis>(piece, parse_axis, "ROTATSYM axis"));
      }
    }
    if (const Node* r = t.optional("REFLECTSYM")) {
      for (const auto& piece : parse_braced_list(leaf(*r))) {
        o.type.reflect_sym.push_back(parse_enum<Plane>(piece, parse_plane, "REFLECTSYM plane"));
      }
    }
    t.finish();
  }

  if (const Node* h = f.optional("HABITAT")) {
    if (!is_elided(*h)) {
      const Node& block = expect_block(*h);
      Fields hf(block.children, "HABITAT");
      if (const Node* intr = hf.optional("INTR")) {
        o.habitat.intrinsic = parse_habitat_groups(*intr, "HABITAT.INTR");
      }
      if (const Node* extr = hf.optional("EXTR")) {
        o.habitat.extrinsic = parse_habitat_groups(*extr, "HABITAT.EXTR");
      }
      hf.finish();
    }
  }

  if (const Node* a = f.optional("AFFORD_STR")) {
    if (!is_elided(*a)) {
      const Node& block = expect_block(*a);
      Fields af(block.children, "AFFORD_STR");
      for (const auto& [index, node] : af.indexed('A')) {
        if (!node->is_block && node->value == "...") continue;
        const Node& ab = expect_block(*node);
        Fields one(ab.children, "AFFORD_STR." + ab.key);
        Affordance aff;
        aff.index = index;
        aff.kind = parse_enum<AffordanceKind>(leaf(one.required("KIND", ab.key_pos)),
                                              parse_affordance_kind, "affordance KIND");
        if (const Node* c = one.optional("CONDITION")) aff.condition = parse_condition(leaf(*c));
        aff.event = parse_term_slice(leaf(one.required("EVENT", ab.key_pos)));
        if (const Node* r = one.optional("RESULT")) {
          Slice s = leaf(*r);
          if (s.text != "nil") aff.result = parse_term_slice(s);
        }
        one.finish();
        o.afford_str.push_back(std::move(aff));
      }
      af.finish();
    }
  }

  const Node& emb = expect_block(f.required("EMBODIMENT", e.kind_pos));
  {
    Fields ef(emb.children, "EMBODIMENT");
    o.embodiment.scale = parse_enum<EmbodimentScale>(leaf(ef.required("SCALE", emb.key_pos)),
                                                     parse_embodiment_scale, "SCALE");
    o.embodiment.movable = parse_bool(leaf(ef.required("MOVABLE", emb.key_pos)));
    ef.finish();
  }
  f.finish();
  return o;
}

ProgramVoxeme decode_program(const avm::Entry& e) {
  Fields f(e.fields, "program");
  ProgramVoxeme p;
  p.lex = parse_lex(f.required("LEX", e.kind_pos));
  const Node& type = expect_block(f.required("TYPE", e.kind_pos));
  Fields t(type.children, "TYPE");
  p.head = parse_enum<ProgramHead>(leaf(t.required("HEAD", type.key_pos)), parse_program_head, "HEAD");
  if (const Node* a = t.optional("ARGS")) p.args = parse_args_block(*a);
  if (const Node* b = t.optional("BODY")) {
    if (!is_elided(*b)) {
      const Node& block = expect_block(*b);
      Fields bf(block.children, "BODY");
      auto items = bf.indexed('E');
      expect_sequence(items, 'E');
      for (const auto& [index, node] : items) p.body.push_back(parse_statement(leaf(*node)));
      bf.finish();
    }
  }
  t.finish();
  f.finish();
  return p;
}

AttributeVoxeme decode_attribute(const avm::Entry& e) {
  Fields f(e.fields, "attribute");
  AttributeVoxeme a;
  a.lex = parse_lex(f.required("LEX", e.kind_pos));
  const Node& type = expect_block(f.required("TYPE", e.kind_pos));
  Fields t(type.children, "TYPE");
  a.scale = parse_enum<ScaleKind>(leaf(t.required("SCALE", type.key_pos)), parse_scale_kind, "SCALE");
  a.arity = parse_enum<Arity>(leaf(t.required("ARITY", type.key_pos)), parse_arity, "ARITY");
  a.arg = parse_typed_var(leaf(t.required("ARG", type.key_pos)));
  t.finish();
  f.finish();
  return a;
}

RelationVoxeme decode_relation(const avm::Entry& e) {
  Fields f(e.fields, "relation");
  RelationVoxeme r;
  r.lex = parse_lex(f.required("LEX", e.kind_pos));
  const Node& type = expect_block(f.required("TYPE", e.kind_pos));
  Fields t(type.children, "TYPE");
  r.relation_class = parse_enum<RelationClass>(leaf(t.required("CLASS", type.key_pos)),
                                               parse_relation_class, "CLASS");
  r.value = parse_ident(leaf(t.required("VALUE", type.key_pos)), "relation value");
  if (const Node* a = t.optional("ARGS")) r.args = parse_args_block(*a);
  t.finish();
  f.finish();
  return r;
}

std::vector<std::string> parse_path(Slice s) {
  std::vector<std::string> path;
  std::size_t start = 0;
  for (;;) {
    std::size_t arrow = s.text.find("->", start);
    std::string_view seg = s.text.substr(start, arrow == std::string_view::npos ? std::string_view::npos : arrow - start);
    path.push_back(parse_ident(trimmed({seg, shifted(s.pos, start)}), "path segment"));
    if (arrow == std::string_view::npos) break;
    start = arrow + 2;
  }
  return path;
}

DimensionMapping parse_mapping(Slice s) {
  // dimension(n):n-1
  constexpr std::string_view kHead = "dimension(";
  auto fail = [&] {
    return schema_error(s.pos, "expected MAPPING of the form dimension(n):n-1, got '" + std::string(s.text) + "'");
  };
  if (s.text.substr(0, kHead.size()) != kHead) throw fail();
  auto close = s.text.find("):");
  if (close == std::string_view::npos) throw fail();
  DimensionMapping m;
  m.var = std::string(trim(s.text.substr(kHead.size(), close - kHead.size())));
  std::string_view out = trim(s.text.substr(close + 2));
  if (!is_identifier(m.var) || out.substr(0, m.var.size()) != m.var) throw fail();
  out = trim(out.substr(m.var.size()));
  if (out.empty() || out.front() != '-') throw fail();
  Slice k = trimmed({out.substr(1), s.pos});
  m.reduction = parse_index(k);
  return m;
}

ArityRule parse_arity_rule(Slice s) {
  auto colon = s.text.rfind(':');
  if (colon == std::string_view::npos) {
    throw schema_error(s.pos, "expected arity rule 'path[selector]:arity'");
  }
  ArityRule rule;
  rule.arity = parse_enum<Arity>(trimmed({s.text.substr(colon + 1), shifted(s.pos, colon + 1)}),
                                 parse_arity, "ARITY");
  Slice lhs = trimmed({s.text.substr(0, colon), s.pos});
  if (!lhs.text.empty() && lhs.text.back() == ']') {
    auto open = lhs.text.find('[');
    if (open == std::string_view::npos) throw schema_error(lhs.pos, "unbalanced ']' in arity rule");
    rule.selector = parse_term_slice(
        trimmed({lhs.text.substr(open + 1, lhs.text.size() - open - 2), shifted(lhs.pos, open + 1)}));
    lhs.text = lhs.text.substr(0, open);
  }
  rule.path = parse_path(lhs);
  return rule;
}

FunctionVoxeme decode_function(const avm::Entry& e) {
  Fields f(e.fields, "function");
  FunctionVoxeme fn;
  fn.lex = parse_lex(f.required("LEX", e.kind_pos));
  const Node& type = expect_block(f.required("TYPE", e.kind_pos));
  Fields t(type.children, "TYPE");
  fn.arg = parse_typed_var(leaf(t.required("ARG", type.key_pos)));
  if (const Node* r = t.optional("REFERENT")) {
    fn.referent = parse_path(leaf(*r));
  } else {
    fn.referent = {fn.arg.var};
  }
  fn.mapping = parse_mapping(leaf(t.required("MAPPING", type.key_pos)));
  const Node& orient = expect_block(t.required("ORIENTATION", type.key_pos));
  Fields of(orient.children, "ORIENTATION");
  fn.orientation.space = parse_enum<FunctionSpace>(leaf(of.required("SPACE", orient.key_pos)),
                                                   parse_function_space, "SPACE");
  fn.orientation.axis = parse_enum<SignedAxis>(leaf(of.required("AXIS", orient.key_pos)),
                                               parse_signed_axis, "AXIS");
  if (const Node* a = of.optional("ARITY")) fn.orientation.arity = parse_arity_rule(leaf(*a));
  of.finish();
  t.finish();
  f.finish();
  return fn;
}

Voxeme decode(const avm::Entry& e) {
  auto kind = parse_voxeme_kind(e.kind);
  if (!kind) throw schema_error(e.kind_pos, "unknown voxeme kind '" + e.kind + "'");
  Voxeme v;
  v.label = e.label;
  switch (*kind) {
    case VoxemeKind::kObject:
      v.body = decode_object(e);
      break;
    case VoxemeKind::kProgram:
      v.body = decode_program(e);
      break;
    case VoxemeKind::kAttribute:
      v.body = decode_attribute(e);
      break;
    case VoxemeKind::kRelation:
      v.body = decode_relation(e);
      break;
    case VoxemeKind::kFunction:
      v.body = decode_function(e);
      break;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Serialization

class Writer {
 public:
  void line(const std::string& s) {
    out_.append(2 * depth_, ' ');
    out_ += s;
    out_ += '\n';
  }
  void open(const std::string& key) {
    line(key + " {");
    ++depth_;
  }
  void close() {
    --depth_;
    line("}");
  }
  void field(const std::string& key, const std::string& value) { line(key + " = " + value); }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
  std::size_t depth_ = 0;
};

template <typename T, typename F>
std::string join(const std::vector<T>& items, F fmt, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += fmt(items[i]);
  }
  return s;
}

void write_lex(Writer& w, const Lex& lex) {
  w.open("LEX");
  w.field("PRED", lex.pred);
  if (!lex.gl_types.empty()) {
    w.field("TYPE", join(lex.gl_types, [](const std::string& s) { return s; }));
  }
  w.close();
}

std::string statement_text(const Term& t) {
  if (t.is_call("cond", 2)) return t.args()[0].str() + " -> " + t.args()[1].str();
  return t.str();
}

void write_args(Writer& w, const std::vector<TypedVar>& args) {
  w.open("ARGS");
  for (std::size_t i = 0; i < args.size(); ++i) {
    w.field("A" + std::to_string(i + 1), args[i].str());
  }
  w.close();
}

void write_groups(Writer& w, const std::string& key, const std::vector<HabitatGroup>& groups,
                  const char* empty) {
  if (groups.empty()) {
    w.field(key, empty);
    return;
  }
  w.open(key);
  for (const auto& g : groups) {
    w.open("H" + std::to_string(g.index));
    for (const auto& e : g.entries) {
      w.field(e.label, join(e.constraints, [](const HabitatConstraint& c) { return to_string(c); }));
    }
    w.close();
  }
  w.close();
}

void write_object(Writer& w, const ObjectVoxeme& o) {
  write_lex(w, o.lex);
  w.open("TYPE");
  std::string head(to_string(o.type.head.shape));
  if (o.type.head.coindex) head += "[" + std::to_string(*o.type.head.coindex) + "]";
  w.field("HEAD", head);
  w.field("COMPONENTS", o.type.components.empty()
                            ? std::string("nil")
                            : join(o.type.components, [](const Component& c) {
                                std::string s = c.name;
                                if (c.plural) s += "+";
                                if (c.coindex) s += "[" + std::to_string(*c.coindex) + "]";
                                return s;
                              }));
  w.field("CONCAVITY", std::string(to_string(o.type.concavity)));
  w.field("ROTATSYM", "{" + join(o.type.rotat_sym, [](Axis a) { return std::string(1, axis_char(a)); }) + "}");
  w.field("REFLECTSYM", "{" + join(o.type.reflect_sym, [](Plane p) { return std::string(to_string(p)); }) + "}");
  w.close();

  w.open("HABITAT");
  write_groups(w, "INTR", o.habitat.intrinsic, "{}");
  write_groups(w, "EXTR", o.habitat.extrinsic, "...");
  w.close();

  if (o.afford_str.empty()) {
    w.field("AFFORD_STR", "...");
  } else {
    w.open("AFFORD_STR");
    for (const auto& a : o.afford_str) {
      w.open("A" + std::to_string(a.index));
      w.field("KIND", std::string(to_string(a.kind)));
      w.field("CONDITION", a.condition.empty()
                               ? std::string("nil")
                               : join(a.condition, [](int h) { return "H[" + std::to_string(h) + "]"; }));
      w.field("EVENT", a.event.str());
      w.field("RESULT", a.result ? a.result->str() : std::string("nil"));
      w.close();
    }
    w.close();
  }

  w.open("EMBODIMENT");
  w.field("SCALE", std::string(to_string(o.embodiment.scale)));
  w.field("MOVABLE", o.embodiment.movable ? "true" : "false");
  w.close();
}

void write_program(Writer& w, const ProgramVoxeme& p) {
  write_lex(w, p.lex);
  w.open("TYPE");
  w.field("HEAD", std::string(to_string(p.head)));
  write_args(w, p.args);
  if (p.body.empty()) {
    w.field("BODY", "nil");
  } else {
    w.open("BODY");
    for (std::size_t i = 0; i < p.body.size(); ++i) {
      w.field("E" + std::to_string(i + 1), statement_text(p.body[i]));
    }
    w.close();
  }
  w.close();
}

void write_attribute(Writer& w, const AttributeVoxeme& a) {
  write_lex(w, a.lex);
  w.open("TYPE");
  w.field("SCALE", std::string(to_string(a.scale)));
  w.field("ARITY", std::string(to_string(a.arity)));
  w.field("ARG", a.arg.str());
  w.close();
}

void write_relation(Writer& w, const RelationVoxeme& r) {
  write_lex(w, r.lex);
  w.open("TYPE");
  w.field("CLASS", std::string(to_string(r.relation_class)));
  w.field("VALUE", r.value);
  write_args(w, r.args);
  w.close();
}

void write_function(Writer& w, const FunctionVoxeme& f) {
  write_lex(w, f.lex);
  w.open("TYPE");
  w.field("ARG", f.arg.str());
  w.field("REFERENT", join(f.referent, [](const std::string& s) { return s; }, "->"));
  w.field("MAPPING", f.mapping.str());
  w.open("ORIENTATION");
  w.field("SPACE", std::string(to_string(f.orientation.space)));
  w.field("AXIS", f.orientation.axis.str());
  if (f.orientation.arity) w.field("ARITY", f.orientation.arity->str());
  w.close();
  w.close();
}

}  // namespace

Voxeme parse_voxeme(std::string_view text) {
  auto entries = avm::read(text);
  if (entries.empty()) throw syntax_error({1, 1}, "empty document: no voxeme entry");
  if (entries.size() > 1) {
    throw syntax_error(entries[1].kind_pos, "expected a single voxeme entry");
  }
  return decode(entries.front());
}

std::vector<Voxeme> parse_voxemes(std::string_view text, std::vector<SourcePos>* positions) {
  std::vector<avm::Entry> entries;
  try {
    entries = avm::read(text);
  } catch (const ParseError& e) {
    throw VoxiconParseError({{-1, e}});
  }
  std::vector<Voxeme> out;
  std::vector<VoxiconParseError::Entry> failures;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    try {
      out.push_back(decode(entries[i]));
      if (positions) positions->push_back(entries[i].kind_pos);
    } catch (const ParseError& e) {
      failures.push_back({static_cast<int>(i), e});
    }
  }
  if (!failures.empty()) throw VoxiconParseError(std::move(failures));
  return out;
}

std::string serialize_voxeme(const Voxeme& v) {
  Writer w;
  w.open(std::string(to_string(v.kind())) + " " + (v.label.empty() ? v.pred() : v.label));
  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, ObjectVoxeme>) write_object(w, body);
        if constexpr (std::is_same_v<T, ProgramVoxeme>) write_program(w, body);
        if constexpr (std::is_same_v<T, AttributeVoxeme>) write_attribute(w, body);
        if constexpr (std::is_same_v<T, RelationVoxeme>) write_relation(w, body);
        if constexpr (std::is_same_v<T, FunctionVoxeme>) write_function(w, body);
      },
      v.body);
  w.close();
  return w.take();
}

std::string serialize_voxemes(const std::vector<Voxeme>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += "\n";
    out += serialize_voxeme(entries[i]);
  }
  return out;
}

}  // namespace voxml
