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

#include "voxml/validate.hpp"

#include <algorithm>
#include <set>

namespace voxml {

std::string Diagnostic::str() const {
  return std::string(severity == Severity::kError ? "error" : "warning") + " " +
         pred + " " + path + ": " + message;
}

int ValidationReport::errors() const {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [](const auto& d) {
    return d.severity == Severity::kError;
  }));
}

int ValidationReport::warnings() const {
  return static_cast<int>(items.size()) - errors();
}

bool ValidationReport::has(std::string_view fragment) const {
  return std::any_of(items.begin(), items.end(), [&](const auto& d) {
    return d.message.find(fragment) != std::string::npos;
  });
}

namespace {

class Checker {
 public:
  explicit Checker(const Voxeme& v) : pred_(v.pred()) {}

  void error(std::string path, std::string msg) {
    report_.items.push_back({Severity::kError, pred_, std::move(path), std::move(msg)});
  }
  void warning(std::string path, std::string msg) {
    report_.items.push_back({Severity::kWarning, pred_, std::move(path), std::move(msg)});
  }

  ValidationReport take() { return std::move(report_); }

  void lex(const Lex& l, bool needs_types) {
    if (l.pred.empty()) error("LEX.PRED", "empty predicate");
    if (needs_types && l.gl_types.empty()) error("LEX.TYPE", "missing lexical type");
  }

  void object(const ObjectVoxeme& o) {
    lex(o.lex, true);
    const auto& t = o.type;

    if (t.head.coindex) {
      int tag = *t.head.coindex;
      auto n = std::count_if(t.components.begin(), t.components.end(),
                             [&](const Component& c) { return c.coindex == tag; });
      if (n == 0) {
        error("TYPE.HEAD", "dangling coindex [" + std::to_string(tag) +
                               "]: no component carries the tag");
      } else if (n > 1) {
        error("TYPE.HEAD", "ambiguous coindex [" + std::to_string(tag) +
                               "]: several components carry the tag");
      }
    }
    std::set<std::string> names;
    for (const auto& c : t.components) {
      if (!names.insert(c.name).second) {
        error("TYPE.COMPONENTS", "duplicate component " + c.name);
      }
    }

    std::set<Axis> axes;
    for (Axis a : t.rotat_sym) {
      if (!axes.insert(a).second) {
        error("TYPE.ROTATSYM", std::string("duplicate symmetry axis ") + axis_char(a));
      }
    }
    std::set<Plane> planes;
    for (Plane p : t.reflect_sym) {
      if (!planes.insert(p).second) {
        error("TYPE.REFLECTSYM",
              "duplicate symmetry plane " + std::string(to_string(p)));
      }
    }

    auto maximal = primitive_symmetry(canonicalize_head(t.head.shape, t.reflect_sym));
    for (Axis a : axes) {
      if (std::find(maximal.rotational.begin(), maximal.rotational.end(), a) ==
          maximal.rotational.end()) {
        warning("TYPE.ROTATSYM", std::string("axis ") + axis_char(a) +
                                     " exceeds the symmetry of head " +
                                     std::string(to_string(t.head.shape)));
      }
    }
    for (Plane p : planes) {
      if (std::find(maximal.reflection.begin(), maximal.reflection.end(), p) ==
          maximal.reflection.end()) {
        warning("TYPE.REFLECTSYM", "plane " + std::string(to_string(p)) +
                                       " exceeds the symmetry of head " +
                                       std::string(to_string(t.head.shape)));
      }
    }

    habitat(o.habitat);
    affordances(o);
  }

  void habitat(const HabitatSpec& h) {
    std::set<int> seen;
    auto groups = [&](const std::vector<HabitatGroup>& list, const std::string& where) {
      for (const auto& g : list) {
        std::string path = "HABITAT." + where + ".H" + std::to_string(g.index);
        if (g.index < 0) error(path, "negative habitat index");
        if (!seen.insert(g.index).second) {
          error(path, "duplicate habitat index " + std::to_string(g.index));
        }
        for (const auto& e : g.entries) {
          for (const auto& c : e.constraints) {
            if (const auto* r = std::get_if<RelativeDimConstraint>(&c)) {
              if (r->lesser == r->greater) {
                error(path + "." + e.label, "relative dimension compares an axis with itself");
              }
            }
          }
        }
      }
    };
    groups(h.intrinsic, "INTR");
    groups(h.extrinsic, "EXTR");
    if (h.extrinsic.empty()) warning("HABITAT.EXTR", "extrinsic habitats elided");
  }

  void affordances(const ObjectVoxeme& o) {
    if (o.afford_str.empty()) {
      warning("AFFORD_STR", "affordance structure elided");
      return;
    }
    std::set<int> seen;
    for (const auto& a : o.afford_str) {
      std::string path = "AFFORD_STR.A" + std::to_string(a.index);
      if (!seen.insert(a.index).second) {
        error(path, "duplicate affordance index " + std::to_string(a.index));
      }
      for (int h : a.condition) {
        if (!o.habitat.find(h)) {
          error(path + ".CONDITION",
                "unresolved habitat reference H[" + std::to_string(h) + "]");
        }
      }
      if (!a.event.is_apply()) {
        error(path + ".EVENT", "event must be a predicate application");
      }
      if (a.result) {
        auto bound = symbols_of(a.event);
        for (const auto& v : symbols_of(*a.result)) {
          if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
            error(path + ".RESULT", "result variable " + v + " is not bound by the event");
          }
        }
      } else if (a.kind == AffordanceKind::kTelic) {
        warning(path + ".RESULT", "telic affordance without a result state");
      }
    }
  }

  void statement(const Term& s, const std::set<std::string>& vars, const std::string& path) {
    if (!s.is_apply()) {
      error(path, "body statement must be a predicate application");
      return;
    }
    if (s.name() == "while" || s.name() == "cond") {
      if (s.arity() != 2) {
        error(path, s.name() + " takes a test and an action");
        return;
      }
    }
    for (const auto& v : symbols_of(s)) {
      if (!vars.count(v)) error(path, "undeclared variable " + v);
    }
  }

  void program(const ProgramVoxeme& p) {
    lex(p.lex, true);
    std::set<std::string> vars;
    for (const auto& a : p.args) {
      if (a.var.empty() || a.type.empty()) error("TYPE.ARGS", "malformed argument " + a.str());
      if (!vars.insert(a.var).second) error("TYPE.ARGS", "duplicate argument " + a.var);
    }
    if (p.body.empty() &&
        (p.head == ProgramHead::kProcess || p.head == ProgramHead::kTransition)) {
      error("TYPE.BODY", "empty body for a " + std::string(to_string(p.head)) + " program");
    }
    for (std::size_t i = 0; i < p.body.size(); ++i) {
      statement(p.body[i], vars, "TYPE.BODY.E" + std::to_string(i + 1));
    }
  }

  void typed_arg(const TypedVar& a, const std::string& path) {
    if (a.var.empty()) error(path, "missing argument variable");
    if (a.type.empty()) error(path, "missing argument type");
  }

  void attribute(const AttributeVoxeme& a) {
    lex(a.lex, false);
    typed_arg(a.arg, "TYPE.ARG");
  }

  void relation(const RelationVoxeme& r) {
    lex(r.lex, false);
    if (r.relation_class == RelationClass::kConfig && !r.rcc8_value()) {
      error("TYPE.VALUE", "config relation requires an RCC-8 value, got '" + r.value + "'");
    }
    if (r.args.size() < 2) error("TYPE.ARGS", "relation needs at least two arguments");
    std::set<std::string> vars;
    for (const auto& a : r.args) {
      typed_arg(a, "TYPE.ARGS");
      if (!vars.insert(a.var).second) error("TYPE.ARGS", "duplicate argument " + a.var);
    }
  }

  void function(const FunctionVoxeme& f) {
    lex(f.lex, false);
    typed_arg(f.arg, "TYPE.ARG");
    if (f.mapping.reduction != 1) {
      error("TYPE.MAPPING", "mapping must reduce dimension by exactly one");
    }
    if (f.referent.empty() || f.referent.front() != f.arg.var) {
      error("TYPE.REFERENT", "referent must start at the argument variable " + f.arg.var);
    }
    if (f.orientation.arity && (f.orientation.arity->path.empty() ||
                                f.orientation.arity->path.front() != f.arg.var)) {
      error("TYPE.ORIENTATION.ARITY", "arity rule must start at the argument variable");
    }
  }

 private:
  std::string pred_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate(const Voxeme& voxeme) {
  Checker c(voxeme);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ObjectVoxeme>) c.object(v);
        if constexpr (std::is_same_v<T, ProgramVoxeme>) c.program(v);
        if constexpr (std::is_same_v<T, AttributeVoxeme>) c.attribute(v);
        if constexpr (std::is_same_v<T, RelationVoxeme>) c.relation(v);
        if constexpr (std::is_same_v<T, FunctionVoxeme>) c.function(v);
      },
      voxeme.body);
  return c.take();
}

}  // namespace voxml
