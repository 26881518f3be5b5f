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

#include "voxml/interpreter.hpp"

#include <algorithm>
#include <stdexcept>

#include "voxml/error.hpp"
#include "voxml/geometry.hpp"

namespace voxml {

const std::set<std::string>& primitive_symbols() {
  static const std::set<std::string> kSymbols = [] {
    std::set<std::string> s{"move", "grasp", "ungrasp", "hold", "at", "while", "cond", "on"};
    for (int i = 0; i < 8; ++i) s.emplace(to_string(static_cast<Rcc8>(i)));
    return s;
  }();
  return kSymbols;
}

namespace {

bool is_action(const Term& t) {
  return t.is_call("move", 1) || t.is_call("move", 2) || t.is_call("grasp", 2) ||
         t.is_call("ungrasp", 2);
}

// ---------------------------------------------------------------- grounding

class Grounder {
 public:
  Grounder(const Voxicon& vx, const SceneState& scene, const SpatialParams& params)
      : vx_(vx), scene_(scene), params_(params) {}

  struct Out {
    Term term;
    Term event;
    const SceneObject* instance = nullptr;
  };

  Out visit(const Term& t, const SceneObject* figure) {
    Out out = t.is_apply() ? apply(t, figure) : atom(t);
    log.push_back({t, out.term});
    return out;
  }

  std::vector<EvalStep> log;

 private:
  Out atom(const Term& t) {
    if (!t.is_symbol()) return {t, t, nullptr};
    const std::string& name = t.name();
    if (const SceneObject* obj = scene_.find(name)) return instance(*obj);
    auto matches = scene_.instances_of(name);
    if (matches.size() == 1) return instance(*matches.front());
    if (matches.size() > 1) {
      throw GroundingError("ambiguous atom '" + name + "': " + std::to_string(matches.size()) +
                           " instances");
    }
    if (vx_.lookup_any(name) || primitive_symbols().count(name)) return {t, t, nullptr};
    throw GroundingError("unknown atom '" + name + "'");
  }

  static Out instance(const SceneObject& obj) {
    Term id = Term::symbol(obj.id);
    return {id, id, &obj};
  }

  Out apply(const Term& t, const SceneObject* figure) {
    std::vector<Out> args;
    args.reserve(t.arity());
    const SceneObject* sibling_figure = nullptr;
    for (const Term& a : t.args()) {
      args.push_back(visit(a, sibling_figure));
      if (!sibling_figure) sibling_figure = args.back().instance;
    }

    std::vector<Term> terms, events;
    for (const auto& o : args) {
      terms.push_back(o.term);
      events.push_back(o.event);
    }
    const std::string& pred = t.name();
    auto keep = [&] {
      return Out{Term::apply(pred, terms), Term::apply(pred, events), nullptr};
    };

    if (pred == "on") return on(t, args, figure);

    if (const Voxeme* v = vx_.lookup(pred, VoxemeKind::kProgram)) {
      const auto& decl = v->program()->args;
      bool has_agent = std::any_of(decl.begin(), decl.end(),
                                   [](const TypedVar& a) { return a.type == "agent"; });
      if (t.arity() != decl.size() && !(has_agent && t.arity() + 1 == decl.size())) {
        throw GroundingError("arity mismatch: " + pred + " declares " +
                             std::to_string(decl.size()) + " args, got " +
                             std::to_string(t.arity()));
      }
      return keep();
    }
    if (const Voxeme* v = vx_.lookup(pred, VoxemeKind::kFunction)) {
      if (t.arity() != 1 || !args[0].instance) {
        throw GroundingError(pred + " expects one scene object, got " + t.str());
      }
      const SceneObject& obj = *args[0].instance;
      try {
        Region r = eval_spatial_function(*v->function(), Region::from_box(obj.world_box()),
                                         obj.rotation);
        return {Term::vector(r.center()), args[0].event, nullptr};
      } catch (const SpatialError& e) {
        throw GroundingError(e.what());
      }
    }
    if (const Voxeme* v = vx_.lookup(pred, VoxemeKind::kRelation)) {
      if (t.arity() != v->relation()->args.size()) {
        throw GroundingError("arity mismatch: " + pred + " declares " +
                             std::to_string(v->relation()->args.size()) + " args, got " +
                             std::to_string(t.arity()));
      }
      return keep();
    }
    if (const Voxeme* v = vx_.lookup(pred, VoxemeKind::kAttribute)) {
      std::size_t n = v->attribute()->arity == Arity::kTransitive ? 2 : 1;
      if (t.arity() != n) {
        throw GroundingError("arity mismatch: " + pred + " takes " + std::to_string(n) +
                             " args, got " + std::to_string(t.arity()));
      }
      return keep();
    }
    if (primitive_symbols().count(pred)) return keep();
    throw GroundingError("unknown predicate '" + pred + "'");
  }

  // on(g): a point on g's support surface; raised by half the figure's
  // height once the figure is known.
  Out on(const Term& t, const std::vector<Out>& args, const SceneObject* figure) {
    if (t.arity() != 1) throw GroundingError("arity mismatch: on takes 1 arg");
    const SceneObject* ground = args[0].instance;
    if (!ground) throw GroundingError("on: '" + t.args()[0].str() + "' is not a scene object");
    const Voxeme* gv = vx_.lookup(ground->pred, VoxemeKind::kObject);
    Region patch;
    try {
      patch = placement_region(*ground, gv ? gv->object() : nullptr, params_);
    } catch (const SpatialError& e) {
      throw GroundingError(e.what());
    }
    Vec3 p = patch.center();
    if (figure) p.y += 0.5 * figure->world_box().extents().y;
    return {Term::vector(p), args[0].event, nullptr};
  }

  const Voxicon& vx_;
  const SceneState& scene_;
  const SpatialParams& params_;
};

// --------------------------------------------------------------- execution

bool unify(const Term& pattern, const Term& ground, std::map<std::string, Term>& subst) {
  if (pattern.is_symbol()) {
    auto [it, inserted] = subst.emplace(pattern.name(), ground);
    return inserted || it->second == ground;
  }
  if (!pattern.is_apply()) return pattern == ground;
  if (!ground.is_call(pattern.name(), pattern.arity())) return false;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!unify(pattern.args()[i], ground.args()[i], subst)) return false;
  }
  return true;
}

std::optional<Vec3> location_of(const Term& t, const SceneState& s) {
  if (t.is_vector()) return t.vector_value();
  if (t.is_symbol()) {
    if (const SceneObject* o = s.find(t.name())) return o->position;
  }
  return std::nullopt;
}

// The point that has to reach the target when `mover` moves: the first
// object it holds, else the mover itself.
const SceneObject* reference_of(const std::string& mover, const SceneState& s) {
  for (const auto& [id, obj] : s.objects) {
    if (obj.attached_to == mover) return &obj;
  }
  return s.find(mover);
}

}  // namespace

Grounding ground(const Term& lf, const Voxicon& voxicon, const SceneState& scene,
                 const SpatialParams& params) {
  Grounder g(voxicon, scene, params);
  auto out = g.visit(lf, nullptr);
  return {out.term, out.event, std::move(g.log)};
}

void Binding::bind(const std::string& var, Value v) {
  if (!values.emplace(var, std::move(v)).second) {
    throw GroundingError("variable " + var + " bound twice");
  }
}

const Value* Binding::find(const std::string& var) const {
  auto it = values.find(var);
  return it == values.end() ? nullptr : &it->second;
}

Binding bind_arguments(const ProgramVoxeme& p, const Term& grounded, const SceneState& scene) {
  const auto& decl = p.args;
  const auto& given = grounded.args();
  bool implicit = false;
  if (given.size() != decl.size()) {
    bool has_agent = std::any_of(decl.begin(), decl.end(),
                                 [](const TypedVar& a) { return a.type == "agent"; });
    if (!(has_agent && given.size() + 1 == decl.size())) {
      throw GroundingError("arity mismatch: " + p.lex.pred + " declares " +
                           std::to_string(decl.size()) + " args, got " +
                           std::to_string(given.size()));
    }
    implicit = true;
  }

  Binding b;
  std::size_t k = 0;
  for (const auto& d : decl) {
    if (implicit && d.type == "agent") {
      implicit = false;
      auto agents = scene.instances_of("agent");
      if (agents.size() != 1) {
        throw GroundingError("implicit agent for " + p.lex.pred + ": scene has " +
                             std::to_string(agents.size()) + " agent instances");
      }
      b.bind(d.var, agents.front()->id);
      continue;
    }
    const Term& a = given[k++];
    if (d.type == "location" || d.type == "region") {
      auto loc = location_of(a, scene);
      if (!loc) throw GroundingError(d.str() + " cannot take " + a.str());
      b.bind(d.var, *loc);
    } else if (a.is_symbol() && scene.find(a.name())) {
      b.bind(d.var, a.name());
    } else {
      throw GroundingError(d.str() + " needs a scene object, got " + a.str());
    }
  }
  return b;
}

ProgramInstance operationalize(const ProgramVoxeme& p, const Binding& b) {
  ProgramInstance m;
  std::map<std::string, Term> subst;
  for (const auto& d : p.args) {
    const Value* v = b.find(d.var);
    if (!v) throw GroundingError("unbound argument " + d.var + " of " + p.lex.pred);
    if (const auto* id = std::get_if<std::string>(v)) {
      subst.emplace(d.var, Term::symbol(*id));
    } else {
      Vec3 loc = std::get<Vec3>(*v);
      subst.emplace(d.var, Term::vector(loc));
      if (!m.target_) m.target_ = loc;
    }
  }
  for (const Term& stmt : p.body) {
    for (const auto& pred : predicates_of(stmt)) {
      if (!primitive_symbols().count(pred)) {
        throw GroundingError("unknown primitive '" + pred + "' in " + p.lex.pred);
      }
    }
    m.body_.push_back(substitute(stmt, subst));
  }
  return m;
}

bool eval_guard(const Term& g, const SceneState& s, const InterpreterParams& params) {
  if (g.is_apply() && g.arity() == 2) {
    if (auto r = parse_rcc8(g.name())) {
      const SceneObject* a = s.find(g.args()[0].name());
      const SceneObject* c = s.find(g.args()[1].name());
      if (!a || !c) return false;
      return rcc8(a->world_box(), c->world_box(), params.spatial.contact_eps) == *r;
    }
    if (g.name() == "at") {
      auto a = location_of(g.args()[0], s);
      auto z = location_of(g.args()[1], s);
      return a && z && distance(*a, *z) <= params.at_eps;
    }
  }
  return s.has_fact(g);
}

std::pair<SceneState, std::optional<Term>> step(const SceneState& scene, ProgramInstance& m,
                                                const InterpreterParams& params) {
  SceneState s = scene;

  auto perform = [&](const Term& act) -> std::pair<SceneState, std::optional<Term>> {
    const auto& a = act.args();
    Term label = act;
    if (act.name() == "grasp") {
      s.attach(a[0].name(), a[1].name());
    } else if (act.name() == "ungrasp") {
      s.detach(a[0].name(), a[1].name());
    } else {  // move
      const std::string& mover = a[0].name();
      Vec3 delta{params.speed, 0.0, 0.0};
      if (m.target_) {
        Vec3 d = *m.target_ - reference_of(mover, s)->position;
        double dist = d.norm();
        delta = dist <= params.speed ? d : (params.speed / dist) * d;
      }
      s.translate(mover, delta);
      label = Term::apply("move", {a[0], Term::vector(delta)});
    }
    ++s.tick;
    return {std::move(s), std::move(label)};
  };

  auto reached = [&](const Term& act) {
    if (!act.is_call("move", 1) && !act.is_call("move", 2)) return false;
    if (!m.target_) return false;
    const SceneObject* ref = reference_of(act.args()[0].name(), s);
    return ref && distance(ref->position, *m.target_) <= params.at_eps;
  };

  while (!m.finished() && !m.stuck_) {
    const Term& stmt = m.body_[m.pc_];
    if (stmt.is_call("while", 2)) {
      const Term& act = stmt.args()[1];
      if (!is_action(act) || !eval_guard(stmt.args()[0], s, params) || reached(act)) {
        ++m.pc_;
        continue;
      }
      return perform(act);
    }
    if (stmt.is_call("cond", 2)) {
      if (!eval_guard(stmt.args()[0], s, params) || !is_action(stmt.args()[1])) {
        m.stuck_ = true;
        break;
      }
      ++m.pc_;
      return perform(stmt.args()[1]);
    }
    if (is_action(stmt)) {
      ++m.pc_;
      return perform(stmt);
    }
    // Bare guard: must already hold.
    if (!eval_guard(stmt, s, params)) {
      m.stuck_ = true;
      break;
    }
    ++m.pc_;
  }
  return {std::move(s), std::nullopt};
}

SceneState fire_affordances(const SceneState& scene, const Term& event, const Voxicon& voxicon,
                            const SpatialParams& params) {
  SceneState out = scene;
  if (!event.is_apply()) return out;
  std::set<std::string> seen;
  for (const Term& arg : event.args()) {
    if (!arg.is_symbol() || !seen.insert(arg.name()).second) continue;
    const SceneObject* owner = scene.find(arg.name());
    if (!owner) continue;
    const Voxeme* v = voxicon.lookup(owner->pred, VoxemeKind::kObject);
    if (!v) continue;
    const HabitatSpec& habitat = v->object()->habitat;

    for (const Affordance& a : v->object()->afford_str) {
      if (!a.result) continue;
      std::map<std::string, Term> subst;
      if (!unify(a.event, event, subst)) continue;
      bool owns = std::any_of(subst.begin(), subst.end(),
                              [&](const auto& kv) { return kv.second == arg; });
      if (!owns) continue;
      bool live = std::all_of(a.condition.begin(), a.condition.end(), [&](int i) {
        const HabitatGroup* g = habitat.find(i);
        return g && check_habitat_group(*g, *owner, scene, params);
      });
      if (!live) continue;

      Term r = substitute(*a.result, subst);
      if (r.is_call("hold", 2) && r.args()[0].is_symbol() && r.args()[1].is_symbol() &&
          out.attach(r.args()[0].name(), r.args()[1].name())) {
        continue;
      }
      out.facts.insert(std::move(r));
    }
  }
  return out;
}

Trace run(const Term& lf, const Voxicon& voxicon, const SceneState& scene,
          const InterpreterParams& params) {
  if (params.max_ticks <= 0) throw std::invalid_argument("max_ticks must be positive");
  if (!(params.speed > 0.0)) throw std::invalid_argument("speed must be positive");

  Grounding g = ground(lf, voxicon, scene, params.spatial);
  const Voxeme* v = lf.is_apply() ? voxicon.lookup(lf.name(), VoxemeKind::kProgram) : nullptr;
  if (!v) throw GroundingError("head is not a program: " + lf.str());

  Binding b = bind_arguments(*v->program(), g.term, scene);
  ProgramInstance m = operationalize(*v->program(), b);

  Trace trace;
  trace.initial = scene;
  trace.event = g.event;
  SceneState cur = scene;
  trace.outcome = Outcome::kCompleted;
  for (;;) {
    ProgramInstance probe = m;
    auto [next, action] = step(cur, probe, params);
    if (!action) {
      m = probe;
      break;
    }
    if (static_cast<long>(trace.transitions.size()) >= params.max_ticks) {
      trace.outcome = Outcome::kTickLimit;
      break;
    }
    m = probe;
    trace.transitions.push_back({cur, std::move(*action), next});
    cur = std::move(next);
  }
  if (trace.outcome == Outcome::kCompleted && m.stuck()) trace.outcome = Outcome::kStuck;

  // Results are folded into the last post-state; a run without transitions
  // has no post-state to carry them.
  if (trace.outcome == Outcome::kCompleted && !trace.transitions.empty()) {
    auto& last = trace.transitions.back().post;
    last = fire_affordances(last, trace.event, voxicon, params.spatial);
  }
  return trace;
}

}  // namespace voxml
