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

// voxml: validate, lint and query voxicons; ground and simulate logical
// forms over a scene.
//
// Exit status: 0 ok, 1 validation/lint errors (or lookup miss), 2 parse
// error, 3 grounding/simulation failure, 4 bad invocation or missing file.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "voxml/error.hpp"
#include "voxml/interpreter.hpp"
#include "voxml/io.hpp"
#include "voxml/scene.hpp"
#include "voxml/spatial.hpp"
#include "voxml/trace.hpp"
#include "voxml/validate.hpp"
#include "voxml/voxicon.hpp"

namespace {

using namespace voxml;

enum Exit { kOk = 0, kInvalid = 1, kParse = 2, kGround = 3, kUsage = 4 };

struct MissingFile {
  std::string path;
};

void require_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw MissingFile{path};
}

void report(const VoxiconParseError& e, const std::string& path) {
  for (const auto& entry : e.entries()) {
    std::cerr << path << ":" << entry.error.what();
    if (entry.index >= 0) std::cerr << " (entry " << entry.index + 1 << ")";
    std::cerr << "\n";
  }
}

Voxicon load_all(const std::vector<std::string>& paths) {
  Voxicon vx;
  for (const auto& p : paths) {
    require_file(p);
    try {
      vx.merge(load_voxicon(p));
    } catch (const VoxiconParseError& e) {
      report(e, p);
      throw;
    }
  }
  return vx;
}

SceneState load_scene_file(const std::string& path) {
  require_file(path);
  try {
    return load_scene(path);
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    throw;
  }
}

Term parse_lf(const std::string& text) {
  try {
    return parse_logical_form(text);
  } catch (const ParseError& e) {
    std::cerr << "<lf>:" << e.what() << "\n";
    throw;
  }
}

// Facts with instance ids replaced by their voxeme predicates, e.g.
// hold(plate1, apple1) -> hold(plate, apple).
Term typed(const Term& t, const SceneState& s) {
  if (t.is_symbol()) {
    const SceneObject* o = s.find(t.name());
    return o ? Term::symbol(o->pred) : t;
  }
  if (!t.is_apply()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(typed(a, s));
  return Term::apply(t.name(), std::move(args));
}

struct Options {
  std::vector<std::string> voxicons;
  std::string scene;
  std::string out;
  std::string kind;
  double eps = 1e-6;
  double at_eps = 1e-3;
  double align_tol = 5.0;
  double ratio = 0.25;
  double speed = 0.1;
  long max_ticks = 10000;
  double margin = 0.0;

  InterpreterParams params() const {
    InterpreterParams p;
    p.speed = speed;
    p.max_ticks = max_ticks;
    p.at_eps = at_eps;
    p.spatial.contact_eps = eps;
    p.spatial.align_tol_deg = align_tol;
    p.spatial.ratio = ratio;
    return p;
  }
};

int cmd_validate(const std::vector<std::string>& files) {
  int status = kOk;
  for (const auto& path : files) {
    require_file(path);
    Voxicon vx;
    try {
      vx = parse_voxicon(read_file(path));
    } catch (const VoxiconParseError& e) {
      report(e, path);
      if (!e.schema_only()) return kParse;
      status = kInvalid;
      continue;
    }
    // Second pass only for entry positions; the text is known to parse.
    std::vector<SourcePos> where;
    parse_voxemes(read_file(path), &where);
    for (std::size_t i = 0; i < vx.entries().size(); ++i) {
      const Voxeme& v = vx.entries()[i];
      auto r = validate(v);
      std::cout << path << ":" << where[i].str() << ": " << to_string(v.kind()) << " "
                << v.pred() << ": " << (r.ok() ? "ok" : "invalid") << " (" << r.errors()
                << " errors, " << r.warnings() << " warnings)\n";
      for (const auto& d : r.items) std::cout << "  " << d.str() << "\n";
      if (!r.ok()) status = kInvalid;
    }
  }
  return status;
}

int cmd_lint(const Options& o) {
  Voxicon vx = load_all(o.voxicons);
  int status = kOk;
  for (const auto& v : vx.entries()) {
    for (const auto& d : validate(v).items) {
      std::cout << d.str() << "\n";
      if (d.severity == Severity::kError) status = kInvalid;
    }
  }
  for (const auto& d : lint(vx, primitive_symbols())) {
    std::cout << d.str() << "\n";
    if (d.severity == Severity::kError) status = kInvalid;
  }
  return status;
}

int cmd_lookup(const std::string& pred, const Options& o) {
  Voxicon vx = load_all(o.voxicons);
  const Voxeme* v = nullptr;
  if (o.kind.empty()) {
    v = vx.lookup_any(pred);
  } else {
    auto k = parse_voxeme_kind(o.kind);
    if (!k) {
      std::cerr << "unknown kind '" << o.kind << "'\n";
      return kUsage;
    }
    v = vx.lookup(pred, *k);
  }
  if (!v) {
    std::cerr << "no voxeme '" << pred << "'\n";
    return kInvalid;
  }
  std::cout << serialize_voxeme(*v);
  return kOk;
}

int cmd_stats(const Options& o) {
  std::cout << stats(load_all(o.voxicons)).str();
  return kOk;
}

int cmd_eval(const std::string& text, const Options& o) {
  Term lf = parse_lf(text);
  Voxicon vx = load_all(o.voxicons);
  SceneState scene = load_scene_file(o.scene);
  Grounding g = ground(lf, vx, scene, o.params().spatial);
  std::cout << g.term.str() << "\n";
  for (std::size_t i = 0; i < g.log.size(); ++i) {
    std::cout << "  " << i + 1 << ". " << g.log[i].str() << "\n";
  }
  return kOk;
}

int cmd_simulate(const std::string& text, const Options& o) {
  Term lf = parse_lf(text);
  Voxicon vx = load_all(o.voxicons);
  SceneState scene = load_scene_file(o.scene);
  InterpreterParams params = o.params();
  Trace trace = run(lf, vx, scene, params);
  std::string records = serialize_trace(trace, params.spatial.contact_eps);

  std::ostream* summary = &std::cout;
  if (o.out.empty()) {
    std::cout << records;
    summary = &std::cerr;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return kUsage;
    }
    f << records;
  }
  const SceneState& last = trace.final_state();
  *summary << "outcome: " << to_string(trace.outcome) << "\n"
           << "ticks: " << trace.transitions.size() << "\n"
           << "moves: " << trace.count("move") << "\n"
           << "facts:";
  for (const auto& f : last.facts) *summary << " " << f.str() << ";";
  *summary << "\nfacts by type:";
  for (const auto& f : last.facts) *summary << " " << typed(f, last).str() << ";";
  *summary << "\n";
  return trace.outcome == Outcome::kCompleted ? kOk : kGround;
}

int cmd_mes(const Options& o) {
  SceneState scene = load_scene_file(o.scene);
  Box b = minimal_embedding_space(scene, o.margin);
  std::cout << b.str() << "\n";
  return kOk;
}

void add_voxicon(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("--voxicon", o.voxicons, "Voxicon file (.vox); repeatable");
  if (required) opt->required();
}

void add_spatial(CLI::App* cmd, Options& o) {
  cmd->add_option("--eps", o.eps, "Contact tolerance for RCC-8 tests")->capture_default_str();
  cmd->add_option("--align-tol", o.align_tol, "Alignment tolerance in degrees")
      ->capture_default_str();
  cmd->add_option("--ratio", o.ratio, "Threshold for '<<' constraints")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VoxML voxicon tools, grounding and simulation"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> files;
  std::string text;

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate voxicon files");
  validate_cmd->add_option("files", files, "Voxicon files")->required();

  auto* lint_cmd = app.add_subcommand("lint", "Cross-reference checks over a voxicon");
  add_voxicon(lint_cmd, o, false);
  lint_cmd->add_option("files", o.voxicons, "Voxicon files");

  auto* lookup_cmd = app.add_subcommand("lookup", "Print one voxeme");
  lookup_cmd->add_option("pred", text, "Predicate")->required();
  lookup_cmd->add_option("--kind", o.kind, "object, program, attribute, relation or function");
  add_voxicon(lookup_cmd, o, true);

  auto* stats_cmd = app.add_subcommand("stats", "Count entries by kind and type");
  add_voxicon(stats_cmd, o, true);

  auto* eval_cmd = app.add_subcommand("eval", "Ground a logical form, innermost first");
  eval_cmd->add_option("lf", text, "Logical form, e.g. put(apple, on(plate))")->required();
  add_voxicon(eval_cmd, o, true);
  eval_cmd->add_option("--scene", o.scene, "Scene file")->required();
  add_spatial(eval_cmd, o);

  auto* sim_cmd = app.add_subcommand("simulate", "Run a program over a scene and emit a trace");
  sim_cmd->add_option("lf", text, "Logical form")->required();
  add_voxicon(sim_cmd, o, true);
  sim_cmd->add_option("--scene", o.scene, "Scene file")->required();
  add_spatial(sim_cmd, o);
  sim_cmd->add_option("--at-eps", o.at_eps, "Tolerance of the at() guard")->capture_default_str();
  sim_cmd->add_option("--speed", o.speed, "Move distance per tick")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim_cmd->add_option("--max-ticks", o.max_ticks, "Tick budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim_cmd->add_option("--out", o.out, "Trace file (default: standard output)");

  auto* mes_cmd = app.add_subcommand("mes", "Minimal embedding space of a scene");
  mes_cmd->add_option("--scene", o.scene, "Scene file")->required();
  mes_cmd->add_option("--margin", o.margin, "Inflation on every side")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(files);
    if (*lint_cmd) return cmd_lint(o);
    if (*lookup_cmd) return cmd_lookup(text, o);
    if (*stats_cmd) return cmd_stats(o);
    if (*eval_cmd) return cmd_eval(text, o);
    if (*sim_cmd) return cmd_simulate(text, o);
    if (*mes_cmd) return cmd_mes(o);
  } catch (const MissingFile& e) {
    std::cerr << "no such file: " << e.path << "\n";
    return kUsage;
  } catch (const VoxiconParseError&) {
    return kParse;  // already reported with file and position
  } catch (const ParseError&) {
    return kParse;
  } catch (const GroundingError& e) {
    std::cerr << "grounding failed: " << e.what() << "\n";
    return kGround;
  } catch (const SpatialError& e) {
    std::cerr << "spatial failure: " << e.what() << "\n";
    return kGround;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
