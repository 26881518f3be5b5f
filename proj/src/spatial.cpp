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

#include "voxml/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "voxml/error.hpp"
#include "voxml/kernels.hpp"

namespace voxml {

double axis_deviation_deg(const SceneObject& obj, SignedAxis local, SignedAxis world) {
  Vec3 v = rotate(rotation_matrix(obj.rotation), Vec3::unit(local));
  double cosine = std::clamp(v.dot(Vec3::unit(world)), -1.0, 1.0);
  return std::acos(cosine) * 180.0 / std::numbers::pi;
}

bool check_habitat(const HabitatConstraint& c, const SceneObject& obj, const SceneState& scene,
                   double align_tol_deg, double ratio) {
  if (const auto* a = std::get_if<AlignConstraint>(&c)) {
    return axis_deviation_deg(obj, {a->object_axis, true}, {a->world_axis, true}) <= align_tol_deg;
  }
  if (const auto* f = std::get_if<FaceLabelConstraint>(&c)) {
    return axis_deviation_deg(obj, f->axis, f->axis) <= align_tol_deg;
  }
  if (const auto* r = std::get_if<RelativeDimConstraint>(&c)) {
    return obj.extents[r->lesser] <= ratio * obj.extents[r->greater];
  }
  const auto& p = std::get<PredicateConstraint>(c);
  if (!p.term.is_apply()) return scene.has_fact(p.term);
  std::vector<Term> args{Term::symbol(obj.id)};
  args.insert(args.end(), p.term.args().begin(), p.term.args().end());
  return scene.has_fact(Term::apply(p.term.name(), std::move(args)));
}

bool check_habitat_group(const HabitatGroup& group, const SceneObject& obj,
                         const SceneState& scene, const SpatialParams& params) {
  for (const auto& e : group.entries) {
    for (const auto& c : e.constraints) {
      if (!check_habitat(c, obj, scene, params.align_tol_deg, params.ratio)) return false;
    }
  }
  return true;
}

Region eval_spatial_function(const FunctionVoxeme& fn, const Region& target,
                             Vec3 object_rotation) {
  if (fn.mapping.reduction != 1) {
    throw SpatialError(fn.lex.pred + ": only dimension(n):n-1 mappings are supported");
  }
  int n = target.dimension();
  if (n < 1) throw SpatialError(fn.lex.pred + ": target is a point; nothing to reduce");

  SignedAxis axis = fn.orientation.axis;
  if (fn.orientation.space == FunctionSpace::kObject) {
    Vec3 v = rotate(rotation_matrix(object_rotation), Vec3::unit(axis));
    int best = 0;
    for (int i = 1; i < 3; ++i) {
      if (std::abs(v[i]) > std::abs(v[best])) best = i;
    }
    axis = {static_cast<Axis>(best), v[best] > 0.0};
  }

  int i = index_of(axis.axis);
  if (!(target.max[i] - target.min[i] > 0.0)) {
    throw SpatialError(fn.lex.pred + ": axis " + axis.str() + " is degenerate for a " +
                       target.carrier() + " target");
  }
  Region out = target;
  double extremal = axis.positive ? target.max[i] : target.min[i];
  out.min[i] = extremal;
  out.max[i] = extremal;
  return out;
}

std::string SymmetryClaim::name() const {
  return rotational ? std::string("ROTATSYM ") + axis_char(axis)
                    : "REFLECTSYM " + std::string(to_string(plane));
}

bool SymmetryReport::all_confirmed() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.confirmed; });
}

std::vector<std::string> SymmetryReport::unsupported() const {
  std::vector<std::string> out;
  for (const auto& c : claims) {
    if (!c.confirmed) out.push_back(c.name() + ": " + c.detail);
  }
  return out;
}

namespace {

// Axes along which the head primitive differs between its + and - side in
// canonical upright orientation.
std::set<Axis> asymmetric_axes(HeadShape head) {
  switch (head) {
    case HeadShape::kPrismatoid:
    case HeadShape::kPyramid:
    case HeadShape::kCupola:
    case HeadShape::kFrustum:
    case HeadShape::kHemiellipsoid:
      return {Axis::kY};
    case HeadShape::kWedge:
      return {Axis::kY, Axis::kZ};
    default:
      return {};
  }
}

std::pair<Axis, Axis> orthogonal(Axis a) {
  switch (a) {
    case Axis::kX:
      return {Axis::kY, Axis::kZ};
    case Axis::kY:
      return {Axis::kX, Axis::kZ};
    case Axis::kZ:
      return {Axis::kX, Axis::kY};
  }
  return {Axis::kX, Axis::kY};
}

}  // namespace

SymmetryReport check_symmetry_claims(const ObjectVoxeme& v, Vec3 extents, double tol) {
  SymmetryReport report;
  const auto asym = asymmetric_axes(canonicalize_head(v.type.head.shape, v.type.reflect_sym));
  const std::string head(to_string(v.type.head.shape));

  for (Axis a : v.type.rotat_sym) {
    SymmetryClaim claim;
    claim.rotational = true;
    claim.axis = a;
    auto [u, w] = orthogonal(a);
    // A half turn about `a` maps the box onto itself and flips u and w.
    if (asym.count(u) || asym.count(w)) {
      claim.detail = "a half turn flips the " + head + " proxy along its asymmetric axis";
    } else {
      claim.confirmed = true;
      claim.order = 2;
      // A quarter turn swaps u and w: extents must match.
      if (std::abs(extents[u] - extents[w]) <= tol) claim.order = 4;
    }
    report.claims.push_back(claim);
  }
  for (Plane p : v.type.reflect_sym) {
    SymmetryClaim claim;
    claim.rotational = false;
    claim.plane = p;
    Axis normal = plane_normal(p);
    if (asym.count(normal)) {
      claim.detail = std::string("mirroring flips the ") + head + " proxy along " + axis_char(normal);
    } else {
      claim.confirmed = true;
    }
    report.claims.push_back(claim);
  }
  return report;
}

Region placement_region(const SceneObject& ground, const ObjectVoxeme* ground_voxeme,
                        const SpatialParams& params) {
  if (axis_deviation_deg(ground, {Axis::kY, true}, {Axis::kY, true}) > params.align_tol_deg) {
    throw SpatialError("support habitat unsatisfied: " + ground.id + " is not upright");
  }
  if (ground_voxeme) {
    for (const auto& g : ground_voxeme->habitat.intrinsic) {
      for (const auto& e : g.entries) {
        for (const auto& c : e.constraints) {
          const auto* a = std::get_if<AlignConstraint>(&c);
          if (a && a->world_axis == Axis::kY &&
              axis_deviation_deg(ground, {a->object_axis, true}, {Axis::kY, true}) >
                  params.align_tol_deg) {
            throw SpatialError("support habitat unsatisfied: " + ground.id + " fails " + e.label);
          }
        }
      }
    }
  }

  Box box = ground.world_box();
  Region top{box.min, box.max};
  top.min.y = box.max.y;
  if (ground_voxeme && ground_voxeme->type.concavity == Concavity::kConcave) {
    Vec3 ext = box.extents();
    double y = box.max.y - params.concave_depth * ext.y;
    top.min.y = y;
    top.max.y = y;
    for (Axis a : {Axis::kX, Axis::kZ}) {
      double inset = params.concave_inset * ext[a];
      top.min[a] = box.min[a] + inset;
      top.max[a] = box.max[a] - inset;
    }
  }
  return top;
}

Box minimal_embedding_space(const std::vector<SceneObject>& objects, double margin) {
  if (objects.empty()) throw SpatialError("minimal embedding space of no objects");
  if (margin < 0.0) throw SpatialError("negative margin");
  std::vector<Box> boxes;
  boxes.reserve(objects.size());
  for (const auto& o : objects) boxes.push_back(o.world_box());
  return kernels::omp::bounding_box(boxes).inflated(margin);
}

Box minimal_embedding_space(const SceneState& scene, double margin) {
  std::vector<SceneObject> objects;
  for (const auto& [id, obj] : scene.objects) objects.push_back(obj);
  return minimal_embedding_space(objects, margin);
}

std::vector<Term> relation_facts(const SceneState& scene, double eps) {
  std::vector<const SceneObject*> objs;
  std::vector<Box> boxes;
  for (const auto& [id, obj] : scene.objects) {
    objs.push_back(&obj);
    boxes.push_back(obj.world_box());
  }
  const auto matrix = kernels::omp::relation_matrix(boxes, eps);
  const std::size_t n = objs.size();
  std::vector<Term> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rcc8 r = matrix[i * n + j];
      if (r == Rcc8::kDC) continue;
      out.push_back(Term::apply(std::string(to_string(r)),
                                {Term::symbol(objs[i]->id), Term::symbol(objs[j]->id)}));
    }
  }
  return out;
}

}  // namespace voxml
