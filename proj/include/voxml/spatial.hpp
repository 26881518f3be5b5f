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

// Qualitative spatial reasoning over a scene: habitat checks, spatial
// functions (top), placement regions for "on", symmetry confirmation and the
// minimal embedding space.

#ifndef VOXML_SPATIAL_HPP_
#define VOXML_SPATIAL_HPP_

#include <string>
#include <vector>

#include "voxml/geometry.hpp"
#include "voxml/model.hpp"
#include "voxml/scene.hpp"

namespace voxml {

struct SpatialParams {
  double contact_eps = 1e-6;     // world units
  double align_tol_deg = 5.0;    // alignment tolerance
  double ratio = 0.25;           // "<<" threshold: lesser <= ratio * greater
  double concave_depth = 0.5;    // fraction of Y extent a concavity sinks
  double concave_inset = 0.1;    // fraction of each horizontal extent trimmed per side
};

inline Box world_box(const SceneObject& obj) { return obj.world_box(); }

// Angle in degrees between the object's local signed axis, after its
// rotation, and a signed world axis.
double axis_deviation_deg(const SceneObject& obj, SignedAxis local, SignedAxis world);

// Evaluates one habitat constraint for `obj` in `scene`:
//   align(d, E_d')  local +d within align_tol_deg of world +d'
//   label(+A)       the local face along +A still faces world +A
//   A << B          extent(A) <= ratio * extent(B), object-local extents
//   p(c...)         fact p(obj.id, c...) holds in the scene
bool check_habitat(const HabitatConstraint& c, const SceneObject& obj, const SceneState& scene,
                   double align_tol_deg, double ratio);

// Every constraint of every entry of the group holds.
bool check_habitat_group(const HabitatGroup& group, const SceneObject& obj,
                         const SceneState& scene, const SpatialParams& params);

// Applies a dimension-reducing function such as top: the face, edge or
// endpoint of `target` extremal along the function's signed axis. For
// object-space functions the axis is first rotated by `object_rotation` and
// snapped to the nearest world axis. Throws SpatialError when the target is
// a point or has zero extent along the axis.
Region eval_spatial_function(const FunctionVoxeme& fn, const Region& target,
                             Vec3 object_rotation = {});

struct SymmetryClaim {
  bool rotational = true;  // false: reflection plane
  Axis axis = Axis::kY;    // rotational claims
  Plane plane = Plane::kXY;  // reflection claims
  bool confirmed = false;
  int order = 0;  // rotational only: 2 (180 degrees) or 4 (90 degrees as well)
  std::string detail;
  std::string name() const;
};

struct SymmetryReport {
  std::vector<SymmetryClaim> claims;
  bool all_confirmed() const;
  std::vector<std::string> unsupported() const;
};

// Confirms declared ROTATSYM/REFLECTSYM entries against a box proxy of the
// head shape with the given full extents. Tapering heads (pyramid, frustum,
// cupola, hemiellipsoid, prismatoid) are asymmetric along Y; a wedge along Y
// and Z. A rotation about A flips the two other axes, a reflection flips the
// plane normal; a claim holds when no flipped axis is asymmetric. Axes whose
// two orthogonal extents agree within `tol` are also checked at 90 degrees.
SymmetryReport check_symmetry_claims(const ObjectVoxeme& v, Vec3 proxy_extents, double tol);

// Region an object placed "on" `ground` rests on: the +Y face of its world
// box, or for concave grounds the face lowered by concave_depth * Y extent
// and inset by concave_inset per side. Throws SpatialError when the ground
// is not upright (local +Y beyond align_tol_deg of world +Y).
Region placement_region(const SceneObject& ground, const ObjectVoxeme* ground_voxeme,
                        const SpatialParams& params);

// Union of the objects' world boxes inflated by `margin`. Throws
// SpatialError on an empty list or negative margin.
Box minimal_embedding_space(const std::vector<SceneObject>& objects, double margin);
Box minimal_embedding_space(const SceneState& scene, double margin);

// Derived configuration facts: rel(a, b) for every pair of instances a < b
// (by id) whose RCC-8 relation is not DC.
std::vector<Term> relation_facts(const SceneState& scene, double eps);

}  // namespace voxml

#endif  // VOXML_SPATIAL_HPP_
