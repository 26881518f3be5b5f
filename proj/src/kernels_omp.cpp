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

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "voxml/error.hpp"
#include "voxml/kernels.hpp"

namespace voxml::kernels::omp {

std::vector<Rcc8> relation_matrix(std::span<const Box> boxes, double eps) {
  const std::int64_t n = static_cast<std::int64_t>(boxes.size());
  std::vector<Rcc8> out(static_cast<std::size_t>(n * n), Rcc8::kEQ);
  const Box* in = boxes.data();
  Rcc8* res = out.data();

#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n * n; ++k) {
    res[k] = rcc8(in[k / n], in[k % n], eps);
  }
  return out;
}

std::vector<Rcc8> classify_pairs(std::span<const Box> a, std::span<const Box> b, double eps) {
  if (a.size() != b.size()) throw std::invalid_argument("classify_pairs: length mismatch");
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  std::vector<Rcc8> out(a.size());
  const Box* pa = a.data();
  const Box* pb = b.data();
  Rcc8* res = out.data();

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    res[i] = rcc8(pa[i], pb[i], eps);
  }
  return out;
}

Box bounding_box(std::span<const Box> boxes) {
  if (boxes.empty()) throw SpatialError("bounding box of an empty set");
  const std::int64_t n = static_cast<std::int64_t>(boxes.size());
  const Box* in = boxes.data();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double lx = kInf, ly = kInf, lz = kInf;
  double hx = -kInf, hy = -kInf, hz = -kInf;

#pragma omp parallel for schedule(static) reduction(min : lx, ly, lz) reduction(max : hx, hy, hz)
  for (std::int64_t i = 0; i < n; ++i) {
    lx = std::min(lx, in[i].min.x);
    ly = std::min(ly, in[i].min.y);
    lz = std::min(lz, in[i].min.z);
    hx = std::max(hx, in[i].max.x);
    hy = std::max(hy, in[i].max.y);
    hz = std::max(hz, in[i].max.z);
  }
  return {{lx, ly, lz}, {hx, hy, hz}};
}

}  // namespace voxml::kernels::omp
