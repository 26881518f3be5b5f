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

#include <stdexcept>

#include "voxml/error.hpp"
#include "voxml/kernels.hpp"

namespace voxml::kernels::serial {

std::vector<Rcc8> relation_matrix(std::span<const Box> boxes, double eps) {
  const std::size_t n = boxes.size();
  std::vector<Rcc8> out(n * n, Rcc8::kEQ);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + j] = rcc8(boxes[i], boxes[j], eps);
    }
  }
  return out;
}

std::vector<Rcc8> classify_pairs(std::span<const Box> a, std::span<const Box> b, double eps) {
  if (a.size() != b.size()) throw std::invalid_argument("classify_pairs: length mismatch");
  std::vector<Rcc8> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = rcc8(a[i], b[i], eps);
  return out;
}

Box bounding_box(std::span<const Box> boxes) {
  if (boxes.empty()) throw SpatialError("bounding box of an empty set");
  Box u = boxes.front();
  for (const Box& b : boxes.subspan(1)) u = union_of(u, b);
  return u;
}

}  // namespace voxml::kernels::serial
