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

// Batch spatial kernels. Each kernel has a serial reference in
// voxml::kernels::serial and an OpenMP version in voxml::kernels::omp with
// identical results; tests compare the two and bench/ times them.

#ifndef VOXML_KERNELS_HPP_
#define VOXML_KERNELS_HPP_

#include <span>
#include <vector>

#include "voxml/geometry.hpp"

namespace voxml::kernels {

namespace serial {

// Row-major n x n matrix with entry (i, j) = rcc8(boxes[i], boxes[j], eps).
std::vector<Rcc8> relation_matrix(std::span<const Box> boxes, double eps);

// Element-wise rcc8(a[i], b[i], eps); a and b must have equal length.
std::vector<Rcc8> classify_pairs(std::span<const Box> a, std::span<const Box> b, double eps);

// Smallest box containing every input box. Throws SpatialError when empty.
Box bounding_box(std::span<const Box> boxes);

}  // namespace serial

namespace omp {

std::vector<Rcc8> relation_matrix(std::span<const Box> boxes, double eps);
std::vector<Rcc8> classify_pairs(std::span<const Box> a, std::span<const Box> b, double eps);
Box bounding_box(std::span<const Box> boxes);

}  // namespace omp

}  // namespace voxml::kernels

#endif  // VOXML_KERNELS_HPP_
