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

#ifndef VOXML_VALIDATE_HPP_
#define VOXML_VALIDATE_HPP_

#include <string>
#include <vector>

#include "voxml/model.hpp"

namespace voxml {

enum class Severity { kError, kWarning };

// A finding about one voxeme field, e.g.
//   error plate TYPE.REFLECTSYM: duplicate symmetry plane XY
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string pred;
  std::string path;
  std::string message;

  std::string str() const;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
  friend auto operator<=>(const Diagnostic&, const Diagnostic&) = default;
};

struct ValidationReport {
  std::vector<Diagnostic> items;

  int errors() const;
  int warnings() const;
  bool ok() const { return errors() == 0; }
  bool has(std::string_view message_fragment) const;
};

// Structural invariants of a single voxeme: coindexes, duplicate symmetry
// entries, habitat references, affordance and program variable scoping,
// RCC-8 values, dimension mappings. Elided blocks yield warnings only.
ValidationReport validate(const Voxeme& voxeme);

}  // namespace voxml

#endif  // VOXML_VALIDATE_HPP_
