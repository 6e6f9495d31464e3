// Copyright 2026 The Semmut Project Authors
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

#ifndef SEMMUT_CODEMODEL_RENDER_H_
#define SEMMUT_CODEMODEL_RENDER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semmut/codemodel/syntax.h"

namespace semmut::codemodel {

struct TextEdit {
  Span span;
  std::string replacement;
};

class OverlapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Replaces each edit's span of `text` with its replacement. Edits may be
// given in any order but must not overlap; two insertions at the same offset
// count as overlapping because their relative order would be ambiguous.
std::string Render(std::string_view text, std::vector<TextEdit> edits);

inline std::string Render(const SyntaxUnit& unit, std::vector<TextEdit> edits) {
  return Render(unit.text(), std::move(edits));
}

// Smallest span covering every edit.
Span EditHull(const std::vector<TextEdit>& edits);

}  // namespace semmut::codemodel

#endif  // SEMMUT_CODEMODEL_RENDER_H_
