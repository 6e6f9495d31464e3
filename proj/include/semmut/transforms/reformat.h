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

#ifndef SEMMUT_TRANSFORMS_REFORMAT_H_
#define SEMMUT_TRANSFORMS_REFORMAT_H_

#include <string>

#include "semmut/codemodel/syntax.h"

namespace semmut::transforms {

enum class LayoutStyle {
  // One statement per line, four-space indentation per brace level.
  kExpanded,
  // Everything on one line except where comments or directives need breaks.
  kCollapsed,
};

// Re-emits the unit's tokens, comments and directives with normalised
// whitespace. The token stream is unchanged.
std::string Reformat(const codemodel::SyntaxUnit& unit, LayoutStyle style);

}  // namespace semmut::transforms

#endif  // SEMMUT_TRANSFORMS_REFORMAT_H_
