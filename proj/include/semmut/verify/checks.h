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

#ifndef SEMMUT_VERIFY_CHECKS_H_
#define SEMMUT_VERIFY_CHECKS_H_

#include <optional>
#include <string>
#include <string_view>

#include "semmut/codemodel/syntax.h"
#include "semmut/transforms/operator.h"
#include "semmut/verify/verdict.h"

namespace semmut::verify {

inline constexpr std::string_view kDefaultCompilerCommand = "cc -std=c11 -O0";

struct StaticCheckOptions {
  // Formatting variants must keep the token stream; other variants must
  // keep every token outside `edit_span`.
  std::optional<transforms::Category> category;
  std::optional<codemodel::Span> edit_span;
};

// Parser-level preservation checks:
//   scope       no name resolved in the original gains unresolved uses;
//   locality    tokens outside the edit span are unchanged;
//   tokens      formatting variants have an identical token stream.
Verdict CheckStatic(const codemodel::SyntaxUnit& original,
                    const codemodel::SyntaxUnit& variant,
                    const StaticCheckOptions& options = {});

// Parses the variant's text and checks it against its parent.
Verdict CheckStatic(const codemodel::SyntaxUnit& original,
                    const transforms::Variant& variant);

// Header lines placed before every compiled function.
std::string_view CompilePrelude();

// Syntax-only compile of a function, preceded by the prelude and `int
// name();` for each unresolved callee. Unknown when the compiler cannot be
// started, or when `original_text` is given and does not compile itself.
Verdict CheckCompile(std::string_view variant_text,
                     std::string_view compiler_cmd = kDefaultCompilerCommand,
                     std::optional<std::string_view> original_text = {});

}  // namespace semmut::verify

#endif  // SEMMUT_VERIFY_CHECKS_H_
