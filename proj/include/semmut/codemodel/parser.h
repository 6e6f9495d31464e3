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

#ifndef SEMMUT_CODEMODEL_PARSER_H_
#define SEMMUT_CODEMODEL_PARSER_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "semmut/codemodel/syntax.h"

namespace semmut::codemodel {

struct ParseFailure {
  // Byte offset of the first error; equals the text size at end-of-input.
  uint32_t position = 0;
  std::string message;
};

struct ParseOptions {
  // Statement-level errors are recovered into kError nodes. A function with
  // more error nodes than this is reported as a failure.
  uint32_t max_error_nodes = 0;
};

class ParseResult {
 public:
  explicit ParseResult(SyntaxUnit unit) : unit_(std::move(unit)) {}
  explicit ParseResult(ParseFailure failure) : failure_(std::move(failure)) {}

  bool ok() const { return unit_.has_value(); }
  const SyntaxUnit& unit() const { return *unit_; }
  const ParseFailure& failure() const { return *failure_; }

 private:
  std::optional<SyntaxUnit> unit_;
  std::optional<ParseFailure> failure_;
};

// Parses text holding exactly one C function definition. No preprocessing
// is performed: directives and comments are trivia and macro invocations are
// parsed as ordinary calls.
ParseResult ParseFunction(std::string_view text, const ParseOptions& options = {});

// True iff the unit contains an inline assembly statement.
bool ContainsInlineAssembly(const SyntaxUnit& unit);

}  // namespace semmut::codemodel

#endif  // SEMMUT_CODEMODEL_PARSER_H_
