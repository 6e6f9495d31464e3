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

#ifndef SEMMUT_CODEMODEL_LEXER_H_
#define SEMMUT_CODEMODEL_LEXER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semmut/codemodel/syntax.h"

namespace semmut::codemodel {

struct LexError {
  uint32_t position = 0;
  std::string message;
};

struct LexResult {
  std::vector<Token> tokens;
  // Comments and preprocessor directive lines, in document order.
  std::vector<Trivia> trivia;
  std::optional<LexError> error;
};

// Splits C source into tokens. Comments and directive lines become trivia;
// whitespace is dropped. Lexing stops at the first malformed construct.
LexResult Lex(std::string_view text);

bool IsKeyword(std::string_view word);

// Returns the byte offset of the first invalid UTF-8 sequence, if any.
std::optional<uint32_t> FindInvalidUtf8(std::string_view text);

}  // namespace semmut::codemodel

#endif  // SEMMUT_CODEMODEL_LEXER_H_
