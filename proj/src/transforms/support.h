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

#ifndef SEMMUT_TRANSFORMS_SUPPORT_H_
#define SEMMUT_TRANSFORMS_SUPPORT_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "semmut/codemodel/syntax.h"
#include "semmut/transforms/operator.h"

namespace semmut::transforms::internal {

using codemodel::NodeId;
using codemodel::NodeKind;
using codemodel::SyntaxUnit;

// True if `word` occurs in `text` delimited by non-identifier characters.
bool ContainsWord(std::string_view text, std::string_view word);

// `prefix` followed by the smallest k >= 0 such that the result does not
// occur as a word anywhere in the unit's text, comments included.
std::string FreshName(const SyntaxUnit& unit, std::string_view prefix);

// True if `word` occurs in a preprocessor directive of the unit.
bool MentionedInDirective(const SyntaxUnit& unit, std::string_view word);

bool IsLoop(NodeKind kind);

// True if the subtree of `node` holds a statement of `kind` (break or
// continue) that binds to the construct owning `node`. Jumps nested inside
// inner loops, and for `break` inner switches, are not counted.
bool HasBindingJump(const SyntaxUnit& unit, NodeId node, NodeKind kind);

// True for expressions without side effects: no calls, assignments,
// increments, comma operators or statement expressions. All-uppercase
// identifiers are assumed to be macros and rejected.
bool IsPureExpression(const SyntaxUnit& unit, NodeId expression);

bool ParentIsCompound(const SyntaxUnit& unit, NodeId node);

// The statement's text, wrapped in braces unless it already is a block.
std::string Braced(const SyntaxUnit& unit, NodeId statement);

// Text of the declaration specifiers of `declaration`, i.e. everything
// before its first init declarator, with trailing blanks removed.
std::string_view SpecifierText(const SyntaxUnit& unit, NodeId declaration);

bool SpecifiersHaveKeyword(const SyntaxUnit& unit, NodeId declaration,
                           std::string_view keyword);

// Opening brace token index of the function body.
uint32_t BodyOpenBrace(const SyntaxUnit& unit);

std::vector<std::unique_ptr<TransformOperator>> MakeRenamingOperators();
std::vector<std::unique_ptr<TransformOperator>> MakeControlFlowOperators();
std::vector<std::unique_ptr<TransformOperator>> MakeStatementOperators();
std::vector<std::unique_ptr<TransformOperator>> MakeInsertionOperators();
std::unique_ptr<TransformOperator> MakeReformatOperator();

}  // namespace semmut::transforms::internal

#endif  // SEMMUT_TRANSFORMS_SUPPORT_H_
