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

#include "src/transforms/support.h"

#include <cctype>

namespace semmut::transforms::internal {
namespace {

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool IsMacroLike(std::string_view name) {
  bool has_upper = false;
  for (char c : name) {
    if (std::islower(static_cast<unsigned char>(c))) return false;
    if (std::isupper(static_cast<unsigned char>(c))) has_upper = true;
  }
  return has_upper;
}

}  // namespace

bool ContainsWord(std::string_view text, std::string_view word) {
  for (size_t pos = text.find(word); pos != std::string_view::npos;
       pos = text.find(word, pos + 1)) {
    const bool left_ok = pos == 0 || !IsWordChar(text[pos - 1]);
    const size_t end = pos + word.size();
    const bool right_ok = end == text.size() || !IsWordChar(text[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

std::string FreshName(const SyntaxUnit& unit, std::string_view prefix) {
  for (int k = 0;; ++k) {
    std::string candidate = std::string(prefix) + std::to_string(k);
    if (!ContainsWord(unit.text(), candidate)) return candidate;
  }
}

bool MentionedInDirective(const SyntaxUnit& unit, std::string_view word) {
  for (const codemodel::Trivia& trivia : unit.trivia()) {
    if (trivia.kind != codemodel::Trivia::Kind::kDirective) continue;
    const std::string_view text =
        unit.text().substr(trivia.span.begin, trivia.span.size());
    if (ContainsWord(text, word)) return true;
  }
  return false;
}

bool IsLoop(NodeKind kind) {
  return kind == NodeKind::kForStatement || kind == NodeKind::kWhileStatement ||
         kind == NodeKind::kDoStatement;
}

bool HasBindingJump(const SyntaxUnit& unit, NodeId node, NodeKind kind) {
  bool found = false;
  unit.Walk(node, [&](NodeId id) {
    const NodeKind k = unit.node(id).kind;
    if (id != node && IsLoop(k)) return false;
    if (id != node && kind == NodeKind::kBreakStatement &&
        k == NodeKind::kSwitchStatement) {
      return false;
    }
    if (k == kind) found = true;
    return !found;
  });
  return found;
}

bool IsPureExpression(const SyntaxUnit& unit, NodeId expression) {
  if (expression == codemodel::kNoNode) return true;
  const codemodel::Node& node = unit.node(expression);
  switch (node.kind) {
    case NodeKind::kIdentifier:
      return !IsMacroLike(unit.NodeText(expression));
    case NodeKind::kNumberLiteral:
    case NodeKind::kStringLiteral:
    case NodeKind::kCharLiteral:
    case NodeKind::kTypeName:
    case NodeKind::kFieldIdentifier:
      return true;
    case NodeKind::kSizeofExpression:
      return true;
    case NodeKind::kParenthesizedExpression:
    case NodeKind::kUnaryExpression:
    case NodeKind::kPointerExpression:
    case NodeKind::kCastExpression:
    case NodeKind::kFieldExpression:
    case NodeKind::kSubscriptExpression:
    case NodeKind::kBinaryExpression:
    case NodeKind::kConditionalExpression:
      for (NodeId child : node.children) {
        if (!IsPureExpression(unit, child)) return false;
      }
      return true;
    default:
      return false;
  }
}

bool ParentIsCompound(const SyntaxUnit& unit, NodeId node) {
  const NodeId parent = unit.node(node).parent;
  return parent != codemodel::kNoNode &&
         unit.node(parent).kind == NodeKind::kCompoundStatement;
}

std::string Braced(const SyntaxUnit& unit, NodeId statement) {
  const std::string_view text = unit.NodeText(statement);
  if (unit.node(statement).kind == NodeKind::kCompoundStatement) {
    return std::string(text);
  }
  return "{" + std::string(text) + "}";
}

std::string_view SpecifierText(const SyntaxUnit& unit, NodeId declaration) {
  const codemodel::Node& decl = unit.node(declaration);
  const uint32_t begin = decl.span.begin;
  uint32_t end = unit.node(decl.child(1)).span.begin;
  std::string_view text = unit.text().substr(begin, end - begin);
  while (!text.empty() &&
         std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

bool SpecifiersHaveKeyword(const SyntaxUnit& unit, NodeId declaration,
                           std::string_view keyword) {
  const codemodel::Node& decl = unit.node(declaration);
  const uint32_t end = unit.node(decl.child(1)).first_token;
  for (uint32_t t = decl.first_token; t < end; ++t) {
    if (unit.TokenText(t) == keyword) return true;
  }
  return false;
}

uint32_t BodyOpenBrace(const SyntaxUnit& unit) {
  return unit.node(unit.FunctionBody()).first_token;
}

}  // namespace semmut::transforms::internal
