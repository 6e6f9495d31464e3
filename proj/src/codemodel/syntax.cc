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

#include "semmut/codemodel/syntax.h"

#include <sstream>

namespace semmut::codemodel {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kFunctionDefinition: return "function_definition";
    case NodeKind::kDeclarationSpecifiers: return "declaration_specifiers";
    case NodeKind::kDeclaration: return "declaration";
    case NodeKind::kInitDeclarator: return "init_declarator";
    case NodeKind::kPointerDeclarator: return "pointer_declarator";
    case NodeKind::kArrayDeclarator: return "array_declarator";
    case NodeKind::kFunctionDeclarator: return "function_declarator";
    case NodeKind::kParenthesizedDeclarator: return "parenthesized_declarator";
    case NodeKind::kParameterList: return "parameter_list";
    case NodeKind::kParameterDeclaration: return "parameter_declaration";
    case NodeKind::kVariadicParameter: return "variadic_parameter";
    case NodeKind::kTypeName: return "type_descriptor";
    case NodeKind::kStructSpecifier: return "struct_specifier";
    case NodeKind::kEnumSpecifier: return "enum_specifier";
    case NodeKind::kEnumeratorList: return "enumerator_list";
    case NodeKind::kEnumerator: return "enumerator";
    case NodeKind::kFieldDeclarationList: return "field_declaration_list";
    case NodeKind::kFieldDeclaration: return "field_declaration";
    case NodeKind::kBitfieldDeclarator: return "bitfield_declarator";
    case NodeKind::kTypeofSpecifier: return "typeof_specifier";
    case NodeKind::kCompoundStatement: return "compound_statement";
    case NodeKind::kExpressionStatement: return "expression_statement";
    case NodeKind::kIfStatement: return "if_statement";
    case NodeKind::kWhileStatement: return "while_statement";
    case NodeKind::kDoStatement: return "do_statement";
    case NodeKind::kForStatement: return "for_statement";
    case NodeKind::kSwitchStatement: return "switch_statement";
    case NodeKind::kCaseStatement: return "case_statement";
    case NodeKind::kDefaultStatement: return "default_statement";
    case NodeKind::kLabeledStatement: return "labeled_statement";
    case NodeKind::kBreakStatement: return "break_statement";
    case NodeKind::kContinueStatement: return "continue_statement";
    case NodeKind::kReturnStatement: return "return_statement";
    case NodeKind::kGotoStatement: return "goto_statement";
    case NodeKind::kAsmStatement: return "asm_statement";
    case NodeKind::kMacroStatement: return "macro_statement";
    case NodeKind::kStaticAssert: return "static_assert_declaration";
    case NodeKind::kIdentifier: return "identifier";
    case NodeKind::kNumberLiteral: return "number_literal";
    case NodeKind::kStringLiteral: return "string_literal";
    case NodeKind::kCharLiteral: return "char_literal";
    case NodeKind::kParenthesizedExpression: return "parenthesized_expression";
    case NodeKind::kCallExpression: return "call_expression";
    case NodeKind::kArgumentList: return "argument_list";
    case NodeKind::kSubscriptExpression: return "subscript_expression";
    case NodeKind::kFieldExpression: return "field_expression";
    case NodeKind::kUpdateExpression: return "update_expression";
    case NodeKind::kUnaryExpression: return "unary_expression";
    case NodeKind::kPointerExpression: return "pointer_expression";
    case NodeKind::kCastExpression: return "cast_expression";
    case NodeKind::kSizeofExpression: return "sizeof_expression";
    case NodeKind::kBinaryExpression: return "binary_expression";
    case NodeKind::kConditionalExpression: return "conditional_expression";
    case NodeKind::kAssignmentExpression: return "assignment_expression";
    case NodeKind::kCommaExpression: return "comma_expression";
    case NodeKind::kCompoundLiteralExpression: return "compound_literal_expression";
    case NodeKind::kInitializerList: return "initializer_list";
    case NodeKind::kInitializerPair: return "initializer_pair";
    case NodeKind::kFieldDesignator: return "field_designator";
    case NodeKind::kSubscriptDesignator: return "subscript_designator";
    case NodeKind::kStatementExpression: return "statement_expression";
    case NodeKind::kFieldIdentifier: return "field_identifier";
    case NodeKind::kTypeIdentifier: return "type_identifier";
    case NodeKind::kStatementIdentifier: return "statement_identifier";
    case NodeKind::kError: return "ERROR";
  }
  return "unknown";
}

bool IsStatementKind(NodeKind kind) {
  switch (kind) {
    case NodeKind::kCompoundStatement:
    case NodeKind::kExpressionStatement:
    case NodeKind::kIfStatement:
    case NodeKind::kWhileStatement:
    case NodeKind::kDoStatement:
    case NodeKind::kForStatement:
    case NodeKind::kSwitchStatement:
    case NodeKind::kCaseStatement:
    case NodeKind::kDefaultStatement:
    case NodeKind::kLabeledStatement:
    case NodeKind::kBreakStatement:
    case NodeKind::kContinueStatement:
    case NodeKind::kReturnStatement:
    case NodeKind::kGotoStatement:
    case NodeKind::kAsmStatement:
    case NodeKind::kMacroStatement:
      return true;
    default:
      return false;
  }
}

std::string_view SyntaxUnit::NodeText(NodeId id) const {
  const Span s = node(id).span;
  return text().substr(s.begin, s.size());
}

std::string_view SyntaxUnit::TokenText(size_t index) const {
  const Span s = tokens()[index].span;
  return text().substr(s.begin, s.size());
}

std::string_view SyntaxUnit::OperatorText(NodeId id) const {
  const int32_t op = node(id).op_token;
  return op < 0 ? std::string_view() : TokenText(static_cast<size_t>(op));
}

void SyntaxUnit::Walk(NodeId from,
                      const std::function<bool(NodeId)>& visitor) const {
  if (from == kNoNode) return;
  std::vector<NodeId> stack = {from};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (!visitor(id)) continue;
    const auto& children = node(id).children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      if (*it != kNoNode) stack.push_back(*it);
    }
  }
}

std::vector<NodeId> SyntaxUnit::NodesOfKind(NodeKind kind) const {
  std::vector<NodeId> result;
  Walk(root(), [&](NodeId id) {
    if (node(id).kind == kind) result.push_back(id);
    return true;
  });
  return result;
}

NodeId SyntaxUnit::FunctionName() const {
  return DeclaredName(*this, node(root()).child(1));
}

NodeId SyntaxUnit::FunctionDeclarator() const {
  const NodeId declarator = node(root()).child(1);
  for (NodeId at = FunctionName(); at != kNoNode;) {
    at = node(at).parent;
    if (at != kNoNode && node(at).kind == NodeKind::kFunctionDeclarator) {
      return at;
    }
    if (at == declarator) break;
  }
  return kNoNode;
}

NodeId SyntaxUnit::FunctionBody() const { return node(root()).child(2); }

std::string SyntaxUnit::Dump() const {
  std::ostringstream out;
  std::function<void(NodeId)> dump = [&](NodeId id) {
    const Node& n = node(id);
    out << '(' << NodeKindName(n.kind);
    const bool named_leaf = n.kind == NodeKind::kIdentifier ||
                            n.kind == NodeKind::kFieldIdentifier ||
                            n.kind == NodeKind::kTypeIdentifier ||
                            n.kind == NodeKind::kStatementIdentifier;
    if (named_leaf) out << " \"" << NodeText(id) << '"';
    if (n.op_token >= 0) out << " op:\"" << OperatorText(id) << '"';
    for (NodeId child : n.children) {
      if (child == kNoNode) continue;
      out << ' ';
      dump(child);
    }
    out << ')';
  };
  if (root() != kNoNode) dump(root());
  return out.str();
}

NodeId DeclaredName(const SyntaxUnit& unit, NodeId declarator) {
  while (declarator != kNoNode) {
    const Node& n = unit.node(declarator);
    switch (n.kind) {
      case NodeKind::kIdentifier:
      case NodeKind::kFieldIdentifier:
        return declarator;
      case NodeKind::kPointerDeclarator:
      case NodeKind::kArrayDeclarator:
      case NodeKind::kFunctionDeclarator:
      case NodeKind::kParenthesizedDeclarator:
      case NodeKind::kBitfieldDeclarator:
      case NodeKind::kInitDeclarator:
        declarator = n.child(0);
        break;
      default:
        return kNoNode;
    }
  }
  return kNoNode;
}

NodeId StripParentheses(const SyntaxUnit& unit, NodeId expression) {
  while (expression != kNoNode &&
         unit.node(expression).kind == NodeKind::kParenthesizedExpression) {
    expression = unit.node(expression).child(0);
  }
  return expression;
}

}  // namespace semmut::codemodel
