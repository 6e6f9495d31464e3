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

#ifndef SEMMUT_CODEMODEL_SYNTAX_H_
#define SEMMUT_CODEMODEL_SYNTAX_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace semmut::codemodel {

// Half-open byte range [begin, end) into a source text.
struct Span {
  uint32_t begin = 0;
  uint32_t end = 0;

  uint32_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool Contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind : uint8_t {
  kIdentifier,
  kKeyword,
  kNumber,
  kString,
  kChar,
  kPunctuator,
};

struct Token {
  TokenKind kind;
  Span span;
};

// Source bytes that are not part of the token stream.
struct Trivia {
  enum class Kind : uint8_t { kLineComment, kBlockComment, kDirective };
  Kind kind;
  Span span;
};

using NodeId = int32_t;
inline constexpr NodeId kNoNode = -1;

// Node kinds follow the naming of the tree-sitter C grammar where one exists.
// Child layouts are positional; optional children are stored as kNoNode.
enum class NodeKind : uint8_t {
  // [specifiers, declarator, body]
  kFunctionDefinition,
  // children: type_identifier / struct / enum / typeof nodes
  kDeclarationSpecifiers,
  // [specifiers, init_declarator...]
  kDeclaration,
  // [declarator, initializer or kNoNode]
  kInitDeclarator,
  // [inner or kNoNode]
  kPointerDeclarator,
  // [inner or kNoNode, size or kNoNode]
  kArrayDeclarator,
  // [inner or kNoNode, parameter_list]
  kFunctionDeclarator,
  // [inner]
  kParenthesizedDeclarator,
  // [parameter_declaration...]
  kParameterList,
  // [specifiers, declarator or kNoNode]
  kParameterDeclaration,
  kVariadicParameter,
  // [specifiers, abstract declarator or kNoNode]
  kTypeName,
  // [name or kNoNode, field_declaration_list or kNoNode]
  kStructSpecifier,
  // [name or kNoNode, enumerator_list or kNoNode]
  kEnumSpecifier,
  // [enumerator...]
  kEnumeratorList,
  // [identifier, value or kNoNode]
  kEnumerator,
  // [field_declaration...]
  kFieldDeclarationList,
  // [specifiers, declarator-or-bitfield...]
  kFieldDeclaration,
  // [declarator or kNoNode, width]
  kBitfieldDeclarator,
  // [expression or type_name]
  kTypeofSpecifier,

  // Statements.
  kCompoundStatement,
  // [expression or kNoNode]
  kExpressionStatement,
  // [condition, consequence, alternative or kNoNode]
  kIfStatement,
  // [condition, body]
  kWhileStatement,
  // [body, condition]
  kDoStatement,
  // [init (declaration/expression) or kNoNode, condition or kNoNode,
  //  update or kNoNode, body]
  kForStatement,
  // [condition, body]
  kSwitchStatement,
  // [value, range end or kNoNode, statement or kNoNode]
  kCaseStatement,
  // [statement or kNoNode]
  kDefaultStatement,
  // [statement_identifier, statement or kNoNode]
  kLabeledStatement,
  kBreakStatement,
  kContinueStatement,
  // [expression or kNoNode]
  kReturnStatement,
  // [statement_identifier or expression]
  kGotoStatement,
  // [string_literal, operand expressions..., label identifiers...]
  kAsmStatement,
  // Call-like macro used as a statement without a trailing semicolon.
  // [call_expression, statement or kNoNode]
  kMacroStatement,
  // [expression]
  kStaticAssert,

  // Expressions.
  kIdentifier,
  kNumberLiteral,
  // [identifier...] for macros interleaved with concatenated strings
  kStringLiteral,
  kCharLiteral,
  // [expression]
  kParenthesizedExpression,
  // [function, argument_list]
  kCallExpression,
  // [argument...]
  kArgumentList,
  // [argument, index]
  kSubscriptExpression,
  // [argument, field_identifier]
  kFieldExpression,
  // [argument]
  kUpdateExpression,
  // [argument]
  kUnaryExpression,
  // [argument]  operator * or &
  kPointerExpression,
  // [type_name, value]
  kCastExpression,
  // [expression or type_name]
  kSizeofExpression,
  // [left, right]
  kBinaryExpression,
  // [condition, consequence or kNoNode, alternative]
  kConditionalExpression,
  // [left, right]
  kAssignmentExpression,
  // [left, right]
  kCommaExpression,
  // [type_name, initializer_list]
  kCompoundLiteralExpression,
  // [item...]
  kInitializerList,
  // [designator..., value]
  kInitializerPair,
  // [field_identifier]
  kFieldDesignator,
  // [index, range end or kNoNode]
  kSubscriptDesignator,
  // [compound_statement]
  kStatementExpression,

  // Names outside the ordinary identifier namespace.
  kFieldIdentifier,
  kTypeIdentifier,
  kStatementIdentifier,

  kError,
};

std::string_view NodeKindName(NodeKind kind);

bool IsStatementKind(NodeKind kind);

struct Node {
  enum Flags : uint32_t {
    kNone = 0,
    // Identifier is the declared name of a declarator, enumerator or label.
    kDeclaredName = 1u << 0,
    // Update expression written in prefix form.
    kPrefix = 1u << 1,
    // Declaration whose specifiers include `typedef`.
    kTypedef = 1u << 2,
    // Declaration whose specifiers include `extern`.
    kExtern = 1u << 3,
    // Declaration whose specifiers include `static`.
    kStatic = 1u << 4,
  };

  NodeKind kind = NodeKind::kError;
  Span span;
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
  // Index of the operator token for operator-carrying expressions.
  int32_t op_token = -1;
  // First and one-past-last token of the node.
  uint32_t first_token = 0;
  uint32_t end_token = 0;
  uint32_t flags = kNone;

  bool Has(Flags flag) const { return (flags & flag) != 0; }
  NodeId child(size_t i) const {
    return i < children.size() ? children[i] : kNoNode;
  }
};

// An immutable parse of one C function definition. Copies share storage.
class SyntaxUnit {
 public:
  struct Data {
    std::string text;
    std::vector<Token> tokens;
    std::vector<Trivia> trivia;
    std::vector<Node> nodes;
    NodeId root = kNoNode;
    uint32_t error_count = 0;
  };

  explicit SyntaxUnit(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::string_view text() const { return data_->text; }
  const std::vector<Token>& tokens() const { return data_->tokens; }
  const std::vector<Trivia>& trivia() const { return data_->trivia; }
  const std::vector<Node>& nodes() const { return data_->nodes; }
  const Node& node(NodeId id) const { return data_->nodes[id]; }
  NodeId root() const { return data_->root; }
  uint32_t error_count() const { return data_->error_count; }

  std::string_view NodeText(NodeId id) const;
  std::string_view TokenText(size_t index) const;
  // Operator spelling for operator-carrying nodes; empty otherwise.
  std::string_view OperatorText(NodeId id) const;

  // Pre-order traversal. The visitor returns false to skip a subtree.
  void Walk(NodeId from, const std::function<bool(NodeId)>& visitor) const;
  // All nodes of `kind` in document (pre-)order.
  std::vector<NodeId> NodesOfKind(NodeKind kind) const;

  NodeId FunctionDeclarator() const;
  NodeId FunctionBody() const;
  // The identifier node naming the function.
  NodeId FunctionName() const;

  // S-expression rendering of the tree, for debugging and tests.
  std::string Dump() const;

 private:
  std::shared_ptr<const Data> data_;
};

// Descends through pointer/array/function/parenthesized declarators to the
// declared name. Returns kNoNode for abstract declarators.
NodeId DeclaredName(const SyntaxUnit& unit, NodeId declarator);

// Strips any number of enclosing parentheses from an expression.
NodeId StripParentheses(const SyntaxUnit& unit, NodeId expression);

}  // namespace semmut::codemodel

#endif  // SEMMUT_CODEMODEL_SYNTAX_H_
