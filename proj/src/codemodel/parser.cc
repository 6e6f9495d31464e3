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

#include "semmut/codemodel/parser.h"

#include <cctype>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "semmut/codemodel/lexer.h"

namespace semmut::codemodel {
namespace {

struct SyntaxError {
  size_t token;
  std::string message;
};

bool InSet(std::string_view word,
           const std::unordered_set<std::string_view>& set) {
  return set.contains(word);
}

bool IsTypeSpecifierKeyword(std::string_view w) {
  static const std::unordered_set<std::string_view> kSet = {
      "void",      "char",       "short",    "int",      "long",
      "float",     "double",     "signed",   "unsigned", "_Bool",
      "_Complex",  "_Imaginary", "__int128", "__signed__", "__signed",
      "struct",    "union",      "enum",     "typeof",   "__typeof__",
      "__typeof"};
  return InSet(w, kSet);
}

bool IsQualifierKeyword(std::string_view w) {
  static const std::unordered_set<std::string_view> kSet = {
      "const",    "volatile",     "restrict",     "__restrict",
      "__restrict__", "_Atomic",  "__const",      "__const__",
      "__volatile__", "__volatile"};
  return InSet(w, kSet);
}

bool IsStorageKeyword(std::string_view w) {
  static const std::unordered_set<std::string_view> kSet = {
      "static", "extern",   "auto",     "register",   "typedef",
      "_Thread_local", "__thread", "inline", "__inline", "__inline__",
      "_Noreturn", "_Alignas", "__extension__"};
  return InSet(w, kSet);
}

bool IsAttributeKeyword(std::string_view w) {
  return w == "__attribute__" || w == "__attribute" || w == "__declspec";
}

bool IsAsmKeyword(std::string_view w) {
  return w == "asm" || w == "__asm__" || w == "__asm";
}

bool IsAssignmentOperator(std::string_view w) {
  static const std::unordered_set<std::string_view> kSet = {
      "=", "*=", "/=", "%=", "+=", "-=", "<<=", ">>=", "&=", "^=", "|="};
  return InSet(w, kSet);
}

int BinaryPrecedence(std::string_view op) {
  static const std::unordered_map<std::string_view, int> kPrec = {
      {"||", 1}, {"&&", 2}, {"|", 3},  {"^", 4},  {"&", 5},
      {"==", 6}, {"!=", 6}, {"<", 7},  {">", 7},  {"<=", 7},
      {">=", 7}, {"<<", 8}, {">>", 8}, {"+", 9},  {"-", 9},
      {"*", 10}, {"/", 10}, {"%", 10}};
  auto it = kPrec.find(op);
  return it == kPrec.end() ? 0 : it->second;
}

// Names that read like type names: `uint8_t`, `AVFrame`.
bool LooksLikeTypeName(std::string_view name) {
  if (name.size() > 2 && name.ends_with("_t")) return true;
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char c : name) {
    if (std::islower(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

bool LooksLikeMacroName(std::string_view name) {
  for (char c : name) {
    if (std::islower(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

NodeId DeclaredNameIn(const std::vector<Node>& nodes, NodeId declarator) {
  while (declarator != kNoNode) {
    const Node& n = nodes[declarator];
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

enum class TypeContext { kCast, kSizeof, kArgument };

class Parser {
 public:
  Parser(std::string_view text, std::vector<Token> tokens,
         const ParseOptions& options)
      : text_(text), tokens_(std::move(tokens)), options_(options) {}

  NodeId ParseFunctionDefinition();

  std::vector<Node> TakeNodes() { return std::move(nodes_); }
  std::vector<Token> TakeTokens() { return std::move(tokens_); }
  uint32_t error_count() const { return error_count_; }
  const std::optional<SyntaxError>& first_error() const {
    return first_error_;
  }

 private:
  enum class NameKind { kVariable, kTypedef };
  enum class DeclaratorMode { kNamed, kOptional, kAbstract };

  // Token access.
  bool AtEnd() const { return pos_ >= tokens_.size(); }
  std::string_view Text(size_t i) const {
    if (i >= tokens_.size()) return {};
    const Span s = tokens_[i].span;
    return text_.substr(s.begin, s.size());
  }
  std::string_view Cur() const { return Text(pos_); }
  std::string_view Ahead(size_t k) const { return Text(pos_ + k); }
  bool KindIs(size_t i, TokenKind kind) const {
    return i < tokens_.size() && tokens_[i].kind == kind;
  }
  bool IsPunct(size_t i, std::string_view p) const {
    return KindIs(i, TokenKind::kPunctuator) && Text(i) == p;
  }
  bool IsKw(size_t i, std::string_view k) const {
    return KindIs(i, TokenKind::kKeyword) && Text(i) == k;
  }
  bool CurIs(std::string_view p) const {
    return !AtEnd() && Cur() == p &&
           tokens_[pos_].kind != TokenKind::kString &&
           tokens_[pos_].kind != TokenKind::kChar;
  }
  bool Accept(std::string_view p) {
    if (CurIs(p)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void Expect(std::string_view p) {
    if (!Accept(p)) Fail("expected '" + std::string(p) + "'");
  }
  [[noreturn]] void Fail(std::string message) const {
    throw SyntaxError{pos_, std::move(message)};
  }

  // Node construction.
  NodeId Make(NodeKind kind, size_t first, std::vector<NodeId> children,
              int32_t op = -1, uint32_t flags = Node::kNone) {
    Node node;
    node.kind = kind;
    node.first_token = static_cast<uint32_t>(first);
    node.end_token = static_cast<uint32_t>(pos_);
    node.span = {tokens_[first].span.begin, tokens_[pos_ - 1].span.end};
    node.children = std::move(children);
    node.op_token = op;
    node.flags = flags;
    const NodeId id = static_cast<NodeId>(nodes_.size());
    for (NodeId child : node.children) {
      if (child != kNoNode) nodes_[child].parent = id;
    }
    nodes_.push_back(std::move(node));
    return id;
  }
  NodeId Leaf(NodeKind kind, uint32_t flags = Node::kNone) {
    const size_t first = pos_++;
    return Make(kind, first, {}, -1, flags);
  }

  // Name tracking for the typedef ambiguity.
  void PushScope() { scopes_.emplace_back(); }
  void PopScope() { scopes_.pop_back(); }
  void Declare(std::string_view name, NameKind kind) {
    if (!scopes_.empty() && !name.empty()) {
      scopes_.back()[std::string(name)] = kind;
    }
  }
  std::optional<NameKind> Lookup(std::string_view name) const {
    const std::string key(name);
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(key);
      if (found != it->end()) return found->second;
    }
    return std::nullopt;
  }
  void DeclareFromDeclarator(NodeId declarator, NameKind kind) {
    const NodeId name = DeclaredNameIn(nodes_, declarator);
    if (name != kNoNode) {
      const Span s = nodes_[name].span;
      Declare(text_.substr(s.begin, s.size()), kind);
    }
  }

  bool TypeNameAt(size_t i, TypeContext context) const;
  bool LooksLikeDeclaration() const;

  void SkipBalanced();
  void SkipAttributes();

  // Declarations.
  NodeId ParseDeclarationSpecifiers(uint32_t* flags);
  NodeId ParseStructSpecifier();
  NodeId ParseEnumSpecifier();
  NodeId ParseTypeofSpecifier();
  NodeId ParseFieldDeclarationList();
  NodeId ParseDeclarator(DeclaratorMode mode, bool field_name = false);
  bool ParenthesisStartsDeclarator(DeclaratorMode mode) const;
  NodeId ParseParameterList();
  NodeId ParseDeclaration();
  NodeId ParseInitializer();
  NodeId ParseInitializerList();
  NodeId ParseTypeName();

  // Statements.
  NodeId ParseCompound(bool new_scope);
  NodeId ParseBlockItemRecovering();
  NodeId ParseBlockItem();
  NodeId ParseStatement();
  NodeId ParseAsm();

  // Expressions.
  NodeId ParseExpression();
  NodeId ParseAssignment();
  NodeId ParseConditional();
  NodeId ParseBinary(int min_precedence);
  NodeId ParseCast();
  NodeId ParseUnary();
  NodeId ParsePostfixTail(NodeId expression, size_t first);
  NodeId ParsePrimary();
  NodeId ParseArgumentList();
  NodeId ParseStringLiteral();

  std::string_view text_;
  std::vector<Token> tokens_;
  ParseOptions options_;
  size_t pos_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::unordered_map<std::string, NameKind>> scopes_;
  uint32_t error_count_ = 0;
  std::optional<SyntaxError> first_error_;
};

bool Parser::TypeNameAt(size_t i, TypeContext context) const {
  if (i >= tokens_.size()) return false;
  const std::string_view word = Text(i);
  if (tokens_[i].kind == TokenKind::kKeyword) {
    return IsTypeSpecifierKeyword(word) || IsQualifierKeyword(word) ||
           IsAttributeKeyword(word);
  }
  if (tokens_[i].kind != TokenKind::kIdentifier) return false;
  if (auto kind = Lookup(word)) return *kind == NameKind::kTypedef;

  const std::string_view next = Text(i + 1);
  if (KindIs(i + 1, TokenKind::kIdentifier)) {
    return context != TypeContext::kArgument;
  }
  if (KindIs(i + 1, TokenKind::kKeyword) && IsQualifierKeyword(next)) {
    return true;
  }
  if (next == "*") {
    size_t j = i + 1;
    while (j < tokens_.size() &&
           (IsPunct(j, "*") ||
            (KindIs(j, TokenKind::kKeyword) && IsQualifierKeyword(Text(j))))) {
      ++j;
    }
    if (IsPunct(j, ")")) return true;
    return context == TypeContext::kArgument && IsPunct(j, ",");
  }
  if (next == "(" && context != TypeContext::kArgument) {
    return IsPunct(i + 2, "*") && IsPunct(i + 3, ")");
  }
  if (next != ")") return false;
  switch (context) {
    case TypeContext::kArgument:
      return false;
    case TypeContext::kSizeof:
      return LooksLikeTypeName(word);
    case TypeContext::kCast: {
      const size_t after = i + 2;
      if (after >= tokens_.size()) return false;
      const TokenKind kind = tokens_[after].kind;
      const std::string_view t = Text(after);
      if (kind == TokenKind::kIdentifier || kind == TokenKind::kNumber ||
          kind == TokenKind::kString || kind == TokenKind::kChar) {
        return true;
      }
      if (kind == TokenKind::kKeyword) {
        return t == "sizeof" || t == "_Alignof" || t == "__alignof__";
      }
      if (t == "(" || t == "{" || t == "~" || t == "!") return true;
      if (t == "*" || t == "&" || t == "-" || t == "+" || t == "++" ||
          t == "--") {
        return LooksLikeTypeName(word);
      }
      return false;
    }
  }
  return false;
}

bool Parser::LooksLikeDeclaration() const {
  if (AtEnd()) return false;
  const std::string_view word = Cur();
  if (tokens_[pos_].kind == TokenKind::kKeyword) {
    if (word == "__extension__") {
      return KindIs(pos_ + 1, TokenKind::kKeyword) &&
             (IsTypeSpecifierKeyword(Ahead(1)) || IsQualifierKeyword(Ahead(1)) ||
              IsStorageKeyword(Ahead(1)));
    }
    return IsTypeSpecifierKeyword(word) || IsQualifierKeyword(word) ||
           IsStorageKeyword(word) || IsAttributeKeyword(word);
  }
  if (tokens_[pos_].kind != TokenKind::kIdentifier) return false;
  if (auto kind = Lookup(word)) return *kind == NameKind::kTypedef;
  if (KindIs(pos_ + 1, TokenKind::kIdentifier)) return true;
  if (KindIs(pos_ + 1, TokenKind::kKeyword)) {
    const std::string_view next = Ahead(1);
    return IsTypeSpecifierKeyword(next) || IsQualifierKeyword(next) ||
           IsStorageKeyword(next);
  }
  if (IsPunct(pos_ + 1, "*")) {
    size_t j = pos_ + 1;
    while (j < tokens_.size() &&
           (IsPunct(j, "*") ||
            (KindIs(j, TokenKind::kKeyword) && IsQualifierKeyword(Text(j))))) {
      ++j;
    }
    if (!KindIs(j, TokenKind::kIdentifier)) return false;
    const std::string_view after = Text(j + 1);
    return IsPunct(j + 1, ";") || IsPunct(j + 1, ",") || IsPunct(j + 1, "=") ||
           IsPunct(j + 1, "[") ||
           (after == "(" && IsPunct(j + 2, "*"));
  }
  if (IsPunct(pos_ + 1, "(")) {
    return IsPunct(pos_ + 2, "*") && KindIs(pos_ + 3, TokenKind::kIdentifier) &&
           IsPunct(pos_ + 4, ")") && (IsPunct(pos_ + 5, "(") || IsPunct(pos_ + 5, "["));
  }
  return false;
}

void Parser::SkipBalanced() {
  // Cur() is an opening parenthesis.
  int depth = 0;
  do {
    if (AtEnd()) Fail("unbalanced parentheses");
    if (CurIs("(")) ++depth;
    if (CurIs(")")) --depth;
    ++pos_;
  } while (depth > 0);
}

void Parser::SkipAttributes() {
  while (!AtEnd()) {
    if (KindIs(pos_, TokenKind::kKeyword) && IsAttributeKeyword(Cur())) {
      ++pos_;
      if (!CurIs("(")) Fail("expected '(' after attribute");
      SkipBalanced();
    } else if (KindIs(pos_, TokenKind::kKeyword) && IsAsmKeyword(Cur()) &&
               IsPunct(pos_ + 1, "(")) {
      // asm label on a declarator
      ++pos_;
      SkipBalanced();
    } else {
      return;
    }
  }
}

NodeId Parser::ParseDeclarationSpecifiers(uint32_t* flags) {
  const size_t first = pos_;
  std::vector<NodeId> children;
  bool seen_type = false;
  while (!AtEnd()) {
    const std::string_view word = Cur();
    const TokenKind kind = tokens_[pos_].kind;
    if (kind == TokenKind::kKeyword) {
      if (IsStorageKeyword(word)) {
        if (word == "typedef") *flags |= Node::kTypedef;
        if (word == "extern") *flags |= Node::kExtern;
        if (word == "static") *flags |= Node::kStatic;
        ++pos_;
        if (word == "_Alignas") {
          if (!CurIs("(")) Fail("expected '(' after _Alignas");
          SkipBalanced();
        }
        continue;
      }
      if (word == "_Atomic" && IsPunct(pos_ + 1, "(")) {
        ++pos_;
        ++pos_;
        children.push_back(ParseTypeName());
        Expect(")");
        seen_type = true;
        continue;
      }
      if (IsQualifierKeyword(word)) {
        ++pos_;
        continue;
      }
      if (IsAttributeKeyword(word)) {
        SkipAttributes();
        continue;
      }
      if (word == "struct" || word == "union") {
        children.push_back(ParseStructSpecifier());
        seen_type = true;
        continue;
      }
      if (word == "enum") {
        children.push_back(ParseEnumSpecifier());
        seen_type = true;
        continue;
      }
      if (word == "typeof" || word == "__typeof__" || word == "__typeof") {
        children.push_back(ParseTypeofSpecifier());
        seen_type = true;
        continue;
      }
      if (IsTypeSpecifierKeyword(word)) {
        ++pos_;
        seen_type = true;
        continue;
      }
      break;
    }
    if (kind == TokenKind::kIdentifier) {
      if (!seen_type) {
        auto known = Lookup(word);
        if (known && *known == NameKind::kVariable) break;
        children.push_back(Leaf(NodeKind::kTypeIdentifier));
        seen_type = true;
        continue;
      }
      // Attribute-like macro between the type and the declarator, as in
      // `int av_cold name(...)`.
      const bool next_is_name = KindIs(pos_ + 1, TokenKind::kIdentifier);
      const bool next_is_spec =
          KindIs(pos_ + 1, TokenKind::kKeyword) &&
          (IsTypeSpecifierKeyword(Ahead(1)) || IsQualifierKeyword(Ahead(1)) ||
           IsStorageKeyword(Ahead(1)));
      if ((next_is_name || next_is_spec) && !Lookup(word)) {
        children.push_back(Leaf(NodeKind::kTypeIdentifier));
        continue;
      }
      break;
    }
    break;
  }
  if (pos_ == first) Fail("expected declaration specifiers");
  return Make(NodeKind::kDeclarationSpecifiers, first, std::move(children));
}

NodeId Parser::ParseStructSpecifier() {
  const size_t first = pos_++;
  SkipAttributes();
  NodeId name = kNoNode;
  if (KindIs(pos_, TokenKind::kIdentifier)) name = Leaf(NodeKind::kTypeIdentifier);
  NodeId body = kNoNode;
  if (CurIs("{")) body = ParseFieldDeclarationList();
  if (name == kNoNode && body == kNoNode) Fail("expected struct name or body");
  SkipAttributes();
  return Make(NodeKind::kStructSpecifier, first, {name, body});
}

NodeId Parser::ParseFieldDeclarationList() {
  const size_t first = pos_;
  Expect("{");
  std::vector<NodeId> fields;
  while (!CurIs("}")) {
    if (AtEnd()) Fail("expected '}'");
    if (Accept(";")) continue;
    const size_t field_first = pos_;
    uint32_t flags = 0;
    std::vector<NodeId> children = {ParseDeclarationSpecifiers(&flags)};
    while (!CurIs(";")) {
      const size_t declarator_first = pos_;
      NodeId declarator = kNoNode;
      if (!CurIs(":")) declarator = ParseDeclarator(DeclaratorMode::kOptional, true);
      if (Accept(":")) {
        NodeId width = ParseConditional();
        declarator = Make(NodeKind::kBitfieldDeclarator, declarator_first,
                          {declarator, width});
      }
      SkipAttributes();
      if (declarator != kNoNode) children.push_back(declarator);
      if (!Accept(",")) break;
    }
    Expect(";");
    fields.push_back(
        Make(NodeKind::kFieldDeclaration, field_first, std::move(children)));
  }
  Expect("}");
  return Make(NodeKind::kFieldDeclarationList, first, std::move(fields));
}

NodeId Parser::ParseEnumSpecifier() {
  const size_t first = pos_++;
  SkipAttributes();
  NodeId name = kNoNode;
  if (KindIs(pos_, TokenKind::kIdentifier)) name = Leaf(NodeKind::kTypeIdentifier);
  NodeId list = kNoNode;
  if (CurIs("{")) {
    const size_t list_first = pos_++;
    std::vector<NodeId> enumerators;
    while (!CurIs("}")) {
      const size_t enumerator_first = pos_;
      if (!KindIs(pos_, TokenKind::kIdentifier)) Fail("expected enumerator");
      NodeId id = Leaf(NodeKind::kIdentifier, Node::kDeclaredName);
      Declare(Text(pos_ - 1), NameKind::kVariable);
      NodeId value = kNoNode;
      if (Accept("=")) value = ParseConditional();
      enumerators.push_back(
          Make(NodeKind::kEnumerator, enumerator_first, {id, value}));
      if (!Accept(",")) break;
    }
    Expect("}");
    list = Make(NodeKind::kEnumeratorList, list_first, std::move(enumerators));
  }
  if (name == kNoNode && list == kNoNode) Fail("expected enum name or body");
  return Make(NodeKind::kEnumSpecifier, first, {name, list});
}

NodeId Parser::ParseTypeofSpecifier() {
  const size_t first = pos_++;
  Expect("(");
  NodeId inner = TypeNameAt(pos_, TypeContext::kSizeof) ? ParseTypeName()
                                                         : ParseExpression();
  Expect(")");
  return Make(NodeKind::kTypeofSpecifier, first, {inner});
}

bool Parser::ParenthesisStartsDeclarator(DeclaratorMode mode) const {
  // Cur() is "(".
  if (IsPunct(pos_ + 1, "*") || IsPunct(pos_ + 1, "^")) return true;
  if (mode == DeclaratorMode::kAbstract) {
    return IsPunct(pos_ + 1, "(") || IsPunct(pos_ + 1, "[");
  }
  if (KindIs(pos_ + 1, TokenKind::kIdentifier)) {
    auto known = Lookup(Ahead(1));
    return !(known && *known == NameKind::kTypedef) &&
           mode == DeclaratorMode::kNamed;
  }
  return IsPunct(pos_ + 1, "(");
}

NodeId Parser::ParseDeclarator(DeclaratorMode mode, bool field_name) {
  const size_t first = pos_;
  if (Accept("*")) {
    while (!AtEnd() && KindIs(pos_, TokenKind::kKeyword) &&
           (IsQualifierKeyword(Cur()) || IsAttributeKeyword(Cur()))) {
      if (IsAttributeKeyword(Cur())) {
        SkipAttributes();
      } else {
        ++pos_;
      }
    }
    NodeId inner = ParseDeclarator(mode, field_name);
    return Make(NodeKind::kPointerDeclarator, first, {inner});
  }
  SkipAttributes();
  NodeId direct = kNoNode;
  if (KindIs(pos_, TokenKind::kIdentifier) && mode != DeclaratorMode::kAbstract) {
    direct = Leaf(field_name ? NodeKind::kFieldIdentifier : NodeKind::kIdentifier,
                  Node::kDeclaredName);
  } else if (CurIs("(") && ParenthesisStartsDeclarator(mode)) {
    ++pos_;
    NodeId inner = ParseDeclarator(mode, field_name);
    Expect(")");
    direct = Make(NodeKind::kParenthesizedDeclarator, first, {inner});
  } else if (mode == DeclaratorMode::kNamed) {
    Fail("expected declarator");
  }
  while (true) {
    if (CurIs("[")) {
      ++pos_;
      while (!AtEnd() && KindIs(pos_, TokenKind::kKeyword) &&
             (Cur() == "static" || IsQualifierKeyword(Cur()))) {
        ++pos_;
      }
      NodeId size = kNoNode;
      if (CurIs("*") && IsPunct(pos_ + 1, "]")) {
        ++pos_;
      } else if (!CurIs("]")) {
        size = ParseAssignment();
      }
      Expect("]");
      direct = Make(NodeKind::kArrayDeclarator, first, {direct, size});
    } else if (CurIs("(") && pos_ != first) {
      NodeId params = ParseParameterList();
      direct = Make(NodeKind::kFunctionDeclarator, first, {direct, params});
    } else if (CurIs("(") && mode == DeclaratorMode::kAbstract) {
      NodeId params = ParseParameterList();
      direct = Make(NodeKind::kFunctionDeclarator, first, {direct, params});
    } else {
      break;
    }
  }
  return direct;
}

NodeId Parser::ParseParameterList() {
  const size_t first = pos_;
  Expect("(");
  PushScope();
  std::vector<NodeId> params;
  if (!CurIs(")")) {
    while (true) {
      if (CurIs("...")) {
        params.push_back(Leaf(NodeKind::kVariadicParameter));
        break;
      }
      const size_t param_first = pos_;
      uint32_t flags = 0;
      NodeId specifiers = ParseDeclarationSpecifiers(&flags);
      NodeId declarator = ParseDeclarator(DeclaratorMode::kOptional);
      SkipAttributes();
      DeclareFromDeclarator(declarator, NameKind::kVariable);
      params.push_back(Make(NodeKind::kParameterDeclaration, param_first,
                            {specifiers, declarator}));
      if (!Accept(",")) break;
    }
  }
  PopScope();
  Expect(")");
  return Make(NodeKind::kParameterList, first, std::move(params));
}

NodeId Parser::ParseDeclaration() {
  const size_t first = pos_;
  uint32_t flags = 0;
  std::vector<NodeId> children = {ParseDeclarationSpecifiers(&flags)};
  const NameKind kind =
      (flags & Node::kTypedef) ? NameKind::kTypedef : NameKind::kVariable;
  if (!CurIs(";")) {
    while (true) {
      const size_t declarator_first = pos_;
      NodeId declarator = ParseDeclarator(DeclaratorMode::kNamed);
      SkipAttributes();
      DeclareFromDeclarator(declarator, kind);
      NodeId init = kNoNode;
      if (Accept("=")) init = ParseInitializer();
      children.push_back(Make(NodeKind::kInitDeclarator, declarator_first,
                              {declarator, init}));
      if (!Accept(",")) break;
    }
  }
  Expect(";");
  return Make(NodeKind::kDeclaration, first, std::move(children), -1, flags);
}

NodeId Parser::ParseInitializer() {
  return CurIs("{") ? ParseInitializerList() : ParseAssignment();
}

NodeId Parser::ParseInitializerList() {
  const size_t first = pos_;
  Expect("{");
  std::vector<NodeId> items;
  while (!CurIs("}")) {
    if (AtEnd()) Fail("expected '}'");
    const size_t item_first = pos_;
    std::vector<NodeId> designators;
    if (KindIs(pos_, TokenKind::kIdentifier) && IsPunct(pos_ + 1, ":")) {
      // GNU `field: value`
      const size_t d_first = pos_;
      NodeId field = Leaf(NodeKind::kFieldIdentifier);
      designators.push_back(Make(NodeKind::kFieldDesignator, d_first, {field}));
      ++pos_;
    } else {
      while (CurIs(".") || CurIs("[")) {
        const size_t d_first = pos_;
        if (Accept(".")) {
          if (!KindIs(pos_, TokenKind::kIdentifier)) Fail("expected field name");
          NodeId field = Leaf(NodeKind::kFieldIdentifier);
          designators.push_back(
              Make(NodeKind::kFieldDesignator, d_first, {field}));
        } else {
          ++pos_;
          NodeId index = ParseConditional();
          NodeId range_end = kNoNode;
          if (Accept("...")) range_end = ParseConditional();
          Expect("]");
          designators.push_back(
              Make(NodeKind::kSubscriptDesignator, d_first, {index, range_end}));
        }
      }
      if (!designators.empty()) Expect("=");
    }
    NodeId value = ParseInitializer();
    if (designators.empty()) {
      items.push_back(value);
    } else {
      designators.push_back(value);
      items.push_back(
          Make(NodeKind::kInitializerPair, item_first, std::move(designators)));
    }
    if (!Accept(",")) break;
  }
  Expect("}");
  return Make(NodeKind::kInitializerList, first, std::move(items));
}

NodeId Parser::ParseTypeName() {
  const size_t first = pos_;
  uint32_t flags = 0;
  NodeId specifiers = ParseDeclarationSpecifiers(&flags);
  NodeId declarator = ParseDeclarator(DeclaratorMode::kAbstract);
  return Make(NodeKind::kTypeName, first, {specifiers, declarator});
}

NodeId Parser::ParseFunctionDefinition() {
  if (tokens_.empty()) Fail("empty input");
  PushScope();  // file scope
  const size_t first = pos_;
  uint32_t flags = 0;
  NodeId specifiers = ParseDeclarationSpecifiers(&flags);
  NodeId declarator = ParseDeclarator(DeclaratorMode::kNamed);
  SkipAttributes();

  const NodeId name = DeclaredNameIn(nodes_, declarator);
  NodeId function_declarator = kNoNode;
  for (NodeId at = name; at != kNoNode && at != declarator;) {
    at = nodes_[at].parent;
    if (at != kNoNode && nodes_[at].kind == NodeKind::kFunctionDeclarator) {
      function_declarator = at;
      break;
    }
  }
  if (function_declarator == kNoNode) Fail("not a function definition");
  if (!CurIs("{")) Fail("expected function body");
  DeclareFromDeclarator(declarator, NameKind::kVariable);

  PushScope();  // parameters share the outermost block scope
  for (NodeId param : nodes_[nodes_[function_declarator].child(1)].children) {
    if (nodes_[param].kind == NodeKind::kParameterDeclaration) {
      DeclareFromDeclarator(nodes_[param].child(1), NameKind::kVariable);
    }
  }
  NodeId body = ParseCompound(/*new_scope=*/false);
  PopScope();
  PopScope();
  if (!AtEnd()) Fail("unexpected tokens after function body");
  return Make(NodeKind::kFunctionDefinition, first,
              {specifiers, declarator, body}, -1, flags);
}

NodeId Parser::ParseCompound(bool new_scope) {
  const size_t first = pos_;
  Expect("{");
  if (new_scope) PushScope();
  std::vector<NodeId> items;
  while (!CurIs("}")) {
    if (AtEnd()) Fail("expected '}'");
    items.push_back(ParseBlockItemRecovering());
  }
  ++pos_;
  if (new_scope) PopScope();
  return Make(NodeKind::kCompoundStatement, first, std::move(items));
}

NodeId Parser::ParseBlockItemRecovering() {
  const size_t start = pos_;
  const size_t node_count = nodes_.size();
  const size_t scope_depth = scopes_.size();
  try {
    return ParseBlockItem();
  } catch (const SyntaxError& error) {
    ++error_count_;
    if (!first_error_) first_error_ = error;
    if (error_count_ > options_.max_error_nodes) throw;
    nodes_.resize(node_count);
    scopes_.resize(scope_depth);
    pos_ = start;
    // Resynchronise after the next top-level ';' or balanced '}'.
    int depth = 0;
    while (!AtEnd()) {
      if (CurIs("(") || CurIs("[") || CurIs("{")) {
        ++depth;
      } else if (CurIs(")") || CurIs("]") || CurIs("}")) {
        if (depth == 0) break;
        --depth;
        if (depth == 0 && CurIs("}")) {
          ++pos_;
          break;
        }
      } else if (CurIs(";") && depth == 0) {
        ++pos_;
        break;
      }
      ++pos_;
    }
    if (pos_ == start) {
      if (AtEnd()) throw;
      ++pos_;
    }
    return Make(NodeKind::kError, start, {});
  }
}

NodeId Parser::ParseBlockItem() {
  if (IsKw(pos_, "_Static_assert")) {
    const size_t first = pos_++;
    Expect("(");
    NodeId condition = ParseConditional();
    if (Accept(",")) ParseStringLiteral();
    Expect(")");
    Expect(";");
    return Make(NodeKind::kStaticAssert, first, {condition});
  }
  if (LooksLikeDeclaration()) return ParseDeclaration();
  return ParseStatement();
}

NodeId Parser::ParseStatement() {
  if (AtEnd()) Fail("expected statement");
  const size_t first = pos_;
  const std::string_view word = Cur();
  const bool keyword = KindIs(pos_, TokenKind::kKeyword);

  if (CurIs("{")) return ParseCompound(/*new_scope=*/true);
  if (CurIs(";")) {
    ++pos_;
    return Make(NodeKind::kExpressionStatement, first, {kNoNode});
  }
  if (keyword) {
    if (word == "if") {
      ++pos_;
      Expect("(");
      NodeId condition = ParseExpression();
      Expect(")");
      NodeId consequence = ParseStatement();
      NodeId alternative = kNoNode;
      if (IsKw(pos_, "else")) {
        ++pos_;
        alternative = ParseStatement();
      }
      return Make(NodeKind::kIfStatement, first,
                  {condition, consequence, alternative});
    }
    if (word == "while") {
      ++pos_;
      Expect("(");
      NodeId condition = ParseExpression();
      Expect(")");
      NodeId body = ParseStatement();
      return Make(NodeKind::kWhileStatement, first, {condition, body});
    }
    if (word == "do") {
      ++pos_;
      NodeId body = ParseStatement();
      if (!IsKw(pos_, "while")) Fail("expected 'while'");
      ++pos_;
      Expect("(");
      NodeId condition = ParseExpression();
      Expect(")");
      Expect(";");
      return Make(NodeKind::kDoStatement, first, {body, condition});
    }
    if (word == "for") {
      ++pos_;
      Expect("(");
      PushScope();
      NodeId init = kNoNode;
      if (!Accept(";")) {
        if (LooksLikeDeclaration()) {
          init = ParseDeclaration();
        } else {
          init = ParseExpression();
          Expect(";");
        }
      }
      NodeId condition = CurIs(";") ? kNoNode : ParseExpression();
      Expect(";");
      NodeId update = CurIs(")") ? kNoNode : ParseExpression();
      Expect(")");
      NodeId body = ParseStatement();
      PopScope();
      return Make(NodeKind::kForStatement, first,
                  {init, condition, update, body});
    }
    if (word == "switch") {
      ++pos_;
      Expect("(");
      NodeId condition = ParseExpression();
      Expect(")");
      NodeId body = ParseStatement();
      return Make(NodeKind::kSwitchStatement, first, {condition, body});
    }
    if (word == "case") {
      ++pos_;
      NodeId value = ParseConditional();
      NodeId range_end = kNoNode;
      if (Accept("...")) range_end = ParseConditional();
      Expect(":");
      NodeId statement = kNoNode;
      if (!CurIs("}")) {
        statement = LooksLikeDeclaration() ? ParseDeclaration() : ParseStatement();
      }
      return Make(NodeKind::kCaseStatement, first, {value, range_end, statement});
    }
    if (word == "default") {
      ++pos_;
      Expect(":");
      NodeId statement = kNoNode;
      if (!CurIs("}")) {
        statement = LooksLikeDeclaration() ? ParseDeclaration() : ParseStatement();
      }
      return Make(NodeKind::kDefaultStatement, first, {statement});
    }
    if (word == "break" || word == "continue") {
      ++pos_;
      Expect(";");
      return Make(word == "break" ? NodeKind::kBreakStatement
                                  : NodeKind::kContinueStatement,
                  first, {});
    }
    if (word == "return") {
      ++pos_;
      NodeId value = CurIs(";") ? kNoNode : ParseExpression();
      Expect(";");
      return Make(NodeKind::kReturnStatement, first, {value});
    }
    if (word == "goto") {
      ++pos_;
      NodeId target;
      if (KindIs(pos_, TokenKind::kIdentifier)) {
        target = Leaf(NodeKind::kStatementIdentifier);
      } else {
        target = ParseExpression();  // computed goto
      }
      Expect(";");
      return Make(NodeKind::kGotoStatement, first, {target});
    }
    if (IsAsmKeyword(word)) return ParseAsm();
    if (IsAttributeKeyword(word)) {
      SkipAttributes();
      Expect(";");
      return Make(NodeKind::kExpressionStatement, first, {kNoNode});
    }
  }
  if (KindIs(pos_, TokenKind::kIdentifier) && IsPunct(pos_ + 1, ":")) {
    NodeId label = Leaf(NodeKind::kStatementIdentifier, Node::kDeclaredName);
    ++pos_;
    SkipAttributes();
    NodeId statement = kNoNode;
    if (!CurIs("}")) {
      statement = LooksLikeDeclaration() ? ParseDeclaration() : ParseStatement();
    }
    return Make(NodeKind::kLabeledStatement, first, {label, statement});
  }

  NodeId expression = ParseExpression();
  if (Accept(";")) {
    return Make(NodeKind::kExpressionStatement, first, {expression});
  }
  if (nodes_[expression].kind == NodeKind::kCallExpression) {
    NodeId body = CurIs("}") ? kNoNode : ParseStatement();
    return Make(NodeKind::kMacroStatement, first, {expression, body});
  }
  Fail("expected ';'");
}

NodeId Parser::ParseAsm() {
  const size_t first = pos_++;
  while (!AtEnd() && KindIs(pos_, TokenKind::kKeyword) &&
         (Cur() == "volatile" || Cur() == "__volatile__" ||
          Cur() == "__volatile" || Cur() == "goto" || Cur() == "inline" ||
          Cur() == "__inline__")) {
    ++pos_;
  }
  Expect("(");
  std::vector<NodeId> children = {ParseStringLiteral()};
  int section = 0;
  while (Accept(":")) {
    ++section;
    while (!CurIs(":") && !CurIs(")")) {
      if (AtEnd()) Fail("unterminated asm statement");
      if (section >= 4) {
        if (!KindIs(pos_, TokenKind::kIdentifier)) Fail("expected asm label");
        children.push_back(Leaf(NodeKind::kStatementIdentifier));
      } else {
        if (Accept("[")) {
          if (!KindIs(pos_, TokenKind::kIdentifier)) Fail("expected asm operand name");
          ++pos_;
          Expect("]");
        }
        children.push_back(ParseStringLiteral());
        if (Accept("(")) {
          children.push_back(ParseExpression());
          Expect(")");
        }
      }
      if (!Accept(",")) break;
    }
  }
  Expect(")");
  Expect(";");
  return Make(NodeKind::kAsmStatement, first, std::move(children));
}

NodeId Parser::ParseExpression() {
  const size_t first = pos_;
  NodeId left = ParseAssignment();
  while (CurIs(",")) {
    const int32_t op = static_cast<int32_t>(pos_++);
    NodeId right = ParseAssignment();
    left = Make(NodeKind::kCommaExpression, first, {left, right}, op);
  }
  return left;
}

NodeId Parser::ParseAssignment() {
  const size_t first = pos_;
  NodeId left = ParseConditional();
  if (KindIs(pos_, TokenKind::kPunctuator) && IsAssignmentOperator(Cur())) {
    const int32_t op = static_cast<int32_t>(pos_++);
    NodeId right = ParseAssignment();
    return Make(NodeKind::kAssignmentExpression, first, {left, right}, op);
  }
  return left;
}

NodeId Parser::ParseConditional() {
  const size_t first = pos_;
  NodeId condition = ParseBinary(1);
  if (!CurIs("?")) return condition;
  const int32_t op = static_cast<int32_t>(pos_++);
  NodeId consequence = CurIs(":") ? kNoNode : ParseExpression();
  Expect(":");
  NodeId alternative = ParseConditional();
  return Make(NodeKind::kConditionalExpression, first,
              {condition, consequence, alternative}, op);
}

NodeId Parser::ParseBinary(int min_precedence) {
  const size_t first = pos_;
  NodeId left = ParseCast();
  while (KindIs(pos_, TokenKind::kPunctuator)) {
    const int precedence = BinaryPrecedence(Cur());
    if (precedence == 0 || precedence < min_precedence) break;
    const int32_t op = static_cast<int32_t>(pos_++);
    NodeId right = ParseBinary(precedence + 1);
    left = Make(NodeKind::kBinaryExpression, first, {left, right}, op);
  }
  return left;
}

NodeId Parser::ParseCast() {
  if (CurIs("(") && TypeNameAt(pos_ + 1, TypeContext::kCast)) {
    const size_t first = pos_++;
    NodeId type = ParseTypeName();
    Expect(")");
    if (CurIs("{")) {
      NodeId init = ParseInitializerList();
      NodeId literal =
          Make(NodeKind::kCompoundLiteralExpression, first, {type, init});
      return ParsePostfixTail(literal, first);
    }
    NodeId value = ParseCast();
    return Make(NodeKind::kCastExpression, first, {type, value});
  }
  return ParseUnary();
}

NodeId Parser::ParseUnary() {
  if (AtEnd()) Fail("expected expression");
  const size_t first = pos_;
  const int32_t op = static_cast<int32_t>(pos_);
  if (KindIs(pos_, TokenKind::kPunctuator)) {
    const std::string_view p = Cur();
    if (p == "++" || p == "--") {
      ++pos_;
      NodeId argument = ParseUnary();
      return Make(NodeKind::kUpdateExpression, first, {argument}, op,
                  Node::kPrefix);
    }
    if (p == "&" || p == "*") {
      ++pos_;
      NodeId argument = ParseCast();
      return Make(NodeKind::kPointerExpression, first, {argument}, op);
    }
    if (p == "+" || p == "-" || p == "~" || p == "!") {
      ++pos_;
      NodeId argument = ParseCast();
      return Make(NodeKind::kUnaryExpression, first, {argument}, op);
    }
    if (p == "&&" && KindIs(pos_ + 1, TokenKind::kIdentifier)) {
      ++pos_;
      NodeId label = Leaf(NodeKind::kStatementIdentifier);
      return Make(NodeKind::kUnaryExpression, first, {label}, op);
    }
  }
  if (KindIs(pos_, TokenKind::kKeyword)) {
    const std::string_view k = Cur();
    if (k == "sizeof" || k == "_Alignof" || k == "__alignof__" ||
        k == "__alignof") {
      ++pos_;
      if (CurIs("(") && TypeNameAt(pos_ + 1, TypeContext::kSizeof)) {
        ++pos_;
        NodeId type = ParseTypeName();
        Expect(")");
        return Make(NodeKind::kSizeofExpression, first, {type}, op);
      }
      NodeId argument = ParseUnary();
      return Make(NodeKind::kSizeofExpression, first, {argument}, op);
    }
    if (k == "__extension__") {
      ++pos_;
      return ParseCast();
    }
  }
  NodeId primary = ParsePrimary();
  return ParsePostfixTail(primary, first);
}

NodeId Parser::ParsePostfixTail(NodeId expression, size_t first) {
  while (!AtEnd()) {
    if (CurIs("[")) {
      ++pos_;
      NodeId index = ParseExpression();
      Expect("]");
      expression =
          Make(NodeKind::kSubscriptExpression, first, {expression, index});
    } else if (CurIs("(")) {
      NodeId args = ParseArgumentList();
      expression = Make(NodeKind::kCallExpression, first, {expression, args});
    } else if (CurIs(".") || CurIs("->")) {
      const int32_t op = static_cast<int32_t>(pos_++);
      if (!KindIs(pos_, TokenKind::kIdentifier)) Fail("expected field name");
      NodeId field = Leaf(NodeKind::kFieldIdentifier);
      expression =
          Make(NodeKind::kFieldExpression, first, {expression, field}, op);
    } else if (CurIs("++") || CurIs("--")) {
      const int32_t op = static_cast<int32_t>(pos_++);
      expression = Make(NodeKind::kUpdateExpression, first, {expression}, op);
    } else {
      break;
    }
  }
  return expression;
}

NodeId Parser::ParseArgumentList() {
  const size_t first = pos_;
  Expect("(");
  std::vector<NodeId> args;
  if (!CurIs(")")) {
    while (true) {
      if (TypeNameAt(pos_, TypeContext::kArgument)) {
        args.push_back(ParseTypeName());
      } else {
        args.push_back(ParseAssignment());
      }
      if (!Accept(",")) break;
    }
  }
  Expect(")");
  return Make(NodeKind::kArgumentList, first, std::move(args));
}

NodeId Parser::ParseStringLiteral() {
  const size_t first = pos_;
  std::vector<NodeId> macros;
  bool seen_string = false;
  while (!AtEnd()) {
    if (KindIs(pos_, TokenKind::kString)) {
      ++pos_;
      seen_string = true;
      continue;
    }
    if (KindIs(pos_, TokenKind::kIdentifier)) {
      const bool string_follows = KindIs(pos_ + 1, TokenKind::kString);
      const bool trailing_macro =
          seen_string && LooksLikeMacroName(Cur()) &&
          (IsPunct(pos_ + 1, ")") || IsPunct(pos_ + 1, ",") ||
           IsPunct(pos_ + 1, ";") || IsPunct(pos_ + 1, ":"));
      if (string_follows || trailing_macro) {
        macros.push_back(Leaf(NodeKind::kIdentifier));
        continue;
      }
    }
    break;
  }
  if (!seen_string) {
    pos_ = first;
    Fail("expected string literal");
  }
  return Make(NodeKind::kStringLiteral, first, std::move(macros));
}

NodeId Parser::ParsePrimary() {
  if (AtEnd()) Fail("expected expression");
  const size_t first = pos_;
  switch (tokens_[pos_].kind) {
    case TokenKind::kIdentifier:
      if (KindIs(pos_ + 1, TokenKind::kString)) return ParseStringLiteral();
      return Leaf(NodeKind::kIdentifier);
    case TokenKind::kNumber:
      return Leaf(NodeKind::kNumberLiteral);
    case TokenKind::kChar:
      return Leaf(NodeKind::kCharLiteral);
    case TokenKind::kString:
      return ParseStringLiteral();
    case TokenKind::kKeyword:
      if (Cur() == "__builtin_va_arg" || Cur() == "__builtin_offsetof") {
        return Leaf(NodeKind::kIdentifier);
      }
      Fail("unexpected keyword '" + std::string(Cur()) + "'");
    case TokenKind::kPunctuator:
      break;
  }
  if (CurIs("(")) {
    if (IsPunct(pos_ + 1, "{")) {
      ++pos_;
      NodeId block = ParseCompound(/*new_scope=*/true);
      Expect(")");
      return Make(NodeKind::kStatementExpression, first, {block});
    }
    ++pos_;
    NodeId inner = ParseExpression();
    Expect(")");
    return Make(NodeKind::kParenthesizedExpression, first, {inner});
  }
  Fail("expected expression");
}

}  // namespace

ParseResult ParseFunction(std::string_view text, const ParseOptions& options) {
  if (auto bad = FindInvalidUtf8(text)) {
    return ParseResult(ParseFailure{*bad, "invalid UTF-8"});
  }
  LexResult lexed = Lex(text);
  if (lexed.error) {
    return ParseResult(
        ParseFailure{lexed.error->position, lexed.error->message});
  }
  Parser parser(text, std::move(lexed.tokens), options);
  NodeId root = kNoNode;
  std::optional<SyntaxError> error;
  try {
    root = parser.ParseFunctionDefinition();
  } catch (const SyntaxError& e) {
    error = parser.first_error() ? *parser.first_error() : e;
  }
  auto data = std::make_shared<SyntaxUnit::Data>();
  data->tokens = parser.TakeTokens();
  if (error) {
    const uint32_t position =
        error->token < data->tokens.size()
            ? data->tokens[error->token].span.begin
            : static_cast<uint32_t>(text.size());
    return ParseResult(ParseFailure{position, error->message});
  }
  data->text = std::string(text);
  data->trivia = std::move(lexed.trivia);
  data->nodes = parser.TakeNodes();
  data->root = root;
  data->error_count = parser.error_count();
  return ParseResult(SyntaxUnit(std::move(data)));
}

bool ContainsInlineAssembly(const SyntaxUnit& unit) {
  for (const Node& node : unit.nodes()) {
    if (node.kind == NodeKind::kAsmStatement) return true;
  }
  return false;
}

}  // namespace semmut::codemodel
