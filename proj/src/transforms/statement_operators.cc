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

#include <cctype>
#include <string>
#include <vector>

#include "src/transforms/support.h"

namespace semmut::transforms::internal {
namespace {

using codemodel::kNoNode;
using codemodel::Node;
using codemodel::TextEdit;

std::string_view TrimRight(std::string_view text) {
  while (!text.empty() &&
         std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

class IncrementToCompoundAssignment : public TransformOperator {
 public:
  using TransformOperator::TransformOperator;

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const NodeId update = unit.node(anchor).child(0);
    std::string out(unit.NodeText(unit.node(update).child(0)));
    out += unit.OperatorText(update) == "++" ? " += 1" : " -= 1";
    return {{unit.node(update).span, out}};
  }

 protected:
  std::vector<NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    std::vector<NodeId> anchors;
    for (NodeId id : unit.NodesOfKind(NodeKind::kExpressionStatement)) {
      const NodeId expression = unit.node(id).child(0);
      if (expression != kNoNode &&
          unit.node(expression).kind == NodeKind::kUpdateExpression) {
        anchors.push_back(id);
      }
    }
    return anchors;
  }
};

bool DefinesTagBody(const SyntaxUnit& unit, NodeId declaration) {
  bool found = false;
  unit.Walk(unit.node(declaration).child(0), [&](NodeId id) {
    const NodeKind kind = unit.node(id).kind;
    if (kind == NodeKind::kFieldDeclarationList ||
        kind == NodeKind::kEnumeratorList) {
      found = true;
    }
    return !found;
  });
  return found;
}

class SplitMultiDeclaration : public TransformOperator {
 public:
  using TransformOperator::TransformOperator;

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const Node& declaration = unit.node(anchor);
    const std::string_view specifiers = SpecifierText(unit, anchor);
    std::string out;
    for (size_t i = 1; i < declaration.children.size(); ++i) {
      if (i > 1) out += " ";
      out += specifiers;
      out += " ";
      out += unit.NodeText(declaration.child(i));
      out += ";";
    }
    return {{declaration.span, out}};
  }

 protected:
  std::vector<NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    std::vector<NodeId> anchors;
    for (NodeId id : unit.NodesOfKind(NodeKind::kDeclaration)) {
      if (unit.node(id).children.size() < 3) continue;
      if (!ParentIsCompound(unit, id)) continue;
      if (SpecifierText(unit, id).empty()) continue;
      if (DefinesTagBody(unit, id)) continue;
      anchors.push_back(id);
    }
    return anchors;
  }
};

// True if the object declared by `declarator` is an array, a function or
// const-qualified, given whether the specifiers carry `const`. The type
// constructor applied closest to the name decides.
bool DeclaresUnassignable(const SyntaxUnit& unit, NodeId declarator,
                          bool const_specifier) {
  const NodeId name = codemodel::DeclaredName(unit, declarator);
  NodeId child = name;
  for (NodeId current = unit.node(name).parent;; current = unit.node(current).parent) {
    if (child == declarator) return const_specifier;
    const Node& node = unit.node(current);
    switch (node.kind) {
      case NodeKind::kParenthesizedDeclarator:
        break;
      case NodeKind::kPointerDeclarator: {
        for (uint32_t t = node.first_token; t < unit.node(child).first_token;
             ++t) {
          const std::string_view token = unit.TokenText(t);
          if (token == "const" || token == "__const") return true;
        }
        return false;
      }
      default:
        return true;
    }
    child = current;
  }
}

class SplitDeclarationInitializer : public TransformOperator {
 public:
  using TransformOperator::TransformOperator;

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const Node& declaration = unit.node(anchor);
    const Node& init_declarator = unit.node(declaration.child(1));
    const NodeId initializer = init_declarator.child(1);
    const uint32_t equals =
        unit.tokens()[unit.node(initializer).first_token - 1].span.begin;
    const std::string_view declarator = TrimRight(unit.text().substr(
        init_declarator.span.begin, equals - init_declarator.span.begin));
    const NodeId name = codemodel::DeclaredName(unit, init_declarator.child(0));

    std::string out(SpecifierText(unit, anchor));
    out += " ";
    out += declarator;
    out += "; ";
    out += unit.NodeText(name);
    out += " = ";
    out += unit.NodeText(initializer);
    out += ";";
    return {{declaration.span, out}};
  }

 protected:
  std::vector<NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    std::vector<NodeId> anchors;
    for (NodeId id : unit.NodesOfKind(NodeKind::kDeclaration)) {
      if (Accepts(unit, id)) anchors.push_back(id);
    }
    return anchors;
  }

 private:
  static bool Accepts(const SyntaxUnit& unit, NodeId id) {
    const Node& declaration = unit.node(id);
    if (declaration.children.size() != 2) return false;
    if (!ParentIsCompound(unit, id)) return false;
    if (declaration.Has(Node::kTypedef) || declaration.Has(Node::kStatic) ||
        declaration.Has(Node::kExtern)) {
      return false;
    }
    if (SpecifierText(unit, id).empty()) return false;
    for (std::string_view keyword :
         {"_Thread_local", "__thread", "__auto_type"}) {
      if (SpecifiersHaveKeyword(unit, id, keyword)) return false;
    }
    const Node& init_declarator = unit.node(declaration.child(1));
    const NodeId initializer = init_declarator.child(1);
    if (initializer == kNoNode ||
        unit.node(initializer).kind == NodeKind::kInitializerList) {
      return false;
    }
    if (codemodel::DeclaredName(unit, init_declarator.child(0)) == kNoNode) {
      return false;
    }
    const bool const_specifier = SpecifiersHaveKeyword(unit, id, "const") ||
                                 SpecifiersHaveKeyword(unit, id, "__const");
    return !DeclaresUnassignable(unit, init_declarator.child(0),
                                 const_specifier);
  }
};

}  // namespace

std::vector<std::unique_ptr<TransformOperator>> MakeStatementOperators() {
  std::vector<std::unique_ptr<TransformOperator>> ops;
  ops.push_back(std::make_unique<IncrementToCompoundAssignment>(
      OperatorInfo{"T10_increment_to_compound_assignment", Category::kTrivial,
                   "Rewrite an `x++;` or `x--;` statement as `x += 1;` or "
                   "`x -= 1;`",
                   "RoPGen"}));
  ops.push_back(std::make_unique<SplitMultiDeclaration>(
      OperatorInfo{"T11_split_multi_declaration", Category::kTrivial,
                   "Split a declaration of several variables into one "
                   "declaration per variable",
                   "RoPGen"}));
  ops.push_back(std::make_unique<SplitDeclarationInitializer>(
      OperatorInfo{"T12_split_declaration_initializer",
                   Category::kDataAndDeclaration,
                   "Split `T x = e;` into `T x; x = e;`", "RoPGen"}));
  return ops;
}

}  // namespace semmut::transforms::internal
