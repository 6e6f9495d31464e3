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

#include <string>
#include <vector>

#include "semmut/codemodel/scope.h"
#include "src/transforms/support.h"

namespace semmut::transforms::internal {
namespace {

using codemodel::DeclarationKind;
using codemodel::ScopeMap;
using codemodel::TextEdit;

std::vector<TextEdit> RenameEdits(const SyntaxUnit& unit, const ScopeMap& scopes,
                                  NodeId declaration,
                                  const std::string& new_name) {
  std::vector<TextEdit> edits = {{unit.node(declaration).span, new_name}};
  for (NodeId use : scopes.UsesOf(declaration)) {
    edits.push_back({unit.node(use).span, new_name});
  }
  return edits;
}

// Renames one declaration of `kind` and all its uses to `<prefix><k>`.
class RenameDeclaration : public TransformOperator {
 public:
  RenameDeclaration(OperatorInfo info, DeclarationKind kind,
                    std::string prefix)
      : TransformOperator(std::move(info)),
        kind_(kind),
        prefix_(std::move(prefix)) {}

  bool renames_identifiers() const override { return true; }

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const ScopeMap scopes = codemodel::ResolveScopes(unit);
    return RenameEdits(unit, scopes, anchor, FreshName(unit, prefix_));
  }

 protected:
  std::vector<NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    const ScopeMap scopes = codemodel::ResolveScopes(unit);
    std::vector<NodeId> anchors;
    for (NodeId decl : scopes.Declarations(kind_)) {
      if (scopes.IsRedeclared(decl)) continue;
      if (MentionedInDirective(unit, unit.NodeText(decl))) continue;
      anchors.push_back(decl);
    }
    return anchors;
  }

 private:
  DeclarationKind kind_;
  std::string prefix_;
};

// Renames the function itself; only offered when the body calls the
// function recursively, so that the rename is visible inside the body.
class RenameFunction : public TransformOperator {
 public:
  using TransformOperator::TransformOperator;

  bool renames_identifiers() const override { return true; }

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const ScopeMap scopes = codemodel::ResolveScopes(unit);
    return RenameEdits(unit, scopes, anchor, FreshName(unit, "fn"));
  }

 protected:
  std::vector<NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    const NodeId name = unit.FunctionName();
    if (name == codemodel::kNoNode) return {};
    const std::string_view text = unit.NodeText(name);
    if (text == "main") return {};
    // The function's own name is observable through these.
    for (std::string_view magic :
         {"__func__", "__FUNCTION__", "__PRETTY_FUNCTION__"}) {
      if (ContainsWord(unit.text(), magic)) return {};
    }
    if (MentionedInDirective(unit, text)) return {};
    const ScopeMap scopes = codemodel::ResolveScopes(unit);
    if (scopes.UsesOf(name).empty()) return {};
    return {name};
  }
};

}  // namespace

std::vector<std::unique_ptr<TransformOperator>> MakeRenamingOperators() {
  std::vector<std::unique_ptr<TransformOperator>> ops;
  ops.push_back(std::make_unique<RenameDeclaration>(
      OperatorInfo{"T01_rename_local_variable", Category::kTrivial,
                   "Rename a local variable and its uses to a fresh name",
                   "RoPGen"},
      DeclarationKind::kLocalVariable, "v"));
  ops.push_back(std::make_unique<RenameDeclaration>(
      OperatorInfo{"T02_rename_parameter", Category::kTrivial,
                   "Rename a parameter and its uses to a fresh name",
                   "LimitsOfML4Vuln"},
      DeclarationKind::kParameter, "p"));
  ops.push_back(std::make_unique<RenameFunction>(
      OperatorInfo{"T03_rename_function", Category::kTrivial,
                   "Rename a recursive function and its self-calls",
                   "LimitsOfML4Vuln"}));
  return ops;
}

}  // namespace semmut::transforms::internal
