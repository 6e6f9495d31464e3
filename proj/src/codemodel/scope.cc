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

#include "semmut/codemodel/scope.h"

#include <algorithm>
#include <string>

namespace semmut::codemodel {

const Occurrence* ScopeMap::Find(NodeId node) const {
  auto it = index_.find(node);
  return it == index_.end() ? nullptr : &occurrences_[it->second];
}

std::vector<NodeId> ScopeMap::UsesOf(NodeId declaration) const {
  std::vector<NodeId> uses;
  for (const Occurrence& o : occurrences_) {
    if (o.role == IdentifierRole::kResolvedUse && o.declaration == declaration) {
      uses.push_back(o.node);
    }
  }
  return uses;
}

std::vector<NodeId> ScopeMap::Declarations(DeclarationKind kind) const {
  std::vector<NodeId> result;
  for (const Occurrence& o : occurrences_) {
    if (o.role == IdentifierRole::kDeclaration && o.declaration_kind == kind) {
      result.push_back(o.node);
    }
  }
  return result;
}

bool operator==(const ScopeMap& a, const ScopeMap& b) {
  if (a.occurrences_.size() != b.occurrences_.size()) return false;
  for (size_t i = 0; i < a.occurrences_.size(); ++i) {
    const Occurrence& x = a.occurrences_[i];
    const Occurrence& y = b.occurrences_[i];
    if (x.node != y.node || x.name != y.name || x.role != y.role ||
        x.declaration != y.declaration ||
        x.declaration_kind != y.declaration_kind) {
      return false;
    }
  }
  return a.redeclared_ == b.redeclared_;
}

class ScopeResolver {
 public:
  explicit ScopeResolver(const SyntaxUnit& unit) : unit_(unit) {}

  ScopeMap Run() {
    CollectLabels();
    VisitFunction();
    std::sort(map_.occurrences_.begin(), map_.occurrences_.end(),
              [&](const Occurrence& a, const Occurrence& b) {
                return unit_.node(a.node).span.begin <
                       unit_.node(b.node).span.begin;
              });
    for (size_t i = 0; i < map_.occurrences_.size(); ++i) {
      map_.index_[map_.occurrences_[i].node] = i;
    }
    return std::move(map_);
  }

 private:
  std::string NameOf(NodeId id) const { return std::string(unit_.NodeText(id)); }

  void Declare(NodeId name, DeclarationKind kind) {
    if (name == kNoNode) return;
    const std::string text = NameOf(name);
    auto& scope = scopes_.back();
    auto existing = scope.find(text);
    if (existing != scope.end()) {
      map_.redeclared_.insert(existing->second);
      map_.redeclared_.insert(name);
    }
    scope[text] = name;
    map_.occurrences_.push_back(
        {name, text, IdentifierRole::kDeclaration, name, kind});
    kinds_[name] = kind;
  }

  void Use(NodeId id) {
    const std::string text = NameOf(id);
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(text);
      if (found != it->end()) {
        map_.occurrences_.push_back({id, text, IdentifierRole::kResolvedUse,
                                     found->second, kinds_[found->second]});
        return;
      }
    }
    map_.occurrences_.push_back(
        {id, text, IdentifierRole::kUnresolved, kNoNode, DeclarationKind::kNone});
  }

  void CollectLabels() {
    for (NodeId statement : unit_.NodesOfKind(NodeKind::kLabeledStatement)) {
      const NodeId label = unit_.node(statement).child(0);
      labels_.emplace(NameOf(label), label);
    }
  }

  void VisitFunction() {
    const Node& root = unit_.node(unit_.root());
    scopes_.emplace_back();  // file scope
    Visit(root.child(0));
    const NodeId own_declarator = unit_.FunctionDeclarator();
    own_parameters_ = unit_.node(own_declarator).child(1);
    const NodeId name = VisitDeclarator(root.child(1));
    Declare(name, DeclarationKind::kFunction);
    scopes_.emplace_back();  // parameters and outermost block
    for (NodeId param : unit_.node(own_parameters_).children) {
      const Node& p = unit_.node(param);
      if (p.kind != NodeKind::kParameterDeclaration) continue;
      Visit(p.child(0));
      Declare(VisitDeclarator(p.child(1)), DeclarationKind::kParameter);
    }
    for (NodeId item : unit_.node(root.child(2)).children) Visit(item);
    scopes_.pop_back();
    scopes_.pop_back();
  }

  // Visits expressions nested in a declarator and returns the declared name
  // without declaring it.
  NodeId VisitDeclarator(NodeId id) {
    if (id == kNoNode) return kNoNode;
    const Node& n = unit_.node(id);
    switch (n.kind) {
      case NodeKind::kIdentifier:
        return id;
      case NodeKind::kFieldIdentifier:
        return kNoNode;
      case NodeKind::kPointerDeclarator:
      case NodeKind::kParenthesizedDeclarator:
        return VisitDeclarator(n.child(0));
      case NodeKind::kArrayDeclarator: {
        NodeId name = VisitDeclarator(n.child(0));
        Visit(n.child(1));
        return name;
      }
      case NodeKind::kBitfieldDeclarator:
        VisitDeclarator(n.child(0));
        Visit(n.child(1));
        return kNoNode;
      case NodeKind::kFunctionDeclarator: {
        NodeId name = VisitDeclarator(n.child(0));
        if (n.child(1) != own_parameters_) {
          scopes_.emplace_back();  // prototype scope
          for (NodeId param : unit_.node(n.child(1)).children) Visit(param);
          scopes_.pop_back();
        }
        return name;
      }
      default:
        Visit(id);
        return kNoNode;
    }
  }

  // Classifies what a block-scope declarator declares.
  DeclarationKind LocalKind(NodeId name, uint32_t declaration_flags) const {
    if (declaration_flags & Node::kTypedef) return DeclarationKind::kTypedef;
    const NodeId parent = unit_.node(name).parent;
    NodeId wrapper = parent;
    while (wrapper != kNoNode &&
           unit_.node(wrapper).kind == NodeKind::kParenthesizedDeclarator) {
      wrapper = unit_.node(wrapper).parent;
    }
    if (wrapper != kNoNode &&
        unit_.node(wrapper).kind == NodeKind::kFunctionDeclarator) {
      return DeclarationKind::kLocalFunction;
    }
    if (declaration_flags & Node::kExtern) return DeclarationKind::kExternVariable;
    return DeclarationKind::kLocalVariable;
  }

  void Visit(NodeId id) {
    if (id == kNoNode) return;
    const Node& n = unit_.node(id);
    switch (n.kind) {
      case NodeKind::kCompoundStatement:
      case NodeKind::kForStatement:
        scopes_.emplace_back();
        for (NodeId child : n.children) Visit(child);
        scopes_.pop_back();
        return;
      case NodeKind::kDeclaration:
        Visit(n.child(0));
        for (size_t i = 1; i < n.children.size(); ++i) {
          const Node& init = unit_.node(n.children[i]);
          const NodeId name = VisitDeclarator(init.child(0));
          if (name != kNoNode) Declare(name, LocalKind(name, n.flags));
          Visit(init.child(1));
        }
        return;
      case NodeKind::kParameterDeclaration:
        Visit(n.child(0));
        Declare(VisitDeclarator(n.child(1)),
                DeclarationKind::kPrototypeParameter);
        return;
      case NodeKind::kTypeName:
        Visit(n.child(0));
        VisitDeclarator(n.child(1));
        return;
      case NodeKind::kFieldDeclaration:
        Visit(n.child(0));
        for (size_t i = 1; i < n.children.size(); ++i) {
          VisitDeclarator(n.children[i]);
        }
        return;
      case NodeKind::kEnumerator:
        Visit(n.child(1));
        Declare(n.child(0), DeclarationKind::kEnumerator);
        return;
      case NodeKind::kIdentifier:
        Use(id);
        return;
      case NodeKind::kStatementIdentifier: {
        const std::string text = NameOf(id);
        if (n.Has(Node::kDeclaredName)) {
          map_.occurrences_.push_back({id, text, IdentifierRole::kDeclaration,
                                       id, DeclarationKind::kLabel});
          kinds_[id] = DeclarationKind::kLabel;
        } else if (auto it = labels_.find(text); it != labels_.end()) {
          map_.occurrences_.push_back({id, text, IdentifierRole::kResolvedUse,
                                       it->second, DeclarationKind::kLabel});
        } else {
          map_.occurrences_.push_back({id, text, IdentifierRole::kUnresolved,
                                       kNoNode, DeclarationKind::kNone});
        }
        return;
      }
      case NodeKind::kFieldIdentifier:
      case NodeKind::kTypeIdentifier:
        return;
      default:
        for (NodeId child : n.children) Visit(child);
        return;
    }
  }

  const SyntaxUnit& unit_;
  ScopeMap map_;
  std::vector<std::unordered_map<std::string, NodeId>> scopes_;
  std::unordered_map<std::string, NodeId> labels_;
  std::unordered_map<NodeId, DeclarationKind> kinds_;
  NodeId own_parameters_ = kNoNode;
};

ScopeMap ResolveScopes(const SyntaxUnit& unit) {
  return ScopeResolver(unit).Run();
}

}  // namespace semmut::codemodel
