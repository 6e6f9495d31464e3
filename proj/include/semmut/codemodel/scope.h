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

#ifndef SEMMUT_CODEMODEL_SCOPE_H_
#define SEMMUT_CODEMODEL_SCOPE_H_

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semmut/codemodel/syntax.h"

namespace semmut::codemodel {

enum class IdentifierRole { kDeclaration, kResolvedUse, kUnresolved };

enum class DeclarationKind {
  kNone,
  kFunction,
  kParameter,
  kLocalVariable,
  kLocalFunction,
  kExternVariable,
  kTypedef,
  kEnumerator,
  kLabel,
  kPrototypeParameter,
};

// One identifier occurrence in the ordinary or label namespace. Member names,
// tags and type names are not occurrences.
struct Occurrence {
  NodeId node = kNoNode;
  std::string name;
  IdentifierRole role = IdentifierRole::kUnresolved;
  // The declaring identifier node: itself for declarations, the target for
  // resolved uses, kNoNode when unresolved.
  NodeId declaration = kNoNode;
  DeclarationKind declaration_kind = DeclarationKind::kNone;
};

class ScopeMap {
 public:
  // All occurrences, in document order.
  const std::vector<Occurrence>& occurrences() const { return occurrences_; }
  const Occurrence* Find(NodeId node) const;
  std::vector<NodeId> UsesOf(NodeId declaration) const;
  std::vector<NodeId> Declarations(DeclarationKind kind) const;
  // True when another declaration of the same name shares its scope.
  bool IsRedeclared(NodeId declaration) const {
    return redeclared_.contains(declaration);
  }

  friend bool operator==(const ScopeMap& a, const ScopeMap& b);

 private:
  friend class ScopeResolver;

  std::vector<Occurrence> occurrences_;
  std::unordered_map<NodeId, size_t> index_;
  std::unordered_set<NodeId> redeclared_;
};

// Maps every identifier use to its innermost visible declaration. Names
// declared outside the function (globals, macros, library functions) are
// classified unresolved; that is not an error.
ScopeMap ResolveScopes(const SyntaxUnit& unit);

}  // namespace semmut::codemodel

#endif  // SEMMUT_CODEMODEL_SCOPE_H_
