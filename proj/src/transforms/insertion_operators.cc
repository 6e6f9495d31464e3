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

#include "src/transforms/support.h"

namespace semmut::transforms::internal {
namespace {

using codemodel::TextEdit;

// Inserts a snippet right after the opening brace of the function body.
// The snippet may depend on the unit, e.g. to pick a fresh name.
class InsertAtBodyStart : public TransformOperator {
 public:
  InsertAtBodyStart(OperatorInfo info,
                    std::string (*snippet)(const SyntaxUnit& unit))
      : TransformOperator(std::move(info)), snippet_(snippet) {}

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId) const override {
    const uint32_t at = unit.tokens()[BodyOpenBrace(unit)].span.end;
    return {{{at, at}, snippet_(unit)}};
  }

 protected:
  std::vector<NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    return {unit.FunctionBody()};
  }

 private:
  std::string (*snippet_)(const SyntaxUnit& unit);
};

std::string UnusedVariable(const SyntaxUnit& unit) {
  return " int " + FreshName(unit, "smut_T13_") + ";";
}

std::string UnexecutedCode(const SyntaxUnit& unit) {
  const std::string name = FreshName(unit, "smut_T14_");
  return " if (0) { int " + name + " = 0; " + name + "++; }";
}

std::string Comment(const SyntaxUnit&) {
  return " /* semantic-preserving edit */";
}

}  // namespace

std::vector<std::unique_ptr<TransformOperator>> MakeInsertionOperators() {
  std::vector<std::unique_ptr<TransformOperator>> ops;
  ops.push_back(std::make_unique<InsertAtBodyStart>(
      OperatorInfo{"T13_add_unused_variable", Category::kDeadBogusCode,
                   "Declare an unused local variable", "LimitsOfML4Vuln"},
      &UnusedVariable));
  ops.push_back(std::make_unique<InsertAtBodyStart>(
      OperatorInfo{"T14_insert_unexecuted_code", Category::kDeadBogusCode,
                   "Insert a block guarded by a constant-false condition",
                   "LimitsOfML4Vuln"},
      &UnexecutedCode));
  ops.push_back(std::make_unique<InsertAtBodyStart>(
      OperatorInfo{"T15_add_comment", Category::kFormatting,
                   "Insert a block comment", "LimitsOfML4Vuln"},
      &Comment));
  return ops;
}

}  // namespace semmut::transforms::internal
