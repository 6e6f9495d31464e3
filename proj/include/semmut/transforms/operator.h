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

#ifndef SEMMUT_TRANSFORMS_OPERATOR_H_
#define SEMMUT_TRANSFORMS_OPERATOR_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semmut/codemodel/render.h"
#include "semmut/codemodel/syntax.h"

namespace semmut::transforms {

enum class Category {
  kTrivial,
  kDataAndDeclaration,
  kApi,
  kControlFlow,
  kFunction,
  kDeadBogusCode,
  kFormatting,
};

std::string_view CategoryName(Category category);
std::optional<Category> ParseCategory(std::string_view name);

struct OperatorInfo {
  std::string id;
  Category category;
  std::string description;
  // Repository family whose transformation this operator reimplements.
  std::string attribution;
};

// One place where an operator can fire. Ordinals are 0-based in document
// order and stable for a given function text.
struct Site {
  std::string operator_id;
  uint32_t ordinal = 0;
  codemodel::Span anchor;
  codemodel::NodeId anchor_node = codemodel::kNoNode;
};

struct Variant {
  std::string parent_id;
  std::string operator_id;
  uint32_t site = 0;
  // "<parent_id>#<operator_id>#<site>"
  std::string variant_id;
  std::string text;
  // Region of the parent text the rewrite touched.
  codemodel::Span edit_span;
  Category category = Category::kTrivial;
};

std::string MakeVariantId(std::string_view parent_id,
                          std::string_view operator_id, uint32_t site);

// A rewrite produced text that does not parse or equals its input.
class RewriteFailure : public std::runtime_error {
 public:
  RewriteFailure(std::string operator_id, uint32_t site, std::string message)
      : std::runtime_error(operator_id + "#" + std::to_string(site) + ": " +
                           message),
        operator_id_(std::move(operator_id)),
        site_(site) {}

  const std::string& operator_id() const { return operator_id_; }
  uint32_t site() const { return site_; }

 private:
  std::string operator_id_;
  uint32_t site_;
};

// A semantic-preserving rewrite rule. Implementations are stateless; both
// entry points are pure functions of the unit.
class TransformOperator {
 public:
  explicit TransformOperator(OperatorInfo info) : info_(std::move(info)) {}
  virtual ~TransformOperator() = default;

  TransformOperator(const TransformOperator&) = delete;
  TransformOperator& operator=(const TransformOperator&) = delete;

  const OperatorInfo& info() const { return info_; }
  const std::string& id() const { return info_.id; }
  Category category() const { return info_.category; }

  // Renaming operators are inapplicable to functions with inline assembly,
  // whose operand strings may refer to names the rename cannot see.
  virtual bool renames_identifiers() const { return false; }

  std::vector<Site> FindSites(const codemodel::SyntaxUnit& unit) const;

  // Edits in the unit's text that realise the rewrite at `anchor`.
  virtual std::vector<codemodel::TextEdit> Rewrite(
      const codemodel::SyntaxUnit& unit, codemodel::NodeId anchor) const = 0;

 protected:
  // Candidate anchor nodes in document order.
  virtual std::vector<codemodel::NodeId> FindAnchors(
      const codemodel::SyntaxUnit& unit) const = 0;

 private:
  OperatorInfo info_;
};

// Applies `op` at `site`, which must come from op.FindSites(unit). Throws
// RewriteFailure when the result does not re-parse or is unchanged.
Variant Apply(const TransformOperator& op, const codemodel::SyntaxUnit& unit,
              const Site& site, std::string_view parent_id = "fn");

struct ApplyAllConfig {
  uint32_t max_sites_per_op = 4;
};

struct ApplyAllResult {
  std::vector<Variant> variants;
  std::vector<RewriteFailure> failures;
};

class Registry;

// Every registered operator at up to `max_sites_per_op` sites each, in
// registry then site order.
ApplyAllResult ApplyAll(const codemodel::SyntaxUnit& unit,
                        std::string_view parent_id,
                        const ApplyAllConfig& config = {});
ApplyAllResult ApplyAll(const Registry& registry,
                        const codemodel::SyntaxUnit& unit,
                        std::string_view parent_id,
                        const ApplyAllConfig& config = {});

}  // namespace semmut::transforms

#endif  // SEMMUT_TRANSFORMS_OPERATOR_H_
