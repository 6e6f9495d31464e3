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

#include "semmut/transforms/operator.h"

#include <array>
#include <utility>

#include "semmut/codemodel/parser.h"
#include "semmut/transforms/registry.h"

namespace semmut::transforms {
namespace {

constexpr std::array<std::pair<Category, std::string_view>, 7> kCategoryNames =
    {{
        {Category::kTrivial, "Trivial"},
        {Category::kDataAndDeclaration, "DataAndDeclaration"},
        {Category::kApi, "API"},
        {Category::kControlFlow, "ControlFlow"},
        {Category::kFunction, "Function"},
        {Category::kDeadBogusCode, "DeadBogusCode"},
        {Category::kFormatting, "Formatting"},
    }};

}  // namespace

std::string_view CategoryName(Category category) {
  for (const auto& [value, name] : kCategoryNames) {
    if (value == category) return name;
  }
  return "Unknown";
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (const auto& [value, category_name] : kCategoryNames) {
    if (category_name == name) return value;
  }
  return std::nullopt;
}

std::string MakeVariantId(std::string_view parent_id,
                          std::string_view operator_id, uint32_t site) {
  std::string id(parent_id);
  id += '#';
  id += operator_id;
  id += '#';
  id += std::to_string(site);
  return id;
}

std::vector<Site> TransformOperator::FindSites(
    const codemodel::SyntaxUnit& unit) const {
  std::vector<Site> sites;
  if (renames_identifiers() && codemodel::ContainsInlineAssembly(unit)) {
    return sites;
  }
  for (codemodel::NodeId anchor : FindAnchors(unit)) {
    Site site;
    site.operator_id = id();
    site.ordinal = static_cast<uint32_t>(sites.size());
    site.anchor = unit.node(anchor).span;
    site.anchor_node = anchor;
    sites.push_back(std::move(site));
  }
  return sites;
}

Variant Apply(const TransformOperator& op, const codemodel::SyntaxUnit& unit,
              const Site& site, std::string_view parent_id) {
  if (site.operator_id != op.id()) {
    throw std::invalid_argument("site belongs to operator " +
                                site.operator_id + ", not " + op.id());
  }
  const std::vector<Site> sites = op.FindSites(unit);
  if (site.ordinal >= sites.size() ||
      sites[site.ordinal].anchor_node != site.anchor_node ||
      !(sites[site.ordinal].anchor == site.anchor)) {
    throw std::invalid_argument("site " + std::to_string(site.ordinal) +
                                " is not a site of " + op.id() +
                                " in this function");
  }

  std::vector<codemodel::TextEdit> edits = op.Rewrite(unit, site.anchor_node);
  Variant variant;
  variant.parent_id = std::string(parent_id);
  variant.operator_id = op.id();
  variant.site = site.ordinal;
  variant.variant_id = MakeVariantId(parent_id, op.id(), site.ordinal);
  variant.edit_span = codemodel::EditHull(edits);
  variant.category = op.category();
  try {
    variant.text = codemodel::Render(unit, std::move(edits));
  } catch (const std::exception& e) {
    throw RewriteFailure(op.id(), site.ordinal, e.what());
  }
  if (variant.text == unit.text()) {
    throw RewriteFailure(op.id(), site.ordinal, "rewrite left text unchanged");
  }
  const codemodel::ParseResult reparsed = codemodel::ParseFunction(variant.text);
  if (!reparsed.ok()) {
    throw RewriteFailure(op.id(), site.ordinal,
                         "result does not parse at offset " +
                             std::to_string(reparsed.failure().position) +
                             ": " + reparsed.failure().message);
  }
  return variant;
}

ApplyAllResult ApplyAll(const Registry& registry,
                        const codemodel::SyntaxUnit& unit,
                        std::string_view parent_id,
                        const ApplyAllConfig& config) {
  ApplyAllResult result;
  for (const auto& op : registry.operators()) {
    const std::vector<Site> sites = op->FindSites(unit);
    const size_t limit =
        std::min<size_t>(sites.size(), config.max_sites_per_op);
    for (size_t i = 0; i < limit; ++i) {
      try {
        result.variants.push_back(Apply(*op, unit, sites[i], parent_id));
      } catch (const RewriteFailure& failure) {
        result.failures.push_back(failure);
      }
    }
  }
  return result;
}

ApplyAllResult ApplyAll(const codemodel::SyntaxUnit& unit,
                        std::string_view parent_id,
                        const ApplyAllConfig& config) {
  return ApplyAll(Registry::Default(), unit, parent_id, config);
}

}  // namespace semmut::transforms
