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

#include "semmut/verify/review.h"

#include <algorithm>

#include "semmut/util/random.h"

namespace semmut::verify {
namespace {

std::string EscapeCell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += "<br>";
    } else if (c == '<') {
      out += "&lt;";
    } else if (c == '>') {
      out += "&gt;";
    } else if (c == '&') {
      out += "&amp;";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<ReviewSample> SampleForReview(
    const std::vector<transforms::Variant>& variants,
    const std::map<std::string, std::string>& originals, size_t n,
    uint64_t seed) {
  std::map<std::string, std::vector<size_t>> by_operator;
  for (size_t i = 0; i < variants.size(); ++i) {
    by_operator[variants[i].operator_id].push_back(i);
  }
  util::Rng rng(seed);
  std::vector<ReviewSample> samples;
  for (auto& [operator_id, indices] : by_operator) {
    // Partial Fisher-Yates: the first `take` slots become the sample.
    const size_t take = std::min(n, indices.size());
    for (size_t i = 0; i < take; ++i) {
      const size_t j = i + rng.Below(indices.size() - i);
      std::swap(indices[i], indices[j]);
    }
    indices.resize(take);
    std::sort(indices.begin(), indices.end());
    ReviewSample sample;
    sample.operator_id = operator_id;
    for (size_t index : indices) {
      const transforms::Variant& variant = variants[index];
      const auto parent = originals.find(variant.parent_id);
      sample.pairs.push_back(
          {variant.variant_id,
           parent == originals.end() ? std::string() : parent->second,
           variant.text});
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::string RenderReviewMarkdown(const std::vector<ReviewSample>& samples) {
  std::string out = "# Transformation review sample\n";
  for (const ReviewSample& sample : samples) {
    out += "\n## " + sample.operator_id + "\n\n";
    out += "Reviewer verdict: " +
           (sample.reviewer_verdict.empty() ? std::string("_pending_")
                                            : sample.reviewer_verdict) +
           "\n\n";
    out += "| variant | original | variant text |\n|---|---|---|\n";
    for (const ReviewPair& pair : sample.pairs) {
      out += "| " + EscapeCell(pair.variant_id) + " | <pre>" +
             EscapeCell(pair.original) + "</pre> | <pre>" +
             EscapeCell(pair.variant) + "</pre> |\n";
    }
  }
  return out;
}

}  // namespace semmut::verify
