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

#ifndef SEMMUT_VERIFY_REVIEW_H_
#define SEMMUT_VERIFY_REVIEW_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semmut/transforms/operator.h"

namespace semmut::verify {

struct ReviewPair {
  std::string variant_id;
  std::string original;
  std::string variant;
};

struct ReviewSample {
  std::string operator_id;
  std::vector<ReviewPair> pairs;
  // Filled in by a human reviewer.
  std::string reviewer_verdict;
};

// Up to `n` variants per operator, drawn without replacement with `seed`.
// Operators appear in id order and pairs in input order. `originals` maps
// parent ids to parent text.
std::vector<ReviewSample> SampleForReview(
    const std::vector<transforms::Variant>& variants,
    const std::map<std::string, std::string>& originals, size_t n = 20,
    uint64_t seed = 42);

// Side-by-side Markdown: one section per operator, one table row per pair.
std::string RenderReviewMarkdown(const std::vector<ReviewSample>& samples);

}  // namespace semmut::verify

#endif  // SEMMUT_VERIFY_REVIEW_H_
