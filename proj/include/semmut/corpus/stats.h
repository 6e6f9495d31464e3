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

#ifndef SEMMUT_CORPUS_STATS_H_
#define SEMMUT_CORPUS_STATS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semmut/corpus/dataset.h"
#include "semmut/corpus/transform.h"

namespace semmut::corpus {

struct OperatorApplicability {
  std::string operator_id;
  // Functions with at least one variant from this operator.
  size_t functions = 0;
  // functions / parseable functions.
  double rate = 0;
};

struct ApplicabilityStats {
  size_t records = 0;
  // Records that appear in the variants file.
  size_t parseable = 0;
  // Every registered operator in id order, then any other ids seen.
  std::vector<OperatorApplicability> operators;
  // Distinct operators per function -> number of functions.
  std::map<uint32_t, size_t> histogram;
  double mean = 0;
  uint32_t min = 0;
  uint32_t max = 0;
};

// Throws std::invalid_argument if a variant's parent is not among `records`.
ApplicabilityStats ComputeStats(const std::vector<VariantRecord>& variants,
                                const std::vector<DatasetRecord>& records);

// Mean rounded to one decimal place.
double RoundedMean(const ApplicabilityStats& stats);

std::string StatsToJson(const ApplicabilityStats& stats);
std::string StatsToMarkdown(const ApplicabilityStats& stats);

}  // namespace semmut::corpus

#endif  // SEMMUT_CORPUS_STATS_H_
