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

#ifndef SEMMUT_ENSEMBLE_REPORT_H_
#define SEMMUT_ENSEMBLE_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semmut/ensemble/evaluate.h"

namespace semmut::ensemble {

struct ReportRow {
  // "Original", "Data ensemble", "Model ensemble" or "Data and model".
  std::string group;
  // Strategy label, or "Original".
  std::string strategy;
  // One entry per report model; joint rows hold one shared value.
  std::vector<std::optional<Accuracy>> accuracy;
  bool joint = false;
};

struct FittedWeights {
  std::string scope;
  std::string model_id;
  Encoding encoding = Encoding::kLabels;
  FitResult fit;
};

struct EnsembleReport {
  std::vector<std::string> model_ids;
  std::vector<ReportRow> rows;
  // Per model: all variants, then per transform id.
  std::map<std::string, TransitionMatrix> transitions;
  std::map<std::string, std::map<std::string, TransitionMatrix>>
      transitions_by_transform;
  std::vector<FittedWeights> fitted;
};

// Accuracy of every scope and strategy on `test`. Weighted rows are fitted
// on `validation` when given and left empty otherwise.
EnsembleReport BuildReport(const PredictionSet& test,
                           const std::map<int64_t, int>& test_truth,
                           const PredictionSet* validation = nullptr,
                           const std::map<int64_t, int>* validation_truth = nullptr,
                           const FitConfig& config = {});

std::string ReportToMarkdown(const EnsembleReport& report);
std::string ReportToJson(const EnsembleReport& report);

// Accuracy as reported: four decimals.
std::string FormatAccuracy(double accuracy);

}  // namespace semmut::ensemble

#endif  // SEMMUT_ENSEMBLE_REPORT_H_
