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

#ifndef SEMMUT_ENSEMBLE_PREDICTIONS_H_
#define SEMMUT_ENSEMBLE_PREDICTIONS_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semmut::ensemble {

inline constexpr char kOriginalTransformId[] = "orig";

// One classifier verdict on one function text.
struct Prediction {
  int64_t parent_idx = 0;
  std::string variant_id;
  // "orig" or an operator id.
  std::string transform_id;
  std::string model_id;
  int label = 0;
  // Probability of label 1.
  double p1 = 0;

  bool is_original() const { return transform_id == kOriginalTransformId; }
};

std::string ToJsonLine(const Prediction& prediction);

struct LineError {
  // 1-based.
  size_t line = 0;
  std::string message;
};

// A file violated its schema. what() lists every offending line.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, std::vector<LineError> errors);
  const std::vector<LineError>& errors() const { return errors_; }

 private:
  std::vector<LineError> errors_;
};

struct PredictionsParseResult {
  std::vector<Prediction> predictions;
  std::vector<LineError> errors;
};

// Validates field presence and types, label in {0,1} and p1 in [0,1].
PredictionsParseResult ParsePredictionsJsonl(std::istream& in);
// Throws SchemaError on any invalid line or an unreadable file.
std::vector<Prediction> LoadPredictions(const std::string& path);

// Ground truth by idx from a dataset-style file: {"idx": int, "target": 0|1,
// ...}. Throws SchemaError on any invalid line or an unreadable file.
std::map<int64_t, int> ParseTruthJsonl(std::istream& in,
                                       const std::string& name = "<stream>");
std::map<int64_t, int> LoadTruth(const std::string& path);

struct ModelPredictions {
  std::optional<Prediction> orig;
  // Variant predictions by transform id, each list sorted by variant id.
  std::map<std::string, std::vector<Prediction>> variants;
};

// Predictions grouped by parent, then model, then transform.
class PredictionSet {
 public:
  PredictionSet() = default;

  // Throws std::invalid_argument on a second orig prediction for a
  // (parent, model) pair or a repeated (model, variant id).
  static PredictionSet Build(std::vector<Prediction> predictions);

  const std::map<int64_t, std::map<std::string, ModelPredictions>>& parents()
      const {
    return parents_;
  }
  // Sorted.
  const std::vector<std::string>& model_ids() const { return model_ids_; }
  // Non-orig transform ids seen, sorted.
  const std::vector<std::string>& transform_ids() const {
    return transform_ids_;
  }
  size_t size() const { return size_; }

 private:
  std::map<int64_t, std::map<std::string, ModelPredictions>> parents_;
  std::vector<std::string> model_ids_;
  std::vector<std::string> transform_ids_;
  size_t size_ = 0;
};

}  // namespace semmut::ensemble

#endif  // SEMMUT_ENSEMBLE_PREDICTIONS_H_
