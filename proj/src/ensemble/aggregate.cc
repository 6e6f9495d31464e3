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

#include "semmut/ensemble/aggregate.h"

#include <cmath>

#include "json.hpp"

namespace semmut::ensemble {

std::string_view EncodingName(Encoding encoding) {
  return encoding == Encoding::kLabels ? "labels" : "probability";
}

int MajorityVote(const std::vector<int>& labels, TieRule tie_rule) {
  if (labels.empty()) throw EmptyInput("majority vote of no labels");
  size_t ones = 0;
  for (int label : labels) {
    if (label != 0 && label != 1) {
      throw OutOfRange("label " + std::to_string(label) + " is not 0 or 1");
    }
    ones += label;
  }
  const size_t zeros = labels.size() - ones;
  if (ones != zeros) return ones > zeros ? 1 : 0;
  return tie_rule == TieRule::kTies1 ? 1 : 0;
}

AverageResult AverageProbability(const std::vector<double>& probabilities) {
  if (probabilities.empty()) throw EmptyInput("average of no probabilities");
  double sum = 0;
  for (double p : probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw OutOfRange("probability " + std::to_string(p) +
                       " is outside [0, 1]");
    }
    sum += p;
  }
  AverageResult result;
  result.mean_p1 = sum / static_cast<double>(probabilities.size());
  result.label = result.mean_p1 > 0.5 ? 1 : 0;
  return result;
}

int SignedLabel(int label) {
  if (label != 0 && label != 1) {
    throw OutOfRange("label " + std::to_string(label) + " is not 0 or 1");
  }
  return label == 1 ? 1 : -1;
}

double CenteredProbability(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw OutOfRange("probability " + std::to_string(p1) + " is outside [0, 1]");
  }
  return p1 - 0.5;
}

double TransformScore(const std::vector<double>& values) {
  double sum = 0;
  for (double value : values) sum += value;
  return sum;
}

void EnsembleWeights::Validate() const {
  if (weights.size() != model_ids.size() + transform_ids.size()) {
    throw DimensionMismatch(
        "expected " + std::to_string(model_ids.size() + transform_ids.size()) +
        " weights, got " + std::to_string(weights.size()));
  }
}

int WeightedPredict(const EnsembleWeights& weights,
                    const std::vector<double>& orig_scores,
                    const std::vector<double>& op_scores) {
  weights.Validate();
  if (orig_scores.size() != weights.model_ids.size() ||
      op_scores.size() != weights.transform_ids.size()) {
    throw DimensionMismatch(
        "scores have " + std::to_string(orig_scores.size()) + "+" +
        std::to_string(op_scores.size()) + " entries, weights expect " +
        std::to_string(weights.model_ids.size()) + "+" +
        std::to_string(weights.transform_ids.size()));
  }
  double score = 0;
  for (size_t i = 0; i < orig_scores.size(); ++i) {
    score += weights.model_weight(i) * orig_scores[i];
  }
  for (size_t i = 0; i < op_scores.size(); ++i) {
    score += weights.transform_weight(i) * op_scores[i];
  }
  return score > 0 ? 1 : 0;
}

std::string WeightsToJson(const EnsembleWeights& weights) {
  weights.Validate();
  nlohmann::ordered_json json;
  json["model_ids"] = weights.model_ids;
  json["transform_ids"] = weights.transform_ids;
  json["weights"] = weights.weights;
  return json.dump(2) + "\n";
}

EnsembleWeights WeightsFromJson(std::string_view text) {
  EnsembleWeights weights;
  try {
    const nlohmann::json json = nlohmann::json::parse(text);
    weights.model_ids = json.at("model_ids").get<std::vector<std::string>>();
    weights.transform_ids =
        json.at("transform_ids").get<std::vector<std::string>>();
    weights.weights = json.at("weights").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed weights: ") + e.what());
  }
  for (double w : weights.weights) {
    if (!std::isfinite(w)) throw std::invalid_argument("non-finite weight");
  }
  weights.Validate();
  return weights;
}

}  // namespace semmut::ensemble
