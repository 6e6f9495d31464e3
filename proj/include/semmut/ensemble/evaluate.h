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

#ifndef SEMMUT_ENSEMBLE_EVALUATE_H_
#define SEMMUT_ENSEMBLE_EVALUATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semmut/ensemble/aggregate.h"
#include "semmut/ensemble/predictions.h"

namespace semmut::ensemble {

enum class Strategy {
  kMajorityTies0,
  kMajorityTies1,
  kAverage,
  kWeightedLabels,
  kWeightedProbability,
};

inline constexpr Strategy kAllStrategies[] = {
    Strategy::kMajorityTies0, Strategy::kMajorityTies1, Strategy::kAverage,
    Strategy::kWeightedLabels, Strategy::kWeightedProbability};

// Command-line spelling, e.g. "majority-ties0".
std::string_view StrategyKey(Strategy strategy);
// Report spelling, e.g. "Majority - Ties 0".
std::string_view StrategyLabel(Strategy strategy);
std::optional<Strategy> ParseStrategy(std::string_view key);
bool IsWeighted(Strategy strategy);
Encoding WeightedEncoding(Strategy strategy);

// Which predictions of a parent take part in a combined verdict.
struct Scope {
  enum class Kind {
    // One model's prediction on the original function.
    kOriginal,
    // One model on the original and all variants.
    kDataEnsemble,
    // All models on the original only.
    kModelEnsemble,
    // All models on the original and all variants.
    kDataAndModel,
  };

  Kind kind = Kind::kDataAndModel;
  // Set for kOriginal and kDataEnsemble.
  std::string model_id;

  static Scope Original(std::string model) {
    return {Kind::kOriginal, std::move(model)};
  }
  static Scope DataEnsemble(std::string model) {
    return {Kind::kDataEnsemble, std::move(model)};
  }
  static Scope ModelEnsemble() { return {Kind::kModelEnsemble, ""}; }
  static Scope DataAndModel() { return {Kind::kDataAndModel, ""}; }

  bool uses_variants() const {
    return kind == Kind::kDataEnsemble || kind == Kind::kDataAndModel;
  }
  bool single_model() const {
    return kind == Kind::kOriginal || kind == Kind::kDataEnsemble;
  }
};

std::string_view ScopeKey(Scope::Kind kind);
std::optional<Scope::Kind> ParseScopeKind(std::string_view key);

// Parents lacking an orig prediction from a model the scope needs.
class MissingPredictions : public std::runtime_error {
 public:
  MissingPredictions(std::string model_id, std::vector<int64_t> parents);
  const std::string& model_id() const { return model_id_; }
  const std::vector<int64_t>& parents() const { return parents_; }

 private:
  std::string model_id_;
  std::vector<int64_t> parents_;
};

// Parents with predictions but no ground truth, or an empty set.
class NoGroundTruth : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Accuracy {
  size_t correct = 0;
  size_t total = 0;
  double value() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / total;
  }
};

// Per-parent signed inputs of the weighted combination, aligned with
// `weights.model_ids` and `weights.transform_ids`. Models outside the scope
// contribute 0; transform scores are summed over the scope's models.
struct WeightedInputs {
  std::vector<double> orig_scores;
  std::vector<double> op_scores;
};

WeightedInputs BuildWeightedInputs(
    const std::map<std::string, ModelPredictions>& parent, int64_t parent_idx,
    const Scope& scope, Encoding encoding,
    const std::vector<std::string>& model_ids,
    const std::vector<std::string>& transform_ids);

// Combined label for one parent. `weights` is required for weighted
// strategies.
int CombineParent(const std::map<std::string, ModelPredictions>& parent,
                  int64_t parent_idx, Strategy strategy, const Scope& scope,
                  const EnsembleWeights* weights);

// Accuracy over every parent of `set`. Every parent needs ground truth and
// an orig prediction from each model in the scope.
Accuracy Evaluate(const PredictionSet& set, const std::map<int64_t, int>& truth,
                  Strategy strategy, const Scope& scope,
                  const EnsembleWeights* weights = nullptr);

struct FitConfig {
  uint64_t seed = 42;
  // Total restarts; raised to cover one one-hot start per model plus the
  // uniform start.
  unsigned restarts = 10;
  // Accuracy evaluations per restart.
  unsigned budget = 2000;
  double initial_step = 1.0;
  double min_step = 1.0 / 1024;
  // Transform ids to weight; empty means every registered operator plus
  // any other id present in the data.
  std::vector<std::string> transform_ids;
};

struct FitResult {
  EnsembleWeights weights;
  Accuracy validation;
  unsigned restart = 0;
};

// Coordinate search maximising validation accuracy of the weighted
// combination. Restarts are, in order, one-hot on each scope model, uniform
// over the free weights, then seeded random. Weights outside the scope stay
// zero. The best restart wins; ties go to the lowest index.
FitResult FitWeights(const PredictionSet& validation,
                     const std::map<int64_t, int>& truth, Encoding encoding,
                     const Scope& scope = Scope::DataAndModel(),
                     const FitConfig& config = {});

// Counts of (orig label -> variant label) pairs.
struct TransitionMatrix {
  size_t c00 = 0;
  size_t c01 = 0;
  size_t c10 = 0;
  size_t c11 = 0;

  size_t total() const { return c00 + c01 + c10 + c11; }
  size_t changed() const { return c01 + c10; }
  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) =
      default;
};

// Pairs each variant with its parent's orig prediction. All predictions
// must share one model id (std::invalid_argument otherwise); a variant
// whose parent lacks an orig prediction throws MissingPredictions.
TransitionMatrix Transitions(const std::vector<Prediction>& orig,
                             const std::vector<Prediction>& variants);

// Per transform id, for one model of the set.
std::map<std::string, TransitionMatrix> TransitionsByTransform(
    const PredictionSet& set, const std::string& model_id);

}  // namespace semmut::ensemble

#endif  // SEMMUT_ENSEMBLE_EVALUATE_H_
