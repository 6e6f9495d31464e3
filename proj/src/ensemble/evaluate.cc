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

#include "semmut/ensemble/evaluate.h"

#include <algorithm>
#include <set>

#include "semmut/transforms/registry.h"
#include "semmut/util/random.h"

namespace semmut::ensemble {
namespace {

std::string JoinParents(const std::vector<int64_t>& parents) {
  std::string out;
  const size_t shown = std::min<size_t>(parents.size(), 10);
  for (size_t i = 0; i < shown; ++i) {
    if (i) out += ", ";
    out += std::to_string(parents[i]);
  }
  if (parents.size() > shown) {
    out += " and " + std::to_string(parents.size() - shown) + " more";
  }
  return out;
}

size_t IndexOf(const std::vector<std::string>& ids, const std::string& id,
               const char* what) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) {
    throw DimensionMismatch(std::string("no weight for ") + what + " " + id);
  }
  return static_cast<size_t>(it - ids.begin());
}

double Encode(const Prediction& prediction, Encoding encoding) {
  return encoding == Encoding::kLabels ? SignedLabel(prediction.label)
                                       : CenteredProbability(prediction.p1);
}

// Models whose predictions take part, given all models of the data.
std::vector<std::string> ScopeModels(const Scope& scope,
                                     const std::vector<std::string>& all) {
  if (scope.single_model()) return {scope.model_id};
  return all;
}

std::vector<std::string> ModelsOf(
    const std::map<std::string, ModelPredictions>& parent) {
  std::vector<std::string> models;
  for (const auto& [model, group] : parent) models.push_back(model);
  return models;
}

// Throws unless every parent has ground truth and an orig prediction from
// each scope model.
void CheckCoverage(const PredictionSet& set, const std::map<int64_t, int>& truth,
                   const Scope& scope) {
  if (set.parents().empty()) throw NoGroundTruth("no predictions");
  std::vector<int64_t> unlabeled;
  for (const auto& [parent, by_model] : set.parents()) {
    if (!truth.count(parent)) unlabeled.push_back(parent);
  }
  if (!unlabeled.empty()) {
    throw NoGroundTruth("no ground truth for parents " + JoinParents(unlabeled));
  }
  for (const std::string& model : ScopeModels(scope, set.model_ids())) {
    std::vector<int64_t> missing;
    for (const auto& [parent, by_model] : set.parents()) {
      auto it = by_model.find(model);
      if (it == by_model.end() || !it->second.orig) missing.push_back(parent);
    }
    if (!missing.empty()) throw MissingPredictions(model, std::move(missing));
  }
}

std::vector<std::string> DefaultTransformIds(const PredictionSet& set) {
  std::vector<std::string> ids;
  for (const auto& op : transforms::Registry::Default().operators()) {
    ids.push_back(op->id());
  }
  for (const std::string& id : set.transform_ids()) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  return ids;
}

// Same summation order as WeightedPredict.
double Score(const std::vector<double>& w, const std::vector<double>& x) {
  double score = 0;
  for (size_t i = 0; i < w.size(); ++i) score += w[i] * x[i];
  return score;
}

struct FitProblem {
  std::vector<std::vector<double>> x;
  std::vector<int> y;

  size_t Correct(const std::vector<double>& w) const {
    size_t correct = 0;
    for (size_t p = 0; p < x.size(); ++p) {
      correct += ((Score(w, x[p]) > 0 ? 1 : 0) == y[p]);
    }
    return correct;
  }
};

struct SearchResult {
  std::vector<double> w;
  size_t correct = 0;
};

SearchResult CoordinateSearch(const FitProblem& problem,
                              const std::vector<size_t>& free,
                              std::vector<double> w, const FitConfig& config) {
  SearchResult best{w, problem.Correct(w)};
  unsigned evaluations = 1;
  double step = config.initial_step;
  while (step >= config.min_step && evaluations < config.budget &&
         best.correct < problem.y.size()) {
    bool improved = false;
    for (size_t j : free) {
      for (double delta : {step, -step}) {
        if (evaluations >= config.budget) break;
        std::vector<double> candidate = best.w;
        candidate[j] += delta;
        const size_t correct = problem.Correct(candidate);
        ++evaluations;
        if (correct > best.correct) {
          best = {std::move(candidate), correct};
          improved = true;
          break;
        }
      }
    }
    if (!improved) step /= 2;
  }
  return best;
}

}  // namespace

std::string_view StrategyKey(Strategy strategy) {
  switch (strategy) {
    case Strategy::kMajorityTies0: return "majority-ties0";
    case Strategy::kMajorityTies1: return "majority-ties1";
    case Strategy::kAverage: return "average";
    case Strategy::kWeightedLabels: return "weighted-labels";
    case Strategy::kWeightedProbability: return "weighted-probability";
  }
  return "";
}

std::string_view StrategyLabel(Strategy strategy) {
  switch (strategy) {
    case Strategy::kMajorityTies0: return "Majority - Ties 0";
    case Strategy::kMajorityTies1: return "Majority - Ties 1";
    case Strategy::kAverage: return "Average";
    case Strategy::kWeightedLabels: return "Weighted - Labels";
    case Strategy::kWeightedProbability: return "Weighted - Probability";
  }
  return "";
}

std::optional<Strategy> ParseStrategy(std::string_view key) {
  for (Strategy strategy : kAllStrategies) {
    if (StrategyKey(strategy) == key) return strategy;
  }
  return std::nullopt;
}

bool IsWeighted(Strategy strategy) {
  return strategy == Strategy::kWeightedLabels ||
         strategy == Strategy::kWeightedProbability;
}

Encoding WeightedEncoding(Strategy strategy) {
  return strategy == Strategy::kWeightedProbability ? Encoding::kProbability
                                                    : Encoding::kLabels;
}

std::string_view ScopeKey(Scope::Kind kind) {
  switch (kind) {
    case Scope::Kind::kOriginal: return "original";
    case Scope::Kind::kDataEnsemble: return "data";
    case Scope::Kind::kModelEnsemble: return "model";
    case Scope::Kind::kDataAndModel: return "data-and-model";
  }
  return "";
}

std::optional<Scope::Kind> ParseScopeKind(std::string_view key) {
  for (Scope::Kind kind :
       {Scope::Kind::kOriginal, Scope::Kind::kDataEnsemble,
        Scope::Kind::kModelEnsemble, Scope::Kind::kDataAndModel}) {
    if (ScopeKey(kind) == key) return kind;
  }
  return std::nullopt;
}

MissingPredictions::MissingPredictions(std::string model_id,
                                       std::vector<int64_t> parents)
    : std::runtime_error("no orig prediction of model " + model_id +
                         " for parents " + JoinParents(parents)),
      model_id_(std::move(model_id)),
      parents_(std::move(parents)) {}

WeightedInputs BuildWeightedInputs(
    const std::map<std::string, ModelPredictions>& parent, int64_t parent_idx,
    const Scope& scope, Encoding encoding,
    const std::vector<std::string>& model_ids,
    const std::vector<std::string>& transform_ids) {
  WeightedInputs inputs;
  inputs.orig_scores.assign(model_ids.size(), 0.0);
  inputs.op_scores.assign(transform_ids.size(), 0.0);
  for (const std::string& model : ScopeModels(scope, ModelsOf(parent))) {
    auto it = parent.find(model);
    if (it == parent.end() || !it->second.orig) {
      throw MissingPredictions(model, {parent_idx});
    }
    const ModelPredictions& group = it->second;
    inputs.orig_scores[IndexOf(model_ids, model, "model")] =
        Encode(*group.orig, encoding);
    if (!scope.uses_variants()) continue;
    for (const auto& [transform, list] : group.variants) {
      std::vector<double> values;
      for (const Prediction& prediction : list) {
        values.push_back(Encode(prediction, encoding));
      }
      inputs.op_scores[IndexOf(transform_ids, transform, "transform")] +=
          TransformScore(values);
    }
  }
  return inputs;
}

int CombineParent(const std::map<std::string, ModelPredictions>& parent,
                  int64_t parent_idx, Strategy strategy, const Scope& scope,
                  const EnsembleWeights* weights) {
  const std::vector<std::string> models = ScopeModels(scope, ModelsOf(parent));
  std::vector<const Prediction*> votes;
  for (const std::string& model : models) {
    auto it = parent.find(model);
    if (it == parent.end() || !it->second.orig) {
      throw MissingPredictions(model, {parent_idx});
    }
    votes.push_back(&*it->second.orig);
  }
  if (scope.kind == Scope::Kind::kOriginal) return votes.front()->label;
  if (IsWeighted(strategy)) {
    if (weights == nullptr) {
      throw std::invalid_argument(std::string(StrategyKey(strategy)) +
                                  " needs weights");
    }
    const WeightedInputs inputs =
        BuildWeightedInputs(parent, parent_idx, scope, WeightedEncoding(strategy),
                            weights->model_ids, weights->transform_ids);
    return WeightedPredict(*weights, inputs.orig_scores, inputs.op_scores);
  }
  if (scope.uses_variants()) {
    for (const std::string& model : models) {
      for (const auto& [transform, list] : parent.at(model).variants) {
        for (const Prediction& prediction : list) votes.push_back(&prediction);
      }
    }
  }
  if (strategy == Strategy::kAverage) {
    std::vector<double> probabilities;
    for (const Prediction* vote : votes) probabilities.push_back(vote->p1);
    return AverageProbability(probabilities).label;
  }
  std::vector<int> labels;
  for (const Prediction* vote : votes) labels.push_back(vote->label);
  return MajorityVote(labels, strategy == Strategy::kMajorityTies1
                                  ? TieRule::kTies1
                                  : TieRule::kTies0);
}

Accuracy Evaluate(const PredictionSet& set, const std::map<int64_t, int>& truth,
                  Strategy strategy, const Scope& scope,
                  const EnsembleWeights* weights) {
  CheckCoverage(set, truth, scope);
  Accuracy accuracy;
  for (const auto& [parent, by_model] : set.parents()) {
    const int label = CombineParent(by_model, parent, strategy, scope, weights);
    accuracy.correct += label == truth.at(parent);
    ++accuracy.total;
  }
  return accuracy;
}

FitResult FitWeights(const PredictionSet& validation,
                     const std::map<int64_t, int>& truth, Encoding encoding,
                     const Scope& scope, const FitConfig& config) {
  if (validation.parents().empty()) throw NoGroundTruth("no validation data");
  CheckCoverage(validation, truth, scope);
  if (scope.kind == Scope::Kind::kOriginal) {
    throw std::invalid_argument("weights cannot be fitted for one original");
  }

  EnsembleWeights weights;
  weights.model_ids = validation.model_ids();
  weights.transform_ids = config.transform_ids.empty()
                              ? DefaultTransformIds(validation)
                              : config.transform_ids;
  const size_t models = weights.model_ids.size();
  const size_t dimension = models + weights.transform_ids.size();

  FitProblem problem;
  for (const auto& [parent, by_model] : validation.parents()) {
    WeightedInputs inputs = BuildWeightedInputs(
        by_model, parent, scope, encoding, weights.model_ids,
        weights.transform_ids);
    std::vector<double> x = std::move(inputs.orig_scores);
    x.insert(x.end(), inputs.op_scores.begin(), inputs.op_scores.end());
    problem.x.push_back(std::move(x));
    problem.y.push_back(truth.at(parent));
  }

  std::vector<size_t> scope_models;
  for (const std::string& model : ScopeModels(scope, weights.model_ids)) {
    scope_models.push_back(IndexOf(weights.model_ids, model, "model"));
  }
  std::vector<size_t> free = scope_models;
  if (scope.uses_variants()) {
    for (size_t j = models; j < dimension; ++j) free.push_back(j);
  }
  // Coordinates that are zero for every parent cannot change a prediction.
  std::vector<size_t> active;
  for (size_t j : free) {
    for (const auto& x : problem.x) {
      if (x[j] != 0) {
        active.push_back(j);
        break;
      }
    }
  }

  std::vector<std::vector<double>> starts;
  for (size_t m : scope_models) {
    std::vector<double> one_hot(dimension, 0.0);
    one_hot[m] = 1.0;
    starts.push_back(std::move(one_hot));
  }
  std::vector<double> uniform(dimension, 0.0);
  for (size_t j : free) uniform[j] = 1.0;
  starts.push_back(std::move(uniform));
  util::Rng rng(config.seed);
  while (starts.size() < config.restarts) {
    std::vector<double> random(dimension, 0.0);
    for (size_t j : free) random[j] = rng.Uniform(-1.0, 1.0);
    starts.push_back(std::move(random));
  }

  FitResult result;
  bool have_best = false;
  size_t best_correct = 0;
  for (unsigned r = 0; r < starts.size(); ++r) {
    SearchResult found = CoordinateSearch(problem, active, starts[r], config);
    if (!have_best || found.correct > best_correct) {
      have_best = true;
      best_correct = found.correct;
      result.restart = r;
      weights.weights = std::move(found.w);
    }
  }
  result.weights = std::move(weights);
  result.validation = {best_correct, problem.y.size()};
  return result;
}

TransitionMatrix Transitions(const std::vector<Prediction>& orig,
                             const std::vector<Prediction>& variants) {
  std::set<std::string> models;
  for (const Prediction& p : orig) models.insert(p.model_id);
  for (const Prediction& p : variants) models.insert(p.model_id);
  if (models.size() > 1) {
    throw std::invalid_argument("transitions need a single model, got " +
                                std::to_string(models.size()));
  }
  std::map<int64_t, int> orig_label;
  for (const Prediction& p : orig) orig_label[p.parent_idx] = p.label;
  TransitionMatrix matrix;
  std::vector<int64_t> missing;
  for (const Prediction& p : variants) {
    auto it = orig_label.find(p.parent_idx);
    if (it == orig_label.end()) {
      missing.push_back(p.parent_idx);
      continue;
    }
    if (it->second == 0) {
      ++(p.label == 0 ? matrix.c00 : matrix.c01);
    } else {
      ++(p.label == 0 ? matrix.c10 : matrix.c11);
    }
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw MissingPredictions(models.empty() ? "" : *models.begin(),
                             std::move(missing));
  }
  return matrix;
}

std::map<std::string, TransitionMatrix> TransitionsByTransform(
    const PredictionSet& set, const std::string& model_id) {
  std::map<std::string, std::vector<Prediction>> variants;
  std::vector<Prediction> orig;
  for (const auto& [parent, by_model] : set.parents()) {
    auto it = by_model.find(model_id);
    if (it == by_model.end()) continue;
    if (it->second.orig) orig.push_back(*it->second.orig);
    for (const auto& [transform, list] : it->second.variants) {
      variants[transform].insert(variants[transform].end(), list.begin(),
                                 list.end());
    }
  }
  std::map<std::string, TransitionMatrix> out;
  for (const auto& [transform, list] : variants) {
    out[transform] = Transitions(orig, list);
  }
  return out;
}

}  // namespace semmut::ensemble
