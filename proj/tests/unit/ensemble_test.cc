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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "semmut/ensemble/aggregate.h"
#include "semmut/ensemble/evaluate.h"
#include "semmut/ensemble/predictions.h"
#include "semmut/ensemble/report.h"

namespace semmut::ensemble {
namespace {

TEST(AggregateTest, WorkedExamples) {
  EXPECT_EQ(-1, SignedLabel(0));
  EXPECT_EQ(1, SignedLabel(1));
  EXPECT_EQ(-2.0, TransformScore({-1, -1, -1, 1}));
  EXPECT_EQ(0.0, TransformScore({}));
  EXPECT_DOUBLE_EQ(0.1, TransformScore({0.3, -0.2}));
  EXPECT_DOUBLE_EQ(0.3, CenteredProbability(0.8));
  EXPECT_EQ(0.0, CenteredProbability(0.5));
  EXPECT_EQ(-0.5, CenteredProbability(0.0));
  EXPECT_EQ(1, AverageProbability({0.52}).label);
  const AverageResult tie = AverageProbability({0.2, 0.8});
  EXPECT_EQ(0.5, tie.mean_p1);
  EXPECT_EQ(0, tie.label);
  const AverageResult high = AverageProbability({0.98, 0.98});
  EXPECT_EQ(1, high.label);
  EXPECT_DOUBLE_EQ(0.98, high.mean_p1);
  EXPECT_EQ(0, MajorityVote({0, 1}, TieRule::kTies0));
  EXPECT_EQ(1, MajorityVote({0, 1}, TieRule::kTies1));
  EXPECT_EQ(1, MajorityVote({1, 1, 0}, TieRule::kTies0));
  EXPECT_EQ(1, MajorityVote({1, 1, 0}, TieRule::kTies1));
  EXPECT_EQ(1, MajorityVote({1, 1, 1, 1, 1, 1, 1, 0, 0, 0}, TieRule::kTies0));
}

TEST(AggregateTest, InputValidation) {
  EXPECT_THROW(MajorityVote({}, TieRule::kTies0), EmptyInput);
  EXPECT_THROW(MajorityVote({2}, TieRule::kTies0), OutOfRange);
  EXPECT_THROW(AverageProbability({}), EmptyInput);
  EXPECT_THROW(AverageProbability({1.5}), OutOfRange);
  EXPECT_THROW(AverageProbability({std::nan("")}), OutOfRange);
  // signed_label applied twice leaves its domain.
  EXPECT_THROW(SignedLabel(SignedLabel(0)), OutOfRange);
  EXPECT_THROW(CenteredProbability(-0.1), OutOfRange);
}

TEST(AggregateTest, MajorityMatchesCountingOracle) {
  size_t cases = 0;
  for (int length = 1; length <= 7; ++length) {
    for (int bits = 0; bits < (1 << length); ++bits) {
      std::vector<int> labels;
      int ones = 0;
      for (int i = 0; i < length; ++i) {
        labels.push_back((bits >> i) & 1);
        ones += (bits >> i) & 1;
      }
      const int zeros = length - ones;
      EXPECT_EQ(ones > zeros ? 1 : 0,
                MajorityVote(labels, TieRule::kTies0));
      EXPECT_EQ(ones >= zeros ? 1 : 0, MajorityVote(labels, TieRule::kTies1));
      ++cases;
    }
  }
  EXPECT_EQ(254u, cases);
}

TEST(AggregateTest, AveragingBoundsAndPermutationInvariance) {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> probs(1 + trial % 9);
    for (double& p : probs) p = unit(gen);
    const AverageResult a = AverageProbability(probs);
    EXPECT_LE(*std::min_element(probs.begin(), probs.end()), a.mean_p1 + 1e-15);
    EXPECT_GE(*std::max_element(probs.begin(), probs.end()), a.mean_p1 - 1e-15);
    std::vector<int> labels;
    for (double p : probs) labels.push_back(p > 0.5);
    std::vector<double> shuffled = probs;
    std::vector<int> shuffled_labels = labels;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    std::shuffle(shuffled_labels.begin(), shuffled_labels.end(), gen);
    EXPECT_EQ(a.label, AverageProbability(shuffled).label);
    EXPECT_NEAR(a.mean_p1, AverageProbability(shuffled).mean_p1, 1e-12);
    for (TieRule rule : {TieRule::kTies0, TieRule::kTies1}) {
      EXPECT_EQ(MajorityVote(labels, rule), MajorityVote(shuffled_labels, rule));
    }
  }
}

TEST(AggregateTest, EncodingsAreOddAroundTheBoundary) {
  EXPECT_EQ(-SignedLabel(0), SignedLabel(1));
  for (int i = 0; i <= 64; ++i) {
    const double p = i / 64.0;
    EXPECT_EQ(-CenteredProbability(p), CenteredProbability(1.0 - p));
  }
}

TEST(WeightedPredictTest, SpecExample) {
  EnsembleWeights weights{{"a", "b"}, {"T1", "T2"}, {0.5, 0.25, 1, -1}};
  // 0.5 - 0.25 - 2 - 1 = -2.75
  EXPECT_EQ(0, WeightedPredict(weights, {1, -1}, {-2, 1}));
  weights.weights = {0, 0, 0, 0};
  EXPECT_EQ(0, WeightedPredict(weights, {1, -1}, {-2, 1}));
  weights.weights = {1, 0, 0, 0};
  EXPECT_EQ(1, WeightedPredict(weights, {1, -1}, {-2, 1}));
  EXPECT_THROW(WeightedPredict(weights, {1}, {-2, 1}), DimensionMismatch);
  weights.weights = {1, 0, 0};
  EXPECT_THROW(WeightedPredict(weights, {1, -1}, {-2, 1}), DimensionMismatch);
}

// Weights and scores are multiples of 1/8 with small magnitude, so every
// summation order is exact and the oracle cannot disagree through rounding.
TEST(WeightedPredictTest, MatchesDotProductOracleAndScaleInvariance) {
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> eighths(-16, 16);
  for (int trial = 0; trial < 1000; ++trial) {
    const size_t models = 1 + trial % 3;
    const size_t ops = trial % 17;
    EnsembleWeights weights;
    for (size_t i = 0; i < models; ++i) weights.model_ids.push_back("m" + std::to_string(i));
    for (size_t i = 0; i < ops; ++i) weights.transform_ids.push_back("T" + std::to_string(i));
    std::vector<double> all_scores;
    for (size_t i = 0; i < models + ops; ++i) {
      weights.weights.push_back(eighths(gen) / 8.0);
      all_scores.push_back(eighths(gen) / 8.0);
    }
    const std::vector<double> orig(all_scores.begin(), all_scores.begin() + models);
    const std::vector<double> op(all_scores.begin() + models, all_scores.end());
    const double oracle = std::inner_product(
        weights.weights.rbegin(), weights.weights.rend(), all_scores.rbegin(), 0.0);
    const int label = WeightedPredict(weights, orig, op);
    EXPECT_EQ(oracle > 0 ? 1 : 0, label);
    for (double c : {0.125, 3.0, 64.0}) {
      EnsembleWeights scaled = weights;
      for (double& w : scaled.weights) w *= c;
      EXPECT_EQ(label, WeightedPredict(scaled, orig, op));
    }
  }
}

TEST(WeightsJsonTest, RoundTripsAtFullPrecision) {
  EnsembleWeights weights{{"a"}, {"T1", "T2"}, {0.1, 1.0 / 3.0, -2.5e-300}};
  const EnsembleWeights back = WeightsFromJson(WeightsToJson(weights));
  EXPECT_EQ(weights.model_ids, back.model_ids);
  EXPECT_EQ(weights.transform_ids, back.transform_ids);
  EXPECT_EQ(weights.weights, back.weights);
  EXPECT_THROW(WeightsFromJson("{\"model_ids\":[\"a\"],\"transform_ids\":[],"
                               "\"weights\":[1,2]}"),
               DimensionMismatch);
  EXPECT_THROW(WeightsFromJson("[]"), std::invalid_argument);
}

Prediction Pred(int64_t parent, const std::string& model,
                const std::string& transform, int site, int label, double p1) {
  Prediction p;
  p.parent_idx = parent;
  p.model_id = model;
  p.transform_id = transform;
  p.variant_id = std::to_string(parent) + "#" + transform + "#" + std::to_string(site);
  p.label = label;
  p.p1 = p1;
  return p;
}

TEST(PredictionsTest, ParsesAndValidatesLines) {
  const Prediction p = Pred(3, "vulberta", "T04_for_to_while", 1, 1, 0.75);
  std::istringstream in(ToJsonLine(p) + "\n\n" +
                        "{\"parent_idx\":1,\"variant_id\":\"x\",\"transform_id\":"
                        "\"orig\",\"model_id\":\"m\",\"label\":2,\"p1\":0.5}\n" +
                        "{\"parent_idx\":1,\"variant_id\":\"x\",\"transform_id\":"
                        "\"orig\",\"model_id\":\"m\",\"label\":1,\"p1\":1.5}\n" +
                        "{\"parent_idx\":1}\n");
  const PredictionsParseResult result = ParsePredictionsJsonl(in);
  ASSERT_EQ(1u, result.predictions.size());
  EXPECT_EQ(ToJsonLine(p), ToJsonLine(result.predictions[0]));
  ASSERT_EQ(3u, result.errors.size());
  EXPECT_EQ(3u, result.errors[0].line);
  EXPECT_EQ("\"label\" is not 0 or 1", result.errors[0].message);
  EXPECT_EQ("\"p1\" is outside [0, 1]", result.errors[1].message);
  EXPECT_EQ(5u, result.errors[2].line);
  EXPECT_EQ(
      "{\"parent_idx\":3,\"variant_id\":\"3#T04_for_to_while#1\","
      "\"transform_id\":\"T04_for_to_while\",\"model_id\":\"vulberta\","
      "\"label\":1,\"p1\":0.75}",
      ToJsonLine(p));
}

TEST(PredictionsTest, TruthAndSetValidation) {
  std::istringstream truth_in("{\"idx\":1,\"func\":\"f\",\"target\":1}\n{\"idx\":2,\"target\":0}\n");
  EXPECT_EQ((std::map<int64_t, int>{{1, 1}, {2, 0}}), ParseTruthJsonl(truth_in));
  std::istringstream bad("{\"idx\":1}\n{\"idx\":1,\"target\":1}\n{\"idx\":1,\"target\":0}\n");
  try {
    ParseTruthJsonl(bad, "truth.jsonl");
    FAIL();
  } catch (const SchemaError& e) {
    ASSERT_EQ(2u, e.errors().size());
    EXPECT_EQ(1u, e.errors()[0].line);
    EXPECT_EQ(3u, e.errors()[1].line);
    EXPECT_NE(std::string::npos, std::string(e.what()).find("line 3: duplicate"));
  }
  EXPECT_THROW(PredictionSet::Build({Pred(1, "m", "orig", 0, 1, 0.6),
                                     Pred(1, "m", "orig", 1, 1, 0.6)}),
               std::invalid_argument);
  EXPECT_THROW(PredictionSet::Build({Pred(1, "m", "T1", 0, 1, 0.6),
                                     Pred(1, "m", "T1", 0, 0, 0.6)}),
               std::invalid_argument);
}

// Independent re-statement of each strategy on flat prediction lists.
int OracleCombine(const std::vector<Prediction>& votes, Strategy strategy) {
  int ones = 0;
  double sum = 0;
  for (const Prediction& p : votes) {
    ones += p.label;
    sum += p.p1;
  }
  const int zeros = static_cast<int>(votes.size()) - ones;
  switch (strategy) {
    case Strategy::kMajorityTies0: return ones > zeros;
    case Strategy::kMajorityTies1: return ones >= zeros;
    case Strategy::kAverage: return sum / votes.size() > 0.5;
    default: return -1;
  }
}

TEST(EvaluateTest, ToySetMatchesOracleForEveryScopeAndStrategy) {
  std::vector<Prediction> all = {
      Pred(1, "a", "orig", 0, 1, 0.9),  Pred(1, "b", "orig", 0, 0, 0.4),
      Pred(1, "a", "T1", 0, 0, 0.2),    Pred(1, "a", "T1", 1, 0, 0.3),
      Pred(1, "b", "T2", 0, 1, 0.7),
      Pred(2, "a", "orig", 0, 0, 0.45), Pred(2, "b", "orig", 0, 0, 0.1),
      Pred(2, "b", "T1", 0, 1, 0.95),
      Pred(3, "a", "orig", 0, 1, 0.55), Pred(3, "b", "orig", 0, 1, 0.6),
      Pred(3, "a", "T2", 0, 0, 0.05),   Pred(3, "a", "T2", 1, 0, 0.15),
      Pred(3, "b", "T2", 0, 0, 0.35),
      Pred(4, "a", "orig", 0, 0, 0.5),  Pred(4, "b", "orig", 0, 1, 0.5),
  };
  const std::map<int64_t, int> truth = {{1, 1}, {2, 0}, {3, 1}, {4, 0}};
  const PredictionSet set = PredictionSet::Build(all);
  const std::vector<std::pair<Scope, std::vector<std::string>>> scopes = {
      {Scope::DataEnsemble("a"), {"a"}},
      {Scope::DataEnsemble("b"), {"b"}},
      {Scope::ModelEnsemble(), {"a", "b"}},
      {Scope::DataAndModel(), {"a", "b"}}};
  for (const auto& [scope, models] : scopes) {
    for (Strategy strategy : {Strategy::kMajorityTies0, Strategy::kMajorityTies1,
                              Strategy::kAverage}) {
      size_t correct = 0;
      for (const auto& [parent, label] : truth) {
        std::vector<Prediction> votes;
        for (const Prediction& p : all) {
          const bool model_ok =
              std::find(models.begin(), models.end(), p.model_id) != models.end();
          if (p.parent_idx == parent && model_ok &&
              (p.is_original() || scope.uses_variants())) {
            votes.push_back(p);
          }
        }
        correct += OracleCombine(votes, strategy) == label;
      }
      const Accuracy accuracy = Evaluate(set, truth, strategy, scope);
      EXPECT_EQ(correct, accuracy.correct)
          << ScopeKey(scope.kind) << scope.model_id << " " << StrategyKey(strategy);
      EXPECT_EQ(4u, accuracy.total);
    }
  }
  // Original baselines are each model's orig label accuracy.
  EXPECT_EQ(4u, Evaluate(set, truth, Strategy::kAverage, Scope::Original("a")).correct);
  EXPECT_EQ(2u, Evaluate(set, truth, Strategy::kAverage, Scope::Original("b")).correct);
  // Weighted with labels, all weight on T2: parent 1 -> +1, 3 -> -3, else 0.
  EnsembleWeights weights{{"a", "b"}, {"T1", "T2"}, {0, 0, 0, 1}};
  const Accuracy weighted = Evaluate(set, truth, Strategy::kWeightedLabels,
                                     Scope::DataAndModel(), &weights);
  EXPECT_EQ(3u, weighted.correct);
  EXPECT_THROW(Evaluate(set, truth, Strategy::kWeightedLabels, Scope::DataAndModel()),
               std::invalid_argument);
}

TEST(EvaluateTest, ModelEnsembleAverageOfPerfectModels) {
  std::vector<Prediction> all;
  std::map<int64_t, int> truth;
  for (int parent = 0; parent < 10; ++parent) {
    const int label = parent % 3 == 0;
    truth[parent] = label;
    all.push_back(Pred(parent, "a", "orig", 0, label, label ? 0.9 : 0.1));
    all.push_back(Pred(parent, "b", "orig", 0, label, label ? 0.7 : 0.2));
  }
  EXPECT_EQ(1.0, Evaluate(PredictionSet::Build(all), truth, Strategy::kAverage,
                          Scope::ModelEnsemble())
                     .value());
}

TEST(EvaluateTest, MissingOrigPredictionIsAnError) {
  const PredictionSet set = PredictionSet::Build(
      {Pred(1, "a", "orig", 0, 1, 0.9), Pred(2, "a", "T1", 0, 1, 0.9),
       Pred(1, "b", "orig", 0, 1, 0.9)});
  const std::map<int64_t, int> truth = {{1, 1}, {2, 1}};
  try {
    Evaluate(set, truth, Strategy::kAverage, Scope::DataEnsemble("a"));
    FAIL();
  } catch (const MissingPredictions& e) {
    EXPECT_EQ("a", e.model_id());
    EXPECT_EQ(std::vector<int64_t>{2}, e.parents());
  }
  EXPECT_THROW(Evaluate(set, {{1, 1}}, Strategy::kAverage, Scope::DataEnsemble("b")),
               NoGroundTruth);
}

TEST(FitWeightsTest, PerfectModelIsRecovered) {
  std::vector<Prediction> all;
  std::map<int64_t, int> truth;
  std::mt19937 gen(1);
  for (int parent = 0; parent < 40; ++parent) {
    const int label = gen() % 2;
    truth[parent] = label;
    all.push_back(Pred(parent, "good", "orig", 0, label, label ? 0.8 : 0.3));
    const int noise = gen() % 2;
    all.push_back(Pred(parent, "noise", "orig", 0, noise, noise ? 0.6 : 0.4));
    all.push_back(Pred(parent, "noise", "T01_rename_local_variable", 0, gen() % 2, 0.5));
  }
  const PredictionSet set = PredictionSet::Build(all);
  for (Encoding encoding : {Encoding::kLabels, Encoding::kProbability}) {
    const FitResult fit = FitWeights(set, truth, encoding);
    EXPECT_EQ(1.0, fit.validation.value());
    EXPECT_EQ(2u + 16u, fit.weights.weights.size());
    const Strategy strategy = encoding == Encoding::kLabels
                                  ? Strategy::kWeightedLabels
                                  : Strategy::kWeightedProbability;
    // The reported accuracy is what Evaluate sees with the fitted weights.
    EXPECT_EQ(fit.validation.correct,
              Evaluate(set, truth, strategy, Scope::DataAndModel(), &fit.weights)
                  .correct);
  }
}

TEST(FitWeightsTest, SingleParent) {
  const PredictionSet set = PredictionSet::Build({Pred(9, "m", "orig", 0, 1, 0.7)});
  EXPECT_EQ(1.0, FitWeights(set, {{9, 1}}, Encoding::kLabels).validation.value());
  EXPECT_THROW(FitWeights(PredictionSet(), {}, Encoding::kLabels), NoGroundTruth);
}

TEST(FitWeightsTest, InformativeOperatorBeatsRandomModels) {
  std::mt19937 gen(99);
  std::vector<Prediction> all;
  std::map<int64_t, int> truth;
  for (int parent = 0; parent < 50; ++parent) {
    const int label = gen() % 2;
    truth[parent] = label;
    for (const std::string model : {"a", "b"}) {
      const int guess = gen() % 2;
      all.push_back(Pred(parent, model, "orig", 0, guess, guess ? 0.7 : 0.3));
      // T14's aggregated score has the sign of the truth.
      all.push_back(Pred(parent, model, "T14_insert_unexecuted_code", 0, label,
                         label ? 0.9 : 0.1));
      const int other = gen() % 2;
      all.push_back(Pred(parent, model, "T13_add_unused_variable", 0, other,
                         other ? 0.8 : 0.2));
    }
  }
  const PredictionSet set = PredictionSet::Build(all);
  const double best_model =
      std::max(Evaluate(set, truth, Strategy::kAverage, Scope::Original("a")).value(),
               Evaluate(set, truth, Strategy::kAverage, Scope::Original("b")).value());
  for (Encoding encoding : {Encoding::kLabels, Encoding::kProbability}) {
    const FitResult fit = FitWeights(set, truth, encoding);
    EXPECT_GE(fit.validation.value(), best_model);
    EXPECT_EQ(1.0, fit.validation.value());
  }
}

TEST(FitWeightsTest, DeterministicGivenSeed) {
  std::mt19937 gen(5);
  std::vector<Prediction> all;
  std::map<int64_t, int> truth;
  for (int parent = 0; parent < 30; ++parent) {
    truth[parent] = gen() % 2;
    for (const std::string model : {"a", "b"}) {
      all.push_back(Pred(parent, model, "orig", 0, gen() % 2, (gen() % 100) / 100.0));
      all.push_back(Pred(parent, model, "T05_while_to_for", 0, gen() % 2,
                         (gen() % 100) / 100.0));
    }
  }
  const PredictionSet set = PredictionSet::Build(all);
  const FitResult a = FitWeights(set, truth, Encoding::kProbability);
  const FitResult b = FitWeights(set, truth, Encoding::kProbability);
  EXPECT_EQ(a.weights.weights, b.weights.weights);
  EXPECT_EQ(a.restart, b.restart);
}

TEST(TransitionsTest, CountsPairs) {
  const TransitionMatrix m = Transitions(
      {Pred(1, "m", "orig", 0, 0, 0.2)},
      {Pred(1, "m", "T1", 0, 0, 0.2), Pred(1, "m", "T1", 1, 1, 0.7)});
  EXPECT_EQ((TransitionMatrix{1, 1, 0, 0}), m);
  const TransitionMatrix same = Transitions(
      {Pred(1, "m", "orig", 0, 0, 0.2), Pred(2, "m", "orig", 0, 1, 0.9)},
      {Pred(1, "m", "T1", 0, 0, 0.2), Pred(2, "m", "T2", 0, 1, 0.8),
       Pred(2, "m", "T3", 0, 1, 0.8)});
  EXPECT_EQ(0u, same.changed());
  EXPECT_EQ(3u, same.total());
  EXPECT_THROW(Transitions({Pred(1, "m", "orig", 0, 0, 0.2)},
                           {Pred(1, "n", "T1", 0, 0, 0.2)}),
               std::invalid_argument);
  EXPECT_THROW(Transitions({}, {Pred(1, "n", "T1", 0, 0, 0.2)}), MissingPredictions);
}

TEST(ReportTest, TableLayoutAndWeightedRows) {
  std::mt19937 gen(3);
  std::vector<Prediction> all;
  std::map<int64_t, int> truth;
  for (int parent = 0; parent < 12; ++parent) {
    truth[parent] = gen() % 2;
    for (const std::string model : {"a", "b"}) {
      const int l = gen() % 2;
      all.push_back(Pred(parent, model, "orig", 0, l, l ? 0.6 : 0.4));
      const int v = gen() % 2;
      all.push_back(Pred(parent, model, "T15_add_comment", 0, v, v ? 0.6 : 0.4));
    }
  }
  const PredictionSet set = PredictionSet::Build(all);
  const EnsembleReport without = BuildReport(set, truth);
  ASSERT_EQ(16u, without.rows.size());
  EXPECT_FALSE(without.rows[4].accuracy[0].has_value());
  EXPECT_EQ(12u, without.transitions.at("a").total());
  const EnsembleReport with = BuildReport(set, truth, &set, &truth);
  EXPECT_TRUE(with.rows[4].accuracy[0].has_value());
  EXPECT_EQ(8u, with.fitted.size());
  const std::string markdown = ReportToMarkdown(with);
  EXPECT_NE(std::string::npos, markdown.find("| Data ensemble | Majority - Ties 0 |"));
  EXPECT_NE(std::string::npos, markdown.find("|  | Weighted - Probability |"));
  EXPECT_NE(std::string::npos, markdown.find("| Data and model | Majority - Ties 0 |"));
  EXPECT_NE(std::string::npos, ReportToMarkdown(without).find("n/a"));
  EXPECT_EQ(ReportToJson(with), ReportToJson(BuildReport(set, truth, &set, &truth)));
  EXPECT_EQ("0.6471", FormatAccuracy(0.64706));
}

}  // namespace
}  // namespace semmut::ensemble
