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

#ifndef SEMMUT_ENSEMBLE_AGGREGATE_H_
#define SEMMUT_ENSEMBLE_AGGREGATE_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semmut::ensemble {

class EmptyInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Label returned by a majority vote on an exact split.
enum class TieRule { kTies0, kTies1 };

// How predictions become signed values for weighting.
enum class Encoding { kLabels, kProbability };

std::string_view EncodingName(Encoding encoding);

// Strict-majority label of `labels` (each 0 or 1).
int MajorityVote(const std::vector<int>& labels, TieRule tie_rule);

struct AverageResult {
  int label = 0;
  double mean_p1 = 0;
};

// Label 1 iff the mean probability exceeds 0.5.
AverageResult AverageProbability(const std::vector<double>& probabilities);

// 0 -> -1, 1 -> +1; anything else throws OutOfRange.
int SignedLabel(int label);

// p1 - 0.5.
double CenteredProbability(double p1);

// Sum of one (parent, model, operator) group; 0 for an empty group.
double TransformScore(const std::vector<double>& values);

// One weight per model followed by one per transform, in that order.
struct EnsembleWeights {
  std::vector<std::string> model_ids;
  std::vector<std::string> transform_ids;
  std::vector<double> weights;

  double model_weight(size_t i) const { return weights[i]; }
  double transform_weight(size_t i) const {
    return weights[model_ids.size() + i];
  }
  // Throws DimensionMismatch unless weights has one entry per id.
  void Validate() const;
};

// 1 iff sum(w_model * orig) + sum(w_op * op) > 0.
int WeightedPredict(const EnsembleWeights& weights,
                    const std::vector<double>& orig_scores,
                    const std::vector<double>& op_scores);

std::string WeightsToJson(const EnsembleWeights& weights);
// Throws std::invalid_argument on malformed input.
EnsembleWeights WeightsFromJson(std::string_view json);

}  // namespace semmut::ensemble

#endif  // SEMMUT_ENSEMBLE_AGGREGATE_H_
