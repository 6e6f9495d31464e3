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

#include "semmut/ensemble/predictions.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"

namespace semmut::ensemble {
namespace {

using Json = nlohmann::ordered_json;

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::string Describe(const std::string& path, const std::vector<LineError>& errors) {
  std::string out = path + ": " + std::to_string(errors.size()) + " invalid line";
  if (errors.size() != 1) out += "s";
  for (const LineError& error : errors) {
    out += "\n  line " + std::to_string(error.line) + ": " + error.message;
  }
  return out;
}

const Json& Field(const Json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw std::invalid_argument(std::string("missing \"") + key + "\"");
  }
  return *it;
}

int64_t IntegerField(const Json& object, const char* key) {
  const Json& value = Field(object, key);
  if (!value.is_number_integer()) {
    throw std::invalid_argument(std::string("\"") + key +
                                "\" is not an integer");
  }
  return value.get<int64_t>();
}

std::string StringField(const Json& object, const char* key) {
  const Json& value = Field(object, key);
  if (!value.is_string()) {
    throw std::invalid_argument(std::string("\"") + key + "\" is not a string");
  }
  return value.get<std::string>();
}

int LabelField(const Json& object, const char* key) {
  const int64_t label = IntegerField(object, key);
  if (label != 0 && label != 1) {
    throw std::invalid_argument(std::string("\"") + key + "\" is not 0 or 1");
  }
  return static_cast<int>(label);
}

Prediction ToPrediction(const Json& object) {
  if (!object.is_object()) throw std::invalid_argument("not a JSON object");
  Prediction prediction;
  prediction.parent_idx = IntegerField(object, "parent_idx");
  prediction.variant_id = StringField(object, "variant_id");
  prediction.transform_id = StringField(object, "transform_id");
  prediction.model_id = StringField(object, "model_id");
  prediction.label = LabelField(object, "label");
  const Json& p1 = Field(object, "p1");
  if (!p1.is_number()) throw std::invalid_argument("\"p1\" is not a number");
  prediction.p1 = p1.get<double>();
  if (!(prediction.p1 >= 0.0 && prediction.p1 <= 1.0)) {
    throw std::invalid_argument("\"p1\" is outside [0, 1]");
  }
  return prediction;
}

}  // namespace

SchemaError::SchemaError(const std::string& path, std::vector<LineError> errors)
    : std::runtime_error(Describe(path, errors)), errors_(std::move(errors)) {}

std::string ToJsonLine(const Prediction& prediction) {
  Json object;
  object["parent_idx"] = prediction.parent_idx;
  object["variant_id"] = prediction.variant_id;
  object["transform_id"] = prediction.transform_id;
  object["model_id"] = prediction.model_id;
  object["label"] = prediction.label;
  object["p1"] = prediction.p1;
  return object.dump(-1, ' ', false, Json::error_handler_t::replace);
}

PredictionsParseResult ParsePredictionsJsonl(std::istream& in) {
  PredictionsParseResult result;
  std::string line;
  for (size_t number = 1; std::getline(in, line); ++number) {
    if (IsBlank(line)) continue;
    try {
      result.predictions.push_back(ToPrediction(Json::parse(line)));
    } catch (const std::exception& e) {
      result.errors.push_back({number, e.what()});
    }
  }
  return result;
}

std::vector<Prediction> LoadPredictions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, {{0, "cannot read file"}});
  PredictionsParseResult result = ParsePredictionsJsonl(in);
  if (!result.errors.empty()) throw SchemaError(path, std::move(result.errors));
  return std::move(result.predictions);
}

std::map<int64_t, int> ParseTruthJsonl(std::istream& in, const std::string& name) {
  std::map<int64_t, int> truth;
  std::vector<LineError> errors;
  std::string line;
  for (size_t number = 1; std::getline(in, line); ++number) {
    if (IsBlank(line)) continue;
    try {
      const Json object = Json::parse(line);
      if (!object.is_object()) throw std::invalid_argument("not a JSON object");
      const int64_t idx = IntegerField(object, "idx");
      if (!truth.emplace(idx, LabelField(object, "target")).second) {
        throw std::invalid_argument("duplicate idx " + std::to_string(idx));
      }
    } catch (const std::exception& e) {
      errors.push_back({number, e.what()});
    }
  }
  if (!errors.empty()) throw SchemaError(name, std::move(errors));
  return truth;
}

std::map<int64_t, int> LoadTruth(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, {{0, "cannot read file"}});
  return ParseTruthJsonl(in, path);
}

PredictionSet PredictionSet::Build(std::vector<Prediction> predictions) {
  PredictionSet set;
  std::set<std::string> models;
  std::set<std::string> transforms;
  std::set<std::pair<std::string, std::string>> seen;
  for (Prediction& prediction : predictions) {
    if (!seen.emplace(prediction.model_id, prediction.variant_id).second) {
      throw std::invalid_argument("repeated prediction of model " +
                                  prediction.model_id + " for variant " +
                                  prediction.variant_id);
    }
    models.insert(prediction.model_id);
    ModelPredictions& group =
        set.parents_[prediction.parent_idx][prediction.model_id];
    if (prediction.is_original()) {
      if (group.orig) {
        throw std::invalid_argument(
            "second orig prediction of model " + prediction.model_id +
            " for parent " + std::to_string(prediction.parent_idx));
      }
      group.orig = std::move(prediction);
    } else {
      transforms.insert(prediction.transform_id);
      group.variants[prediction.transform_id].push_back(std::move(prediction));
    }
    ++set.size_;
  }
  for (auto& [parent, by_model] : set.parents_) {
    for (auto& [model, group] : by_model) {
      for (auto& [transform, list] : group.variants) {
        std::sort(list.begin(), list.end(),
                  [](const Prediction& a, const Prediction& b) {
                    return a.variant_id < b.variant_id;
                  });
      }
    }
  }
  set.model_ids_.assign(models.begin(), models.end());
  set.transform_ids_.assign(transforms.begin(), transforms.end());
  return set;
}

}  // namespace semmut::ensemble
