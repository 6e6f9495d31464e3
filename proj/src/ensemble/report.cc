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

#include "semmut/ensemble/report.h"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "semmut/transforms/registry.h"

namespace semmut::ensemble {
namespace {

using Json = nlohmann::ordered_json;

constexpr char kOriginalGroup[] = "Original";
constexpr char kDataGroup[] = "Data ensemble";
constexpr char kModelGroup[] = "Model ensemble";
constexpr char kJointGroup[] = "Data and model";

Json AccuracyJson(const std::optional<Accuracy>& accuracy) {
  if (!accuracy) return nullptr;
  Json json;
  json["correct"] = accuracy->correct;
  json["total"] = accuracy->total;
  json["accuracy"] = accuracy->value();
  return json;
}

Json TransitionJson(const TransitionMatrix& m) {
  Json json;
  json["c00"] = m.c00;
  json["c01"] = m.c01;
  json["c10"] = m.c10;
  json["c11"] = m.c11;
  return json;
}

std::string Cell(const std::optional<Accuracy>& accuracy) {
  return accuracy ? FormatAccuracy(accuracy->value()) : "n/a";
}

std::vector<std::string> UnionTransformIds(const PredictionSet& test,
                                           const PredictionSet& validation,
                                           const FitConfig& config) {
  if (!config.transform_ids.empty()) return config.transform_ids;
  std::vector<std::string> ids;
  for (const auto& op : transforms::Registry::Default().operators()) {
    ids.push_back(op->id());
  }
  for (const auto* set : {&validation, &test}) {
    for (const std::string& id : set->transform_ids()) {
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
  }
  return ids;
}

}  // namespace

std::string FormatAccuracy(double accuracy) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", accuracy);
  return buffer;
}

EnsembleReport BuildReport(const PredictionSet& test,
                           const std::map<int64_t, int>& test_truth,
                           const PredictionSet* validation,
                           const std::map<int64_t, int>* validation_truth,
                           const FitConfig& config) {
  EnsembleReport report;
  report.model_ids = test.model_ids();
  const size_t columns = report.model_ids.size();
  const bool can_fit = validation != nullptr && validation_truth != nullptr;
  FitConfig fit_config = config;
  if (can_fit) {
    fit_config.transform_ids = UnionTransformIds(test, *validation, config);
  }

  auto evaluate = [&](Strategy strategy,
                      const Scope& scope) -> std::optional<Accuracy> {
    if (!IsWeighted(strategy)) return Evaluate(test, test_truth, strategy, scope);
    if (!can_fit) return std::nullopt;
    FitResult fit = FitWeights(*validation, *validation_truth,
                               WeightedEncoding(strategy), scope, fit_config);
    const Accuracy accuracy =
        Evaluate(test, test_truth, strategy, scope, &fit.weights);
    report.fitted.push_back({std::string(ScopeKey(scope.kind)), scope.model_id,
                             WeightedEncoding(strategy), std::move(fit)});
    return accuracy;
  };

  ReportRow original{kOriginalGroup, kOriginalGroup, {}, false};
  for (const std::string& model : report.model_ids) {
    original.accuracy.push_back(
        evaluate(Strategy::kMajorityTies0, Scope::Original(model)));
  }
  report.rows.push_back(std::move(original));
  for (Strategy strategy : kAllStrategies) {
    ReportRow row{kDataGroup, std::string(StrategyLabel(strategy)), {}, false};
    for (const std::string& model : report.model_ids) {
      row.accuracy.push_back(evaluate(strategy, Scope::DataEnsemble(model)));
    }
    report.rows.push_back(std::move(row));
  }
  for (const auto& [group, scope] :
       {std::pair{kModelGroup, Scope::ModelEnsemble()},
        std::pair{kJointGroup, Scope::DataAndModel()}}) {
    for (Strategy strategy : kAllStrategies) {
      const std::optional<Accuracy> accuracy = evaluate(strategy, scope);
      report.rows.push_back({group, std::string(StrategyLabel(strategy)),
                             std::vector<std::optional<Accuracy>>(columns, accuracy),
                             true});
    }
  }

  for (const std::string& model : report.model_ids) {
    auto by_transform = TransitionsByTransform(test, model);
    TransitionMatrix all;
    for (const auto& [transform, m] : by_transform) {
      all.c00 += m.c00;
      all.c01 += m.c01;
      all.c10 += m.c10;
      all.c11 += m.c11;
    }
    report.transitions[model] = all;
    report.transitions_by_transform[model] = std::move(by_transform);
  }
  return report;
}

std::string ReportToMarkdown(const EnsembleReport& report) {
  std::string out = "# Ensemble accuracy\n\n|  |  |";
  for (const std::string& model : report.model_ids) out += " " + model + " |";
  out += "\n|---|---|";
  for (size_t i = 0; i < report.model_ids.size(); ++i) out += "---:|";
  out += "\n";
  std::string previous_group;
  for (const ReportRow& row : report.rows) {
    const std::string group = row.group == previous_group ? "" : row.group;
    previous_group = row.group;
    out += "| " + group + " | " + row.strategy + " |";
    for (const auto& accuracy : row.accuracy) out += " " + Cell(accuracy) + " |";
    out += "\n";
  }
  out += "\nModel ensemble and data-and-model rows combine all models; their "
         "value is repeated in every column.\n";

  for (const auto& [model, by_transform] : report.transitions_by_transform) {
    out += "\n## Prediction transitions: " + model + "\n\n";
    out += "| Transform | 0->0 | 0->1 | 1->0 | 1->1 | Changed |\n";
    out += "|---|---:|---:|---:|---:|---:|\n";
    auto line = [&](const std::string& name, const TransitionMatrix& m) {
      const double changed =
          m.total() == 0 ? 0.0 : static_cast<double>(m.changed()) / m.total();
      out += "| " + name + " | " + std::to_string(m.c00) + " | " +
             std::to_string(m.c01) + " | " + std::to_string(m.c10) + " | " +
             std::to_string(m.c11) + " | " + FormatAccuracy(changed) + " |\n";
    };
    for (const auto& [transform, m] : by_transform) line(transform, m);
    line("all", report.transitions.at(model));
  }

  if (!report.fitted.empty()) {
    out += "\n## Fitted weights\n\n";
    out += "| Scope | Model | Encoding | Restart | Validation accuracy |\n";
    out += "|---|---|---|---:|---:|\n";
    for (const FittedWeights& fitted : report.fitted) {
      out += "| " + fitted.scope + " | " +
             (fitted.model_id.empty() ? "all" : fitted.model_id) + " | " +
             std::string(EncodingName(fitted.encoding)) + " | " +
             std::to_string(fitted.fit.restart) + " | " +
             FormatAccuracy(fitted.fit.validation.value()) + " |\n";
    }
  }
  return out;
}

std::string ReportToJson(const EnsembleReport& report) {
  Json json;
  json["models"] = report.model_ids;
  Json rows = Json::array();
  for (const ReportRow& row : report.rows) {
    Json entry;
    entry["group"] = row.group;
    entry["strategy"] = row.strategy;
    entry["joint"] = row.joint;
    Json accuracy = Json::array();
    if (row.joint) {
      entry["accuracy"] = AccuracyJson(row.accuracy.empty()
                                           ? std::nullopt
                                           : row.accuracy.front());
    } else {
      for (const auto& value : row.accuracy) accuracy.push_back(AccuracyJson(value));
      entry["accuracy"] = std::move(accuracy);
    }
    rows.push_back(std::move(entry));
  }
  json["rows"] = std::move(rows);
  Json transitions = Json::object();
  for (const auto& [model, by_transform] : report.transitions_by_transform) {
    Json entry;
    entry["all"] = TransitionJson(report.transitions.at(model));
    Json per = Json::object();
    for (const auto& [transform, m] : by_transform) {
      per[transform] = TransitionJson(m);
    }
    entry["by_transform"] = std::move(per);
    transitions[model] = std::move(entry);
  }
  json["transitions"] = std::move(transitions);
  Json fitted = Json::array();
  for (const FittedWeights& f : report.fitted) {
    Json entry;
    entry["scope"] = f.scope;
    entry["model_id"] = f.model_id;
    entry["encoding"] = EncodingName(f.encoding);
    entry["restart"] = f.fit.restart;
    entry["validation"] = AccuracyJson(f.fit.validation);
    entry["model_ids"] = f.fit.weights.model_ids;
    entry["transform_ids"] = f.fit.weights.transform_ids;
    entry["weights"] = f.fit.weights.weights;
    fitted.push_back(std::move(entry));
  }
  json["fitted_weights"] = std::move(fitted);
  return json.dump(2) + "\n";
}

}  // namespace semmut::ensemble
