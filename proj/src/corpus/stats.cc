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

#include "semmut/corpus/stats.h"

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "semmut/transforms/registry.h"

namespace semmut::corpus {
namespace {

std::string Fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

}  // namespace

ApplicabilityStats ComputeStats(const std::vector<VariantRecord>& variants,
                                const std::vector<DatasetRecord>& records) {
  std::unordered_set<int64_t> known;
  for (const DatasetRecord& record : records) known.insert(record.idx);

  // Parent -> distinct operators, in first-seen parent order.
  std::vector<int64_t> parents;
  std::unordered_map<int64_t, std::set<std::string>> operators_of;
  for (const VariantRecord& variant : variants) {
    if (!known.count(variant.parent_idx)) {
      throw std::invalid_argument("variant " + variant.variant_id +
                                  " has unknown parent " +
                                  std::to_string(variant.parent_idx));
    }
    auto [it, inserted] = operators_of.try_emplace(variant.parent_idx);
    if (inserted) parents.push_back(variant.parent_idx);
    if (!variant.is_original()) it->second.insert(variant.transform_id);
  }

  ApplicabilityStats stats;
  stats.records = records.size();
  stats.parseable = parents.size();

  std::vector<std::string> ids;
  for (const auto& op : transforms::Registry::Default().operators()) {
    ids.push_back(op->id());
  }
  std::set<std::string> others;
  std::unordered_map<std::string, size_t> counts;
  for (const auto& [parent, ops] : operators_of) {
    for (const std::string& id : ops) ++counts[id];
  }
  for (const auto& [id, count] : counts) {
    if (!transforms::Registry::Default().Find(id)) others.insert(id);
  }
  ids.insert(ids.end(), others.begin(), others.end());
  for (const std::string& id : ids) {
    OperatorApplicability entry;
    entry.operator_id = id;
    auto it = counts.find(id);
    entry.functions = it == counts.end() ? 0 : it->second;
    entry.rate = stats.parseable == 0
                     ? 0.0
                     : static_cast<double>(entry.functions) / stats.parseable;
    stats.operators.push_back(entry);
  }

  size_t total = 0;
  bool first = true;
  for (int64_t parent : parents) {
    const uint32_t count = static_cast<uint32_t>(operators_of[parent].size());
    ++stats.histogram[count];
    total += count;
    stats.min = first ? count : std::min(stats.min, count);
    stats.max = first ? count : std::max(stats.max, count);
    first = false;
  }
  if (stats.parseable > 0) {
    stats.mean = static_cast<double>(total) / stats.parseable;
  }
  return stats;
}

double RoundedMean(const ApplicabilityStats& stats) {
  return std::round(stats.mean * 10.0) / 10.0;
}

std::string StatsToJson(const ApplicabilityStats& stats) {
  nlohmann::ordered_json json;
  json["records"] = stats.records;
  json["parseable"] = stats.parseable;
  nlohmann::ordered_json operators = nlohmann::ordered_json::array();
  for (const OperatorApplicability& entry : stats.operators) {
    operators.push_back({{"operator_id", entry.operator_id},
                         {"functions", entry.functions},
                         {"rate", entry.rate}});
  }
  json["operators"] = std::move(operators);
  nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
  for (const auto& [count, functions] : stats.histogram) {
    histogram[std::to_string(count)] = functions;
  }
  json["histogram"] = std::move(histogram);
  json["mean"] = RoundedMean(stats);
  json["min"] = stats.min;
  json["max"] = stats.max;
  return json.dump(2) + "\n";
}

std::string StatsToMarkdown(const ApplicabilityStats& stats) {
  std::string out = "# Operator applicability\n\n";
  out += "Parseable functions: " + std::to_string(stats.parseable) + " of " +
         std::to_string(stats.records) + "\n\n";
  out += "| Operator | Functions | Rate |\n|---|---:|---:|\n";
  for (const OperatorApplicability& entry : stats.operators) {
    out += "| " + entry.operator_id + " | " + std::to_string(entry.functions) +
           " | " + Fixed(entry.rate, 4) + " |\n";
  }
  out += "\n## Operators per function\n\n| Operators | Functions |\n|---:|---:|\n";
  for (const auto& [count, functions] : stats.histogram) {
    out += "| " + std::to_string(count) + " | " + std::to_string(functions) +
           " |\n";
  }
  out += "\nMean " + Fixed(RoundedMean(stats), 1) + ", min " +
         std::to_string(stats.min) + ", max " + std::to_string(stats.max) +
         "\n";
  return out;
}

}  // namespace semmut::corpus
