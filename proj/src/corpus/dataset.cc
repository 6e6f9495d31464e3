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

#include "semmut/corpus/dataset.h"

#include <fstream>
#include <unordered_set>

namespace semmut::corpus {
namespace {

using Json = nlohmann::ordered_json;

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

// Empty string on success, otherwise why the object is not a record.
std::string ToRecord(Json object, DatasetRecord& record) {
  if (!object.is_object()) return "not a JSON object";
  auto idx = object.find("idx");
  if (idx == object.end()) return "missing \"idx\"";
  if (!idx->is_number_integer()) return "\"idx\" is not an integer";
  auto func = object.find("func");
  if (func == object.end()) return "missing \"func\"";
  if (!func->is_string()) return "\"func\" is not a string";
  auto target = object.find("target");
  if (target != object.end() && !target->is_null()) {
    if (!target->is_number_integer() ||
        (target->get<int64_t>() != 0 && target->get<int64_t>() != 1)) {
      return "\"target\" is not 0 or 1";
    }
    record.target = static_cast<int>(target->get<int64_t>());
  }
  record.idx = idx->get<int64_t>();
  record.func = func->get<std::string>();
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (it.key() == "idx" || it.key() == "func" || it.key() == "target") {
      continue;
    }
    record.extra[it.key()] = it.value();
  }
  return "";
}

}  // namespace

LoadResult ParseJsonl(std::istream& in) {
  LoadResult result;
  std::unordered_set<int64_t> seen;
  std::string line;
  for (size_t number = 1; std::getline(in, line); ++number) {
    if (IsBlank(line)) continue;
    Json object;
    try {
      object = Json::parse(line);
    } catch (const Json::parse_error& e) {
      result.malformed.push_back({number, e.what()});
      continue;
    }
    DatasetRecord record;
    std::string problem = ToRecord(std::move(object), record);
    if (problem.empty() && !seen.insert(record.idx).second) {
      problem = "duplicate idx " + std::to_string(record.idx);
    }
    if (!problem.empty()) {
      result.malformed.push_back({number, std::move(problem)});
      continue;
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

LoadResult LoadJsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot read " + path);
  LoadResult result = ParseJsonl(in);
  if (in.bad()) throw DatasetError("read error in " + path);
  if (result.records.empty()) {
    throw DatasetError("no valid records in " + path + " (" +
                       std::to_string(result.malformed.size()) +
                       " malformed lines)");
  }
  return result;
}

std::string ToJsonLine(const DatasetRecord& record) {
  Json object;
  object["idx"] = record.idx;
  object["func"] = record.func;
  if (record.target) object["target"] = *record.target;
  for (auto it = record.extra.begin(); it != record.extra.end(); ++it) {
    object[it.key()] = it.value();
  }
  return object.dump(-1, ' ', false, Json::error_handler_t::replace);
}

}  // namespace semmut::corpus
