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

#ifndef SEMMUT_CORPUS_DATASET_H_
#define SEMMUT_CORPUS_DATASET_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace semmut::corpus {

// One line of a Devign-style dataset: {"idx": int, "func": str, "target":
// 0|1, ...}. Unknown fields are kept in `extra` in input order.
struct DatasetRecord {
  int64_t idx = 0;
  std::string func;
  std::optional<int> target;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

struct MalformedLine {
  // 1-based.
  size_t line = 0;
  std::string message;
};

struct LoadResult {
  std::vector<DatasetRecord> records;
  std::vector<MalformedLine> malformed;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses one record per non-blank line. Lines that are not JSON objects,
// lack "idx" or "func", carry a target other than 0/1, or repeat an idx are
// reported in `malformed` and skipped.
LoadResult ParseJsonl(std::istream& in);

// As ParseJsonl, but throws DatasetError when the file cannot be read or
// holds no valid record.
LoadResult LoadJsonl(const std::string& path);

std::string ToJsonLine(const DatasetRecord& record);

}  // namespace semmut::corpus

#endif  // SEMMUT_CORPUS_DATASET_H_
