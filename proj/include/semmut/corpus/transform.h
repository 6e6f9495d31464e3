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

#ifndef SEMMUT_CORPUS_TRANSFORM_H_
#define SEMMUT_CORPUS_TRANSFORM_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "semmut/codemodel/syntax.h"
#include "semmut/corpus/dataset.h"

namespace semmut::corpus {

// Transform id of the pass-through line emitted for every parseable record.
inline constexpr char kOriginalTransformId[] = "orig";

// One line of a variants file.
struct VariantRecord {
  std::string variant_id;
  int64_t parent_idx = 0;
  std::string transform_id;
  uint32_t site = 0;
  std::string func;

  bool is_original() const { return transform_id == kOriginalTransformId; }
};

struct SkipEntry {
  int64_t idx = 0;
  std::string reason;
};

struct TransformConfig {
  uint32_t max_sites_per_op = 4;
  // Number of worker threads; 0 picks the hardware concurrency.
  unsigned workers = 0;
};

struct TransformResult {
  std::vector<VariantRecord> variants;
  std::vector<SkipEntry> skips;
  // Records that produced an "orig" line.
  size_t transformed_records = 0;
};

// Applies every registered operator to every record. For each record, in
// ascending idx order, emits its "orig" line followed by its variants in
// operator id then site order. Records that do not parse, or whose body is
// mostly inline assembly, produce a skip entry and no lines. Rewrite
// failures are reported as skip entries for the affected variant only.
// The output does not depend on `config.workers`.
TransformResult TransformCorpus(const std::vector<DatasetRecord>& records,
                                const TransformConfig& config = {});

// True when inline assembly statements make up more than half of the
// function body's bytes.
bool IsAssemblyHeavy(const std::string& func);
bool IsAssemblyHeavy(const codemodel::SyntaxUnit& unit);

std::string ToJsonLine(const VariantRecord& variant);
std::string ToJsonLine(const SkipEntry& skip);

struct VariantsLoadResult {
  std::vector<VariantRecord> variants;
  std::vector<MalformedLine> malformed;
};

VariantsLoadResult ParseVariantsJsonl(std::istream& in);
// Throws DatasetError when the file cannot be read.
VariantsLoadResult LoadVariantsJsonl(const std::string& path);

}  // namespace semmut::corpus

#endif  // SEMMUT_CORPUS_TRANSFORM_H_
