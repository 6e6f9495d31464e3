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

#include "semmut/corpus/transform.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "semmut/codemodel/parser.h"
#include "semmut/transforms/operator.h"
#include "semmut/transforms/registry.h"

namespace semmut::corpus {
namespace {

using Json = nlohmann::ordered_json;

struct RecordOutput {
  std::vector<VariantRecord> variants;
  std::vector<SkipEntry> skips;
  bool transformed = false;
};

RecordOutput TransformRecord(const DatasetRecord& record,
                             const transforms::ApplyAllConfig& config) {
  RecordOutput out;
  const std::string parent_id = std::to_string(record.idx);
  codemodel::ParseResult parsed = codemodel::ParseFunction(record.func);
  if (!parsed.ok()) {
    out.skips.push_back(
        {record.idx, "parse failure at byte " +
                         std::to_string(parsed.failure().position) + ": " +
                         parsed.failure().message});
    return out;
  }
  if (IsAssemblyHeavy(parsed.unit())) {
    out.skips.push_back({record.idx, "mostly inline assembly"});
    return out;
  }
  out.transformed = true;
  out.variants.push_back({transforms::MakeVariantId(parent_id,
                                                    kOriginalTransformId, 0),
                          record.idx, kOriginalTransformId, 0, record.func});
  transforms::ApplyAllResult applied =
      transforms::ApplyAll(parsed.unit(), parent_id, config);
  std::stable_sort(applied.variants.begin(), applied.variants.end(),
                   [](const transforms::Variant& a, const transforms::Variant& b) {
                     if (a.operator_id != b.operator_id) {
                       return a.operator_id < b.operator_id;
                     }
                     return a.site < b.site;
                   });
  for (transforms::Variant& variant : applied.variants) {
    out.variants.push_back({std::move(variant.variant_id), record.idx,
                            std::move(variant.operator_id), variant.site,
                            std::move(variant.text)});
  }
  for (const transforms::RewriteFailure& failure : applied.failures) {
    out.skips.push_back({record.idx, std::string("rewrite failure ") +
                                         failure.what()});
  }
  return out;
}

}  // namespace

bool IsAssemblyHeavy(const std::string& func) {
  codemodel::ParseResult parsed = codemodel::ParseFunction(func);
  return parsed.ok() && IsAssemblyHeavy(parsed.unit());
}

bool IsAssemblyHeavy(const codemodel::SyntaxUnit& unit) {
  const codemodel::NodeId body = unit.FunctionBody();
  if (body == codemodel::kNoNode) return false;
  size_t asm_bytes = 0;
  for (codemodel::NodeId id : unit.NodesOfKind(codemodel::NodeKind::kAsmStatement)) {
    asm_bytes += unit.node(id).span.size();
  }
  return 2 * asm_bytes > unit.node(body).span.size();
}

TransformResult TransformCorpus(const std::vector<DatasetRecord>& records,
                                const TransformConfig& config) {
  std::vector<const DatasetRecord*> ordered;
  ordered.reserve(records.size());
  for (const DatasetRecord& record : records) ordered.push_back(&record);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const DatasetRecord* a, const DatasetRecord* b) {
                     return a->idx < b->idx;
                   });

  transforms::ApplyAllConfig apply_config;
  apply_config.max_sites_per_op = config.max_sites_per_op;
  // Build the shared registry before workers race to do so.
  transforms::Registry::Default();

  std::vector<RecordOutput> outputs(ordered.size());
  unsigned workers = config.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<size_t>(workers, std::max<size_t>(1, ordered.size())));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < ordered.size(); i = next++) {
      outputs[i] = TransformRecord(*ordered[i], apply_config);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < workers; ++i) threads.emplace_back(work);
    for (std::thread& thread : threads) thread.join();
  }

  TransformResult result;
  for (RecordOutput& output : outputs) {
    if (output.transformed) ++result.transformed_records;
    std::move(output.variants.begin(), output.variants.end(),
              std::back_inserter(result.variants));
    std::move(output.skips.begin(), output.skips.end(),
              std::back_inserter(result.skips));
  }
  return result;
}

std::string ToJsonLine(const VariantRecord& variant) {
  Json object;
  object["variant_id"] = variant.variant_id;
  object["parent_idx"] = variant.parent_idx;
  object["transform_id"] = variant.transform_id;
  object["site"] = variant.site;
  object["func"] = variant.func;
  return object.dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::string ToJsonLine(const SkipEntry& skip) {
  Json object;
  object["idx"] = skip.idx;
  object["reason"] = skip.reason;
  return object.dump(-1, ' ', false, Json::error_handler_t::replace);
}

VariantsLoadResult ParseVariantsJsonl(std::istream& in) {
  VariantsLoadResult result;
  std::string line;
  for (size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      const Json object = Json::parse(line);
      VariantRecord variant;
      variant.variant_id = object.at("variant_id").get<std::string>();
      if (!object.at("parent_idx").is_number_integer()) {
        throw std::invalid_argument("\"parent_idx\" is not an integer");
      }
      variant.parent_idx = object.at("parent_idx").get<int64_t>();
      variant.transform_id = object.at("transform_id").get<std::string>();
      variant.site = object.at("site").get<uint32_t>();
      variant.func = object.at("func").get<std::string>();
      result.variants.push_back(std::move(variant));
    } catch (const std::exception& e) {
      result.malformed.push_back({number, e.what()});
    }
  }
  return result;
}

VariantsLoadResult LoadVariantsJsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot read " + path);
  return ParseVariantsJsonl(in);
}

}  // namespace semmut::corpus
