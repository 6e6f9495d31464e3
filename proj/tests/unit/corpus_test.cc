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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "semmut/corpus/dataset.h"
#include "semmut/corpus/stats.h"
#include "semmut/corpus/transform.h"
#include "semmut/verify/differential.h"

namespace semmut::corpus {
namespace {

LoadResult Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseJsonl(in);
}

DatasetRecord Record(int64_t idx, std::string func) {
  DatasetRecord record;
  record.idx = idx;
  record.func = std::move(func);
  return record;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("semmut_corpus_test_" + name))
      .string();
}

TEST(LoadJsonlTest, ParsesRecord) {
  const LoadResult result =
      Parse("{\"idx\":7,\"func\":\"int f(void){return 0;}\",\"target\":0}\n");
  ASSERT_EQ(1u, result.records.size());
  EXPECT_TRUE(result.malformed.empty());
  EXPECT_EQ(7, result.records[0].idx);
  EXPECT_EQ("int f(void){return 0;}", result.records[0].func);
  EXPECT_EQ(0, result.records[0].target.value());
}

TEST(LoadJsonlTest, MalformedLinesAreReportedWithLineNumbers) {
  const LoadResult result = Parse(
      "{\"idx\":1,\"func\":\"a\"}\n"
      "{\"idx\":2}\n"
      "\n"
      "not json\n"
      "[1,2]\n"
      "{\"idx\":3,\"func\":\"b\",\"target\":2}\n"
      "{\"idx\":1,\"func\":\"c\"}\n"
      "{\"idx\":\"4\",\"func\":\"d\"}\n"
      "{\"idx\":5,\"func\":\"e\",\"target\":null}\n");
  ASSERT_EQ(2u, result.records.size());
  EXPECT_EQ(1, result.records[0].idx);
  EXPECT_EQ(5, result.records[1].idx);
  EXPECT_FALSE(result.records[1].target.has_value());
  std::vector<size_t> lines;
  for (const MalformedLine& m : result.malformed) lines.push_back(m.line);
  EXPECT_EQ((std::vector<size_t>{2, 4, 5, 6, 7, 8}), lines);
  EXPECT_EQ("missing \"func\"", result.malformed[0].message);
  EXPECT_EQ("duplicate idx 1", result.malformed[4].message);
}

TEST(LoadJsonlTest, ExtraFieldsRoundTrip) {
  const std::string line =
      "{\"idx\":9,\"func\":\"x\",\"target\":1,\"project\":\"qemu\","
      "\"commit_id\":\"ab\"}";
  const LoadResult result = Parse(line + "\n");
  ASSERT_EQ(1u, result.records.size());
  EXPECT_EQ("qemu", result.records[0].extra["project"]);
  EXPECT_EQ(line, ToJsonLine(result.records[0]));
}

TEST(LoadJsonlTest, LoadsTestSplitSizedFile) {
  const std::string path = TempPath("large.jsonl");
  {
    std::ofstream out(path);
    for (int i = 0; i < 2732; ++i) {
      out << "{\"idx\":" << i << ",\"func\":\"int f(void){return " << i
          << ";}\",\"target\":" << i % 2 << "}\n";
    }
  }
  EXPECT_EQ(2732u, LoadJsonl(path).records.size());
  std::remove(path.c_str());
}

TEST(LoadJsonlTest, FatalOnlyWithoutValidRecords) {
  EXPECT_THROW(LoadJsonl(TempPath("does_not_exist.jsonl")), DatasetError);
  const std::string path = TempPath("bad.jsonl");
  {
    std::ofstream out(path);
    out << "{\"idx\":1}\nnope\n";
  }
  EXPECT_THROW(LoadJsonl(path), DatasetError);
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"idx\":1,\"func\":\"f\"}\n";
  }
  const LoadResult result = LoadJsonl(path);
  EXPECT_EQ(1u, result.records.size());
  EXPECT_EQ(2u, result.malformed.size());
  std::remove(path.c_str());
}

std::vector<VariantRecord> OfParent(const TransformResult& result, int64_t idx) {
  std::vector<VariantRecord> out;
  for (const VariantRecord& v : result.variants) {
    if (v.parent_idx == idx) out.push_back(v);
  }
  return out;
}

TEST(TransformCorpusTest, UniversalOnlyFunctionYieldsFourVariantsAndOrig) {
  const TransformResult result =
      TransformCorpus({Record(3, "void f(void) { }")});
  ASSERT_EQ(5u, result.variants.size());
  EXPECT_TRUE(result.skips.empty());
  EXPECT_EQ(1u, result.transformed_records);
  EXPECT_EQ("orig", result.variants[0].transform_id);
  EXPECT_EQ("3#orig#0", result.variants[0].variant_id);
  EXPECT_EQ("void f(void) { }", result.variants[0].func);
  std::vector<std::string> ids;
  for (size_t i = 1; i < result.variants.size(); ++i) {
    ids.push_back(result.variants[i].transform_id.substr(0, 3));
  }
  EXPECT_EQ((std::vector<std::string>{"T13", "T14", "T15", "T16"}), ids);
}

TEST(TransformCorpusTest, UnparseableRecordIsSkipped) {
  const TransformResult result = TransformCorpus({Record(4, "int f(")});
  EXPECT_TRUE(result.variants.empty());
  ASSERT_EQ(1u, result.skips.size());
  EXPECT_EQ(4, result.skips[0].idx);
  EXPECT_EQ(0u, result.transformed_records);
}

TEST(TransformCorpusTest, AssemblyHeavyRecordIsSkipped) {
  const std::string heavy =
      "void f(void) { __asm__ volatile(\"nop; nop; nop; nop\" ::: \"memory\"); }";
  EXPECT_TRUE(IsAssemblyHeavy(heavy));
  EXPECT_FALSE(IsAssemblyHeavy(
      "int f(int a) { int b = a * 2; int c = b + a; __asm__(\"nop\"); "
      "return c + b + a; }"));
  const TransformResult result = TransformCorpus({Record(1, heavy)});
  EXPECT_TRUE(result.variants.empty());
  ASSERT_EQ(1u, result.skips.size());
  EXPECT_EQ("mostly inline assembly", result.skips[0].reason);
}

TEST(TransformCorpusTest, TwoForLoopsGiveTwoForToWhileSites) {
  const TransformResult result = TransformCorpus({Record(
      0,
      "int f(int n) { int s = 0; for (int i = 0; i < n; i++) s += i; "
      "for (int j = 0; j < n; j++) s -= j; return s; }")});
  std::vector<uint32_t> sites;
  for (const VariantRecord& v : result.variants) {
    if (v.transform_id == "T04_for_to_while") sites.push_back(v.site);
  }
  EXPECT_EQ((std::vector<uint32_t>{0, 1}), sites);
}

std::vector<DatasetRecord> MicroCorpusRecords() {
  std::vector<DatasetRecord> records;
  int64_t idx = 100;
  for (const auto& c : verify::LoadDifferentialCases(SEMMUT_MICROCORPUS_DIR)) {
    // Descending idx so the output has to be reordered.
    records.push_back(Record(idx--, c.function));
  }
  records.push_back(Record(7, "int f("));
  return records;
}

TEST(TransformCorpusTest, OrderIsByIdxThenOperatorThenSite) {
  const TransformResult result = TransformCorpus(MicroCorpusRecords());
  for (size_t i = 1; i < result.variants.size(); ++i) {
    const VariantRecord& a = result.variants[i - 1];
    const VariantRecord& b = result.variants[i];
    auto key = [](const VariantRecord& v) {
      return std::make_tuple(v.parent_idx, !v.is_original(), v.transform_id,
                             v.site);
    };
    EXPECT_LT(key(a), key(b)) << a.variant_id << " / " << b.variant_id;
  }
}

TEST(TransformCorpusTest, OutputIndependentOfWorkerCount) {
  const auto records = MicroCorpusRecords();
  TransformConfig one;
  one.workers = 1;
  TransformConfig four;
  four.workers = 4;
  const TransformResult a = TransformCorpus(records, one);
  const TransformResult b = TransformCorpus(records, four);
  ASSERT_EQ(a.variants.size(), b.variants.size());
  for (size_t i = 0; i < a.variants.size(); ++i) {
    EXPECT_EQ(ToJsonLine(a.variants[i]), ToJsonLine(b.variants[i]));
  }
  ASSERT_EQ(a.skips.size(), b.skips.size());
}

TEST(TransformCorpusTest, ConservationAndSiteCap) {
  const auto records = MicroCorpusRecords();
  TransformConfig config;
  config.max_sites_per_op = 1;
  const TransformResult result = TransformCorpus(records, config);
  std::set<int64_t> idxs;
  for (const DatasetRecord& r : records) idxs.insert(r.idx);
  size_t origs = 0;
  for (const VariantRecord& v : result.variants) {
    EXPECT_TRUE(idxs.count(v.parent_idx));
    EXPECT_EQ(0u, v.site);
    origs += v.is_original();
  }
  EXPECT_EQ(records.size() - 1, origs);
  EXPECT_EQ(origs, result.transformed_records);
}

TEST(VariantsJsonlTest, RoundTrip) {
  const TransformResult result = TransformCorpus(
      {Record(1, "int f(int a) { return a; }"), Record(2, "void g(void) { }")});
  std::string text;
  for (const VariantRecord& v : result.variants) text += ToJsonLine(v) + "\n";
  text += "{\"variant_id\":\"x\"}\n";
  std::istringstream in(text);
  const VariantsLoadResult loaded = ParseVariantsJsonl(in);
  ASSERT_EQ(result.variants.size(), loaded.variants.size());
  for (size_t i = 0; i < loaded.variants.size(); ++i) {
    EXPECT_EQ(ToJsonLine(result.variants[i]), ToJsonLine(loaded.variants[i]));
  }
  ASSERT_EQ(1u, loaded.malformed.size());
  EXPECT_EQ(result.variants.size() + 1, loaded.malformed[0].line);
  EXPECT_EQ("{\"idx\":4,\"reason\":\"r\"}", ToJsonLine(SkipEntry{4, "r"}));
}

VariantRecord Line(int64_t parent, const std::string& transform_id) {
  VariantRecord v;
  v.parent_idx = parent;
  v.transform_id = transform_id;
  v.variant_id = std::to_string(parent) + "#" + transform_id + "#0";
  return v;
}

TEST(StatsTest, ToyCorpusHistogram) {
  const std::vector<std::string> universal = {
      "T13_add_unused_variable", "T14_insert_unexecuted_code", "T15_add_comment",
      "T16_reformat_whitespace"};
  std::vector<VariantRecord> variants;
  for (const std::string& id : universal) variants.push_back(Line(1, id));
  variants.push_back(Line(2, "T04_for_to_while"));
  variants.push_back(Line(2, "T04_for_to_while"));
  for (const std::string& id : universal) variants.push_back(Line(2, id));
  const ApplicabilityStats stats =
      ComputeStats(variants, {Record(1, "a"), Record(2, "b")});
  EXPECT_EQ((std::map<uint32_t, size_t>{{4, 1}, {5, 1}}), stats.histogram);
  EXPECT_DOUBLE_EQ(4.5, stats.mean);
  EXPECT_DOUBLE_EQ(4.5, RoundedMean(stats));
  EXPECT_EQ(4u, stats.min);
  EXPECT_EQ(5u, stats.max);
  for (const OperatorApplicability& op : stats.operators) {
    if (op.operator_id == "T04_for_to_while") {
      EXPECT_EQ(1u, op.functions);
      EXPECT_DOUBLE_EQ(0.5, op.rate);
    }
  }
}

TEST(StatsTest, UniversalOperatorsApplyEverywhere) {
  const auto records = MicroCorpusRecords();
  const ApplicabilityStats stats =
      ComputeStats(TransformCorpus(records).variants, records);
  EXPECT_EQ(records.size(), stats.records);
  EXPECT_EQ(records.size() - 1, stats.parseable);
  size_t histogram_total = 0;
  for (const auto& [count, functions] : stats.histogram) {
    histogram_total += functions;
  }
  EXPECT_EQ(stats.parseable, histogram_total);
  EXPECT_EQ(16u, stats.operators.size());
  for (const OperatorApplicability& op : stats.operators) {
    const std::string prefix = op.operator_id.substr(0, 3);
    if (prefix >= "T13") {
      EXPECT_DOUBLE_EQ(1.0, op.rate) << op.operator_id;
    }
    EXPECT_GT(op.functions, 0u) << op.operator_id;
  }
  EXPECT_GE(stats.min, 4u);
  EXPECT_NE(std::string::npos, StatsToMarkdown(stats).find("| T16_"));
  EXPECT_NE(std::string::npos, StatsToJson(stats).find("\"histogram\""));
}

TEST(StatsTest, UnknownParentIsRejected) {
  EXPECT_THROW(ComputeStats({Line(5, "orig")}, {Record(1, "a")}),
               std::invalid_argument);
}

}  // namespace
}  // namespace semmut::corpus
