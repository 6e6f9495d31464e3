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
#include <chrono>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "semmut/codemodel/parser.h"
#include "semmut/transforms/registry.h"
#include "semmut/verify/checks.h"
#include "semmut/verify/differential.h"
#include "semmut/verify/gate.h"
#include "semmut/verify/review.h"

#ifndef SEMMUT_MICROCORPUS_DIR
#error "SEMMUT_MICROCORPUS_DIR must point at data/microcorpus"
#endif

namespace semmut::verify {
namespace {

using codemodel::SyntaxUnit;

SyntaxUnit ParseOrDie(const std::string& text) {
  codemodel::ParseResult result = codemodel::ParseFunction(text);
  EXPECT_TRUE(result.ok()) << text;
  return result.unit();
}

const transforms::TransformOperator& Op(const std::string& id) {
  return *transforms::Registry::Default().Find(id);
}

// The erroneous declaration-hoisting rewrite: `i` is moved into the first
// loop, leaving the second loop without a declaration.
constexpr char kHoistBefore[] =
    "void f(void) {\n"
    "unsigned i;\n"
    "for (i = 0; i < 10; i++)\n"
    "    foo();\n"
    "for (i = 0; i < 10; i++) \n"
    "    bar();\n"
    "}\n";
constexpr char kHoistAfter[] =
    "void f(void) {\n"
    "for (unsigned i = 0; i < 10; i++) \n"
    "    foo();\n"
    "for (i = 0; i < 10; i++) \n"
    "    bar();\n"
    "}\n";

bool HasToolchain() {
  static const bool available = CompilerAvailable(kDefaultCompilerCommand);
  return available;
}

TEST(StaticCheckTest, HoistedDeclarationIsBroken) {
  const Verdict verdict =
      CheckStatic(ParseOrDie(kHoistBefore), ParseOrDie(kHoistAfter));
  EXPECT_EQ(Status::kBroken, verdict.status());
  ASSERT_EQ(1u, verdict.reasons().size());
  EXPECT_EQ("scope", verdict.reasons()[0].check);
  EXPECT_EQ("unresolved identifier i", verdict.reasons()[0].message);
}

TEST(StaticCheckTest, IdentityIsPreserved) {
  for (const std::string text :
       {std::string(kHoistBefore), std::string(kHoistAfter),
        std::string("int g(int n) { return n ? g(n - 1) : x; }")}) {
    const SyntaxUnit unit = ParseOrDie(text);
    StaticCheckOptions options;
    options.edit_span = codemodel::Span{0, 0};
    EXPECT_TRUE(CheckStatic(unit, unit, options).preserved());
    options.category = transforms::Category::kFormatting;
    EXPECT_TRUE(CheckStatic(unit, unit, options).preserved());
  }
}

TEST(StaticCheckTest, RegisteredOperatorVariantsPass) {
  const std::string text =
      "int f(int n) { int i, s = 0; for (i = 0; i < n; i++) { s += i; } "
      "if (s > 3) s--; else s++; return s; }";
  const SyntaxUnit unit = ParseOrDie(text);
  const auto result = transforms::ApplyAll(unit, "fn");
  ASSERT_FALSE(result.variants.empty());
  for (const transforms::Variant& variant : result.variants) {
    EXPECT_TRUE(CheckStatic(unit, variant).preserved()) << variant.variant_id;
  }
}

TEST(StaticCheckTest, TokenChangeInFormattingVariantIsBroken) {
  StaticCheckOptions options;
  options.category = transforms::Category::kFormatting;
  const Verdict verdict =
      CheckStatic(ParseOrDie("int f(void) { return 1; }"),
                  ParseOrDie("int f(void) { return 2; }"), options);
  ASSERT_TRUE(verdict.broken());
  EXPECT_EQ("tokens", verdict.reasons()[0].check);
}

TEST(StaticCheckTest, ChangesOutsideEditSpanAreBroken) {
  const std::string text = "int f(int a) { a++; return a + 1; }";
  StaticCheckOptions options;
  options.category = transforms::Category::kTrivial;
  const uint32_t at = static_cast<uint32_t>(text.find("a++"));
  options.edit_span = codemodel::Span{at, at + 3};
  EXPECT_TRUE(CheckStatic(ParseOrDie(text),
                          ParseOrDie("int f(int a) { a += 1; return a + 1; }"),
                          options)
                  .preserved());
  const Verdict verdict =
      CheckStatic(ParseOrDie(text),
                  ParseOrDie("int f(int a) { a += 1; return a + 2; }"), options);
  ASSERT_TRUE(verdict.broken());
  EXPECT_EQ("locality", verdict.reasons()[0].check);
}

TEST(StaticCheckTest, InconsistentRenameIsBroken) {
  EXPECT_TRUE(CheckStatic(ParseOrDie("int f(int a) { int b = a; return b; }"),
                          ParseOrDie("int f(int a) { int v0 = a; return b; }"))
                  .broken());
}

TEST(CompileCheckTest, ValidFunctionIsPreserved) {
  if (!HasToolchain()) GTEST_SKIP() << "no C compiler";
  EXPECT_EQ(Status::kPreserved, CheckCompile("int f(void){return 0;}").status());
  // Unresolved callees get generated declarations.
  EXPECT_EQ(Status::kPreserved, CheckCompile(kHoistBefore).status());
}

TEST(CompileCheckTest, HoistedDeclarationFailsToCompile) {
  if (!HasToolchain()) GTEST_SKIP() << "no C compiler";
  const Verdict verdict = CheckCompile(kHoistAfter);
  ASSERT_EQ(Status::kBroken, verdict.status());
  EXPECT_NE(std::string::npos, verdict.reasons()[0].message.find("'i'"));
}

TEST(CompileCheckTest, MissingCompilerIsUnknown) {
  EXPECT_EQ(Status::kUnknown,
            CheckCompile("int f(void){return 0;}", "semmut-no-such-cc -O0")
                .status());
  EXPECT_FALSE(CompilerAvailable("semmut-no-such-cc"));
}

TEST(CompileCheckTest, UncompilableOriginalMakesVerdictUnknown) {
  if (!HasToolchain()) GTEST_SKIP() << "no C compiler";
  const Verdict verdict = CheckCompile("int f(void){return 0;}",
                                       kDefaultCompilerCommand,
                                       std::string_view("int f(void){return q;}"));
  EXPECT_EQ(Status::kUnknown, verdict.status());
}

DifferentialCase CaseNamed(const std::string& name) {
  for (DifferentialCase& c : LoadDifferentialCases(SEMMUT_MICROCORPUS_DIR)) {
    if (c.name == name) return c;
  }
  ADD_FAILURE() << "no case " << name;
  return {};
}

TEST(DifferentialTest, MicroCorpusIsComplete) {
  const auto cases = LoadDifferentialCases(SEMMUT_MICROCORPUS_DIR);
  EXPECT_GE(cases.size(), 30u);
  for (const DifferentialCase& c : cases) {
    EXPECT_TRUE(codemodel::ParseFunction(c.function).ok()) << c.name;
    EXPECT_NE(std::string::npos, c.driver.find("main")) << c.name;
    // At least eight printed results.
    EXPECT_GE(std::count(c.expected_output.begin(), c.expected_output.end(), '\n'),
              8)
        << c.name;
  }
}

TEST(DifferentialTest, ForToWhileOnSumForIsPreserved) {
  if (!HasToolchain()) GTEST_SKIP() << "no C compiler";
  const Verdict verdict =
      CheckDifferential(CaseNamed("sum_for"), Op("T04_for_to_while"));
  EXPECT_EQ(Status::kPreserved, verdict.status());
}

TEST(DifferentialTest, RenamedRecursiveFunctionStillLinksWithDriver) {
  if (!HasToolchain()) GTEST_SKIP() << "no C compiler";
  EXPECT_EQ(Status::kPreserved,
            CheckDifferential(CaseNamed("fact_rec"), Op("T03_rename_function"))
                .status());
}

// Converts for loops to while loops but forgets the increment.
class DropIncrement : public transforms::TransformOperator {
 public:
  DropIncrement()
      : TransformOperator({"X_drop_increment", transforms::Category::kControlFlow,
                           "for -> while without the update", "test"}) {}

  std::vector<codemodel::TextEdit> Rewrite(const SyntaxUnit& unit,
                                           codemodel::NodeId anchor) const override {
    const codemodel::Node& loop = unit.node(anchor);
    std::string out(unit.NodeText(loop.child(0)));
    out += "; while (";
    out += unit.NodeText(loop.child(1));
    out += ") ";
    out += unit.NodeText(loop.child(3));
    return {{loop.span, out}};
  }

 protected:
  std::vector<codemodel::NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    return unit.NodesOfKind(codemodel::NodeKind::kForStatement);
  }
};

TEST(DifferentialTest, SabotagedOperatorIsBroken) {
  if (!HasToolchain()) GTEST_SKIP() << "no C compiler";
  DifferentialOptions options;
  options.timeout = std::chrono::milliseconds(1500);
  const Verdict verdict =
      CheckDifferential(CaseNamed("sum_for"), DropIncrement(), options);
  ASSERT_EQ(Status::kBroken, verdict.status());
  EXPECT_EQ("site 0: timeout", verdict.reasons()[0].message);
}

TEST(DifferentialTest, InapplicableOperatorIsUnknown) {
  const Verdict verdict =
      CheckDifferential(CaseNamed("sum_for"), Op("T06_switch_to_if_chain"));
  EXPECT_EQ(Status::kUnknown, verdict.status());
}

TEST(DifferentialTest, WrongRecordedOutputIsAToolchainError) {
  if (!HasToolchain()) GTEST_SKIP() << "no C compiler";
  DifferentialCase test_case = CaseNamed("sum_for");
  test_case.expected_output = "42\n";
  EXPECT_THROW(CheckDifferential(test_case, Op("T04_for_to_while")),
               ToolchainError);
}

TEST(GateTest, StaticOnlyGatePassesOnMicroCorpus) {
  GateOptions options;
  options.static_only = true;
  const GateSummary summary = RunPreservationGate(
      LoadDifferentialCases(SEMMUT_MICROCORPUS_DIR), transforms::Registry::Default(), options);
  EXPECT_FALSE(summary.differential);
  EXPECT_TRUE(summary.passed());
  EXPECT_EQ(0u, summary.broken);
  std::set<std::string> exercised;
  for (const GateEntry& entry : summary.entries) {
    if (entry.sites > 0) exercised.insert(entry.operator_id);
  }
  EXPECT_EQ(16u, exercised.size());
}

TEST(GateTest, SabotagedOperatorFailsTheGate) {
  if (!HasToolchain()) GTEST_SKIP() << "no C compiler";
  transforms::Registry registry;
  registry.Add(std::make_unique<DropIncrement>());
  GateOptions options;
  options.differential.timeout = std::chrono::milliseconds(1500);
  const GateSummary summary = RunPreservationGate({CaseNamed("sum_for")}, registry, options);
  EXPECT_TRUE(summary.differential);
  EXPECT_FALSE(summary.passed());
  EXPECT_EQ(1u, summary.broken);
}

std::vector<transforms::Variant> FakeVariants(const std::string& op, int count) {
  std::vector<transforms::Variant> variants;
  for (int i = 0; i < count; ++i) {
    transforms::Variant v;
    v.parent_id = std::to_string(i % 7);
    v.operator_id = op;
    v.site = static_cast<uint32_t>(i);
    v.variant_id = transforms::MakeVariantId(v.parent_id, op, v.site);
    v.text = "text " + std::to_string(i);
    variants.push_back(v);
  }
  return variants;
}

TEST(ReviewTest, SampleSizesAreCapped) {
  auto variants = FakeVariants("T04_for_to_while", 100);
  const auto few = FakeVariants("T09_ternary_to_if_else", 3);
  variants.insert(variants.end(), few.begin(), few.end());
  const auto samples = SampleForReview(variants, {{"0", "orig"}}, 20, 5);
  ASSERT_EQ(2u, samples.size());
  EXPECT_EQ("T04_for_to_while", samples[0].operator_id);
  EXPECT_EQ(20u, samples[0].pairs.size());
  EXPECT_EQ(3u, samples[1].pairs.size());
  std::set<std::string> ids;
  for (const ReviewPair& pair : samples[0].pairs) ids.insert(pair.variant_id);
  EXPECT_EQ(20u, ids.size());
}

TEST(ReviewTest, SamplingIsSeedDeterministic) {
  const auto variants = FakeVariants("T04_for_to_while", 100);
  auto ids = [&](uint64_t seed) {
    std::vector<std::string> out;
    const auto samples = SampleForReview(variants, {}, 20, seed);
    for (const auto& pair : samples[0].pairs) {
      out.push_back(pair.variant_id);
    }
    return out;
  };
  EXPECT_EQ(ids(42), ids(42));
  EXPECT_NE(ids(42), ids(43));
}

TEST(ReviewTest, MarkdownHasOneRowPerPair) {
  const auto samples =
      SampleForReview(FakeVariants("T05_while_to_for", 2), {{"0", "a|b"}});
  const std::string markdown = RenderReviewMarkdown(samples);
  EXPECT_NE(std::string::npos, markdown.find("## T05_while_to_for"));
  EXPECT_NE(std::string::npos, markdown.find("a\\|b"));
  size_t rows = 0;
  for (size_t pos = markdown.find("\n| 0#"); pos != std::string::npos;
       pos = markdown.find("\n| ", pos + 1)) {
    ++rows;
  }
  EXPECT_EQ(2u, rows);
}

TEST(VerdictTest, JsonLineShape) {
  Verdict verdict;
  verdict.Fail("scope", "unresolved identifier i");
  const auto json = nlohmann::json::parse(verdict.ToJsonLine("7#T04#0"));
  EXPECT_EQ("7#T04#0", json["variant_id"]);
  EXPECT_EQ("Broken", json["status"]);
  EXPECT_EQ("scope", json["reasons"][0]["check"]);
  EXPECT_EQ(std::string::npos, verdict.ToJsonLine("x").find('\n'));
}

TEST(VerdictTest, MergeKeepsWorstStatus) {
  Verdict verdict;
  Verdict unknown;
  unknown.MarkUnknown("compile", "no compiler");
  verdict.Merge(unknown);
  EXPECT_EQ(Status::kUnknown, verdict.status());
  Verdict broken;
  broken.Fail("scope", "x");
  verdict.Merge(broken);
  EXPECT_EQ(Status::kBroken, verdict.status());
  verdict.MarkUnknown("other", "y");
  EXPECT_EQ(Status::kBroken, verdict.status());
  EXPECT_EQ(3u, verdict.reasons().size());
}

}  // namespace
}  // namespace semmut::verify
