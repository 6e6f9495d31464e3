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

#include <map>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "semmut/codemodel/lexer.h"
#include "semmut/codemodel/parser.h"
#include "semmut/transforms/operator.h"
#include "semmut/transforms/reformat.h"
#include "semmut/transforms/registry.h"

namespace semmut::transforms {
namespace {

using codemodel::SyntaxUnit;

SyntaxUnit ParseOrDie(const std::string& text) {
  codemodel::ParseResult result = codemodel::ParseFunction(text);
  EXPECT_TRUE(result.ok()) << text;
  return result.unit();
}

const TransformOperator& Op(const std::string& id) {
  const TransformOperator* op = Registry::Default().Find(id);
  EXPECT_NE(nullptr, op) << id;
  return *op;
}

size_t SiteCount(const std::string& id, const std::string& text) {
  return Op(id).FindSites(ParseOrDie(text)).size();
}

// Text of the variant at `site`, or "<no site>".
std::string ApplyAt(const std::string& id, const std::string& text,
                    uint32_t site = 0) {
  const SyntaxUnit unit = ParseOrDie(text);
  const std::vector<Site> sites = Op(id).FindSites(unit);
  if (site >= sites.size()) return "<no site>";
  return Apply(Op(id), unit, sites[site]).text;
}

std::vector<std::string> TokenSpellings(const std::string& text) {
  std::vector<std::string> out;
  for (const codemodel::Token& token : codemodel::Lex(text).tokens) {
    out.emplace_back(text.substr(token.span.begin, token.span.size()));
  }
  return out;
}

TEST(RegistryTest, SixteenUniqueOperatorsInIdOrder) {
  const auto ops = ListOperators();
  ASSERT_EQ(16u, ops.size());
  std::set<std::string> ids;
  for (size_t i = 0; i < ops.size(); ++i) {
    ids.insert(ops[i]->id());
    char prefix[8];
    std::snprintf(prefix, sizeof(prefix), "T%02zu_", i + 1);
    EXPECT_EQ(0u, ops[i]->id().rfind(prefix, 0)) << ops[i]->id();
    EXPECT_FALSE(ops[i]->info().description.empty());
    EXPECT_FALSE(ops[i]->info().attribution.empty());
    EXPECT_TRUE(ParseCategory(CategoryName(ops[i]->category())).has_value());
  }
  EXPECT_EQ(16u, ids.size());
}

TEST(RegistryTest, CategoriesCoverAllButApiAndFunction) {
  std::set<Category> seen;
  for (const TransformOperator* op : ListOperators()) seen.insert(op->category());
  EXPECT_EQ(5u, seen.size());
  EXPECT_FALSE(seen.contains(Category::kApi));
  EXPECT_FALSE(seen.contains(Category::kFunction));
  EXPECT_EQ(Category::kDataAndDeclaration,
            Op("T12_split_declaration_initializer").category());
}

TEST(RegistryTest, DuplicateIdsAreRejected) {
  Registry registry;
  class Dummy : public TransformOperator {
   public:
    Dummy() : TransformOperator({"X", Category::kTrivial, "d", "a"}) {}
    std::vector<codemodel::TextEdit> Rewrite(const SyntaxUnit&,
                                             codemodel::NodeId) const override {
      return {};
    }

   protected:
    std::vector<codemodel::NodeId> FindAnchors(const SyntaxUnit&) const override {
      return {};
    }
  };
  registry.Add(std::make_unique<Dummy>());
  EXPECT_THROW(registry.Add(std::make_unique<Dummy>()), std::invalid_argument);
}

TEST(OperatorTest, IncrementStatementBecomesCompoundAssignment) {
  EXPECT_EQ("void f(int i) { i += 1; }",
            ApplyAt("T10_increment_to_compound_assignment",
                    "void f(int i) { i++; }"));
  EXPECT_EQ("void f(int *p) { (*p) -= 1; }",
            ApplyAt("T10_increment_to_compound_assignment",
                    "void f(int *p) { --(*p); }"));
  EXPECT_EQ(0u, SiteCount("T10_increment_to_compound_assignment",
                          "int f(int i) { return i++; }"));
}

TEST(OperatorTest, ForBecomesWhileInCanonicalForm) {
  EXPECT_EQ("void f(int n) { int i, s; i=0; while(i<n){s+=i; i++;} }",
            ApplyAt("T04_for_to_while",
                    "void f(int n) { int i, s; for(i=0;i<n;i++){s+=i;} }"));
}

TEST(OperatorTest, ForToWhileEdgeForms) {
  EXPECT_EQ("void f(int n) { {int i = 0; while(i < n) {g(i); i++;}} }",
            ApplyAt("T04_for_to_while",
                    "void f(int n) { for(int i = 0; i < n; i++) g(i); }"));
  EXPECT_EQ("void f(void) { while(1) { if (g()) break; } }",
            ApplyAt("T04_for_to_while",
                    "void f(void) { for (;;) { if (g()) break; } }"));
  EXPECT_EQ("void f(int n) { if (n) {n = 0; while(n < 3) { g(); n++; }} }",
            ApplyAt("T04_for_to_while",
                    "void f(int n) { if (n) for (n = 0; n < 3; n++) { g(); } }"));
}

TEST(OperatorTest, ForToWhileRejectsContinueAndCapture) {
  EXPECT_EQ(0u, SiteCount("T04_for_to_while",
                          "void f(int n) { int i; for (i = 0; i < n; i++) { "
                          "if (i) continue; g(); } }"));
  // A continue bound to an inner loop is harmless.
  EXPECT_EQ(1u, SiteCount("T04_for_to_while",
                          "void f(int n) { int i; for (i = 0; i < n; i++) { "
                          "while (g()) continue; } }"));
  EXPECT_EQ(0u, SiteCount("T04_for_to_while",
                          "void f(int n) { int i; for (i = 0; i < n; i++) { "
                          "int i = 5; g(i); } }"));
  EXPECT_EQ(2u, SiteCount("T04_for_to_while",
                          "void f(int n) { int i; for (i = 0; i < n; i++) {} "
                          "for (;;) break; }"));
}

TEST(OperatorTest, WhileBecomesFor) {
  EXPECT_EQ("void f(int n) { for(;n > 0;) {n--;} }",
            ApplyAt("T05_while_to_for", "void f(int n) { while (n > 0) n--; }"));
  EXPECT_EQ(0u, SiteCount("T05_while_to_for",
                          "void f(int n) { do n--; while (n > 0); }"));
}

TEST(OperatorTest, SwitchBecomesIfChain) {
  EXPECT_EQ(
      "int f(int n) { int r; if ((n) == (1) || (n) == (2)) {r = 10;} else if "
      "((n) == (3)) {return 7;} else {r = 0;} return r; }",
      ApplyAt("T06_switch_to_if_chain",
              "int f(int n) { int r; switch (n) { case 1: case 2: r = 10; "
              "break; case 3: return 7; default: r = 0; break; } return r; }"));
  EXPECT_EQ("int f(int n) { {g();} return 0; }",
            ApplyAt("T06_switch_to_if_chain",
                    "int f(int n) { switch (n) { default: g(); break; } "
                    "return 0; }"));
}

TEST(OperatorTest, SwitchToIfChainRejectsUnsafeShapes) {
  const std::string id = "T06_switch_to_if_chain";
  // Fall-through.
  EXPECT_EQ(0u, SiteCount(id, "void f(int n) { switch (n) { case 1: g(); "
                              "case 2: h(); break; } }"));
  // Impure controlling expression.
  EXPECT_EQ(0u, SiteCount(id, "void f(int n) { switch (g(n)) { case 1: h(); "
                              "break; } }"));
  // Early break.
  EXPECT_EQ(0u, SiteCount(id, "void f(int n) { switch (n) { case 1: if (n) "
                              "break; h(); break; } }"));
  // Duff-style nesting.
  EXPECT_EQ(0u, SiteCount(id, "void f(int n) { switch (n) { case 0: do { "
                              "g(); case 1: h(); } while (n--); break; } }"));
  // Declaration at group level.
  EXPECT_EQ(0u, SiteCount(id, "void f(int n) { switch (n) { case 1: int x = "
                              "1; g(x); break; } }"));
  // Case range.
  EXPECT_EQ(0u, SiteCount(id, "void f(int n) { switch (n) { case 1 ... 3: "
                              "g(); break; } }"));
  // Breaks inside nested loops bind to the loop and are fine.
  EXPECT_EQ(1u, SiteCount(id, "void f(int n) { switch (n) { case 1: while "
                              "(g()) break; break; } }"));
}

TEST(OperatorTest, AndConditionIsSplit) {
  EXPECT_EQ("void f(int a, int b) { if (a) {if (b > 1) {g();}} }",
            ApplyAt("T07_split_and_condition",
                    "void f(int a, int b) { if ((a && b > 1)) g(); }"));
  EXPECT_EQ(0u, SiteCount("T07_split_and_condition",
                          "void f(int a, int b) { if (a && b) g(); else h(); }"));
  EXPECT_EQ(0u, SiteCount("T07_split_and_condition",
                          "void f(int a, int b) { if (a || b) g(); }"));
}

TEST(OperatorTest, IfElseBranchesAreSwapped) {
  EXPECT_EQ("void f(int c) { if(!(c)){B;}else{A;} }",
            ApplyAt("T08_swap_if_else", "void f(int c) { if(c){A;}else{B;} }"));
  EXPECT_EQ("void f(int c) { if (!(c)) {y();} else {x();} }",
            ApplyAt("T08_swap_if_else",
                    "void f(int c) { if (c) x(); else y(); }"));
  EXPECT_EQ(0u, SiteCount("T08_swap_if_else", "void f(int c) { if (c) x(); }"));
}

TEST(OperatorTest, ConditionalAssignmentBecomesIfElse) {
  EXPECT_EQ("void f(int c, int *x) { if (c > 0) {x[0] = 1;} else {x[0] = (2, 3);} }",
            ApplyAt("T09_ternary_to_if_else",
                    "void f(int c, int *x) { x[0] = c > 0 ? 1 : (2, 3); }"));
  const std::string id = "T09_ternary_to_if_else";
  EXPECT_EQ(0u, SiteCount(id, "void f(int c, int x) { x += c ? 1 : 2; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(int c, int *x) { x[g()] = c ? 1 : 2; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(int c, int x) { x = c ?: 2; }"));
  // Arms with different arithmetic conversions.
  EXPECT_EQ(0u, SiteCount(id, "void f(int c, long x) { x = c ? -1 : 1u; }"));
  EXPECT_EQ(1u, SiteCount(id, "void f(int c, long x) { x = c ? 2u : 1u; }"));
}

TEST(OperatorTest, MultiDeclarationIsSplit) {
  EXPECT_EQ("void f(void) { unsigned long a = 1; unsigned long *b; unsigned long c[2]; }",
            ApplyAt("T11_split_multi_declaration",
                    "void f(void) { unsigned long a = 1, *b, c[2]; }"));
  EXPECT_EQ(0u, SiteCount("T11_split_multi_declaration",
                          "void f(void) { struct { int x; } a, b; }"));
  EXPECT_EQ(0u, SiteCount("T11_split_multi_declaration",
                          "void f(void) { for (int i = 0, j = 0; i < j; i++) {} }"));
}

TEST(OperatorTest, DeclarationInitializerIsSplit) {
  const std::string id = "T12_split_declaration_initializer";
  EXPECT_EQ("void f(int *q) { const int *p; p = q + 1; }",
            ApplyAt(id, "void f(int *q) { const int *p = q + 1; }"));
  EXPECT_EQ("void f(void) { int (*fp)(int); fp = g; }",
            ApplyAt(id, "void f(void) { int (*fp)(int) = g; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(void) { static int s = 1; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(void) { const int k = 1; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(int *q) { int *const p = q; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(void) { int a[2] = {1, 2}; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(void) { char s[] = \"ab\"; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(void) { struct P p = {0}; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(void) { int a = 1, b = 2; }"));
  EXPECT_EQ(0u, SiteCount(id, "void f(void) { int a; }"));
}

TEST(OperatorTest, InsertionsUseFreshNames) {
  const std::string text = "int f(int smut_T13_0) { int smut_T14_0 = smut_T13_0; return smut_T14_0; }";
  EXPECT_EQ(
      "int f(int smut_T13_0) { int smut_T13_1; int smut_T14_0 = smut_T13_0; "
      "return smut_T14_0; }",
      ApplyAt("T13_add_unused_variable", text));
  EXPECT_EQ(
      "int f(int smut_T13_0) { if (0) { int smut_T14_1 = 0; smut_T14_1++; } "
      "int smut_T14_0 = smut_T13_0; return smut_T14_0; }",
      ApplyAt("T14_insert_unexecuted_code", text));
  EXPECT_EQ("void f(void) { /* semantic-preserving edit */}",
            ApplyAt("T15_add_comment", "void f(void) {}"));
}

TEST(OperatorTest, RenamingUsesFreshNamesAndSkipsAsm) {
  EXPECT_EQ("int f(int v0) { int v1 = v0; return v1; }",
            ApplyAt("T01_rename_local_variable",
                    "int f(int v0) { int a = v0; return a; }"));
  EXPECT_EQ("int f(int p0, int b) { return p0 + b; }",
            ApplyAt("T02_rename_parameter", "int f(int a, int b) { return a + b; }"));
  const std::string asm_text =
      "int f(int a) { int b = a; __asm__(\"nop\"); return b; }";
  for (const std::string id :
       {"T01_rename_local_variable", "T02_rename_parameter"}) {
    EXPECT_EQ(0u, SiteCount(id, asm_text)) << id;
  }
  // Names spelled inside directives cannot be renamed safely.
  EXPECT_EQ(0u, SiteCount("T01_rename_local_variable",
                          "int f(void) { int a = 1;\n#define A a\n return A; }"));
}

TEST(OperatorTest, FunctionRenameNeedsRecursion) {
  EXPECT_EQ("int fn0(int n) { return n ? n * fn0(n - 1) : 1; }",
            ApplyAt("T03_rename_function",
                    "int fact(int n) { return n ? n * fact(n - 1) : 1; }"));
  EXPECT_EQ(0u, SiteCount("T03_rename_function", "int g(int n) { return n; }"));
  EXPECT_EQ(0u, SiteCount("T03_rename_function",
                          "int main(int c) { return c ? main(c - 1) : 0; }"));
  EXPECT_EQ(0u, SiteCount("T03_rename_function",
                          "int h(int n) { puts(__func__); return n ? h(n - 1) : 0; }"));
}

TEST(OperatorTest, ReformatKeepsTokenStream) {
  const std::string text =
      "int f(int a) {\n#if X\n  a++; // bump\n#endif\n  if (a) { return 1; } "
      "else return 2; }";
  const std::string variant = ApplyAt("T16_reformat_whitespace", text);
  EXPECT_NE(text, variant);
  EXPECT_EQ(TokenSpellings(text), TokenSpellings(variant));
  EXPECT_NE(std::string::npos, variant.find("\n#if X\n"));
  EXPECT_NE(std::string::npos, variant.find("// bump\n"));
}

TEST(OperatorTest, ReformatFallsBackWhenAlreadyExpanded) {
  const SyntaxUnit unit = ParseOrDie("int f(void) { return 0; }");
  const std::string expanded = Reformat(unit, LayoutStyle::kExpanded);
  EXPECT_EQ("int f ( void ) {\n    return 0 ;\n}", expanded);
  const std::string variant = ApplyAt("T16_reformat_whitespace", expanded);
  EXPECT_EQ("int f ( void ) { return 0 ; }", variant);
}

TEST(OperatorTest, RenamingRespectsShadowing) {
  EXPECT_EQ("int h(int x) { int y = x; { int v0 = y + 1; y = v0; } return x + y; }",
            ApplyAt("T01_rename_local_variable",
                    "int h(int x) { int y = x; { int x = y + 1; y = x; } return x + y; }",
                    1));
  EXPECT_EQ("int h(int p0) { int y = p0; { int x = y + 1; y = x; } return p0 + y; }",
            ApplyAt("T02_rename_parameter",
                    "int h(int x) { int y = x; { int x = y + 1; y = x; } return x + y; }"));
}

// Alpha-equivalence oracle, independent of the parser: tokenise with a
// regex, then replace each identifier by the index of its first occurrence.
// For functions without shadowing, two texts related by a consistent,
// capture-free rename have equal sequences and any inconsistent rename
// changes some index.
std::vector<std::string> DeBruijnTokens(const std::string& text) {
  static const std::regex kToken(
      R"([A-Za-z_][A-Za-z_0-9]*|\d[\w.]*|"(?:[^"\\]|\\.)*"|'(?:[^'\\]|\\.)*'|\S)");
  static const std::set<std::string> kKeywords = {
      "int", "char", "return", "if", "else", "for", "while", "void",
      "unsigned", "long", "const", "struct", "sizeof", "do", "switch",
      "case", "break", "default", "static", "short", "double"};
  std::map<std::string, int> first;
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kToken);
       it != std::sregex_iterator(); ++it) {
    const std::string token = it->str();
    const bool identifier =
        (std::isalpha(static_cast<unsigned char>(token[0])) || token[0] == '_') &&
        !kKeywords.contains(token);
    if (!identifier) {
      out.push_back(token);
      continue;
    }
    auto [pos, inserted] = first.emplace(token, static_cast<int>(first.size()));
    out.push_back("#" + std::to_string(pos->second));
  }
  return out;
}

TEST(OperatorTest, RenamesAreAlphaEquivalent) {
  const std::vector<std::string> corpus = {
      "int f(int a, int b) { int t = a; a = b; b = t; return a - b; }",
      "int g(int n) { int s = 0; for (int i = 0; i < n; i++) { int s2 = s; s "
      "= s2 + i; } return s; }",
      "int h(int x) { int y = x; { int z = y + 1; y = z; } return x + y; }",
      "long k(long n) { return n < 2 ? n : k(n - 1) + k(n - 2); }",
  };
  for (const std::string& text : corpus) {
    const SyntaxUnit unit = ParseOrDie(text);
    for (const std::string id : {"T01_rename_local_variable",
                                 "T02_rename_parameter", "T03_rename_function"}) {
      for (const Site& site : Op(id).FindSites(unit)) {
        const Variant variant = Apply(Op(id), unit, site);
        EXPECT_EQ(DeBruijnTokens(text), DeBruijnTokens(variant.text))
            << variant.variant_id << "\n" << variant.text;
      }
    }
  }
  // The oracle does detect an inconsistent rename.
  EXPECT_NE(DeBruijnTokens("int f(int a) { return a; }"),
            DeBruijnTokens("int f(int a) { return b; }"));
}

TEST(ApplyTest, FindSitesCountsAndUniversalOperators) {
  EXPECT_EQ(2u, SiteCount("T04_for_to_while",
                          "void f(int n) { int i; for (i = 0; i < n; i++) g(); "
                          "for (i = n; i > 0; i--) g(); }"));
  for (const std::string id :
       {"T13_add_unused_variable", "T14_insert_unexecuted_code",
        "T15_add_comment", "T16_reformat_whitespace"}) {
    EXPECT_EQ(1u, SiteCount(id, "void f(void) {}")) << id;
  }
}

TEST(ApplyTest, OnlyUniversalOperatorsOnEmptyFunction) {
  const ApplyAllResult result = ApplyAll(ParseOrDie("void f(void) { }"), "7");
  ASSERT_EQ(4u, result.variants.size());
  EXPECT_TRUE(result.failures.empty());
  EXPECT_EQ("7#T13_add_unused_variable#0", result.variants[0].variant_id);
  EXPECT_EQ("7#T16_reformat_whitespace#0", result.variants[3].variant_id);
}

TEST(ApplyTest, SitesPerOperatorAreCapped) {
  const std::string text =
      "void f(int n) { int i; for (i = 0; i < n; i++) {} for (i = 0; i < n; "
      "i++) {} for (i = 0; i < n; i++) {} for (i = 0; i < n; i++) {} for (i = "
      "0; i < n; i++) {} }";
  const SyntaxUnit unit = ParseOrDie(text);
  EXPECT_EQ(5u, Op("T04_for_to_while").FindSites(unit).size());
  size_t t04 = 0;
  for (const Variant& v : ApplyAll(unit, "fn").variants) {
    if (v.operator_id == "T04_for_to_while") {
      EXPECT_EQ(t04, v.site);
      ++t04;
    }
  }
  EXPECT_EQ(4u, t04);
  ApplyAllConfig config;
  config.max_sites_per_op = 2;
  size_t capped = 0;
  for (const Variant& v : ApplyAll(unit, "fn", config).variants) {
    capped += v.operator_id == "T04_for_to_while";
  }
  EXPECT_EQ(2u, capped);
}

TEST(ApplyTest, ForeignSiteIsRejected) {
  const SyntaxUnit unit = ParseOrDie("void f(int i) { i++; i++; }");
  const auto sites = Op("T10_increment_to_compound_assignment").FindSites(unit);
  ASSERT_EQ(2u, sites.size());
  EXPECT_THROW(Apply(Op("T08_swap_if_else"), unit, sites[0]),
               std::invalid_argument);
  Site bogus = sites[1];
  bogus.ordinal = 0;
  EXPECT_THROW(Apply(Op("T10_increment_to_compound_assignment"), unit, bogus),
               std::invalid_argument);
}

// Replaces the function body's closing brace, leaving unbalanced text.
class BrokenOperator : public TransformOperator {
 public:
  BrokenOperator()
      : TransformOperator({"X01_broken", Category::kTrivial, "breaks", "none"}) {}
  std::vector<codemodel::TextEdit> Rewrite(const SyntaxUnit& unit,
                                           codemodel::NodeId) const override {
    const uint32_t end = unit.node(unit.FunctionBody()).span.end;
    return {{{end - 1, end}, ";"}};
  }

 protected:
  std::vector<codemodel::NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    return {unit.FunctionBody()};
  }
};

TEST(ApplyTest, UnparseableRewritesAreCollectedAsFailures) {
  Registry registry;
  registry.Add(std::make_unique<BrokenOperator>());
  const ApplyAllResult result =
      ApplyAll(registry, ParseOrDie("void f(void) { }"), "fn");
  EXPECT_TRUE(result.variants.empty());
  ASSERT_EQ(1u, result.failures.size());
  EXPECT_EQ("X01_broken", result.failures[0].operator_id());
}

const std::vector<std::string>& SampleFunctions() {
  static const std::vector<std::string> functions = {
      "int f(int n) { int a, *b = 0, c[3]; const int k = 2; static int s = 1; "
      "for (int i = 0; i < n; i++) { a++; } switch (n) { case 1: case 2: a = "
      "1; break; default: return 0; } x = n ? 1 : 2; if (a && b) a--; else "
      "++a; return a + k + s + c[0]; }",
      "static int g(const char *p, size_t len)\n{\n    size_t i = 0;\n    int "
      "acc = 0;\n    while (i < len) {\n        if (p[i] == 'x' && acc > 0)\n "
      "           acc--;\n        i++;\n    }\n    return acc;\n}\n",
      "void h(int *v, int n) { int t; for (t = 0; t < n; t++) v[t] = t > 3 ? t "
      ": -t; }",
  };
  return functions;
}

TEST(ApplyTest, VariantsDifferReparseAndStayLocal) {
  for (const std::string& text : SampleFunctions()) {
    const SyntaxUnit unit = ParseOrDie(text);
    const ApplyAllResult result = ApplyAll(unit, "fn");
    EXPECT_TRUE(result.failures.empty());
    for (const Variant& v : result.variants) {
      EXPECT_NE(text, v.text);
      EXPECT_TRUE(codemodel::ParseFunction(v.text).ok()) << v.variant_id;
      if (v.category == Category::kFormatting &&
          v.operator_id == "T16_reformat_whitespace") {
        EXPECT_EQ(TokenSpellings(text), TokenSpellings(v.text));
        continue;
      }
      // Outside the edit span the parent's bytes are untouched.
      const std::string prefix = text.substr(0, v.edit_span.begin);
      const std::string suffix = text.substr(v.edit_span.end);
      ASSERT_GE(v.text.size(), prefix.size() + suffix.size());
      EXPECT_EQ(prefix, v.text.substr(0, prefix.size())) << v.variant_id;
      EXPECT_EQ(suffix, v.text.substr(v.text.size() - suffix.size()))
          << v.variant_id;
    }
  }
}

TEST(ApplyTest, ApplyAllIsDeterministic) {
  for (const std::string& text : SampleFunctions()) {
    const ApplyAllResult a = ApplyAll(ParseOrDie(text), "fn");
    const ApplyAllResult b = ApplyAll(ParseOrDie(std::string(text)), "fn");
    ASSERT_EQ(a.variants.size(), b.variants.size());
    for (size_t i = 0; i < a.variants.size(); ++i) {
      EXPECT_EQ(a.variants[i].variant_id, b.variants[i].variant_id);
      EXPECT_EQ(a.variants[i].text, b.variants[i].text);
    }
  }
}

}  // namespace
}  // namespace semmut::transforms
