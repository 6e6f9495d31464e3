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

#include "semmut/verify/checks.h"

#include <map>
#include <set>

#include "semmut/codemodel/parser.h"
#include "semmut/codemodel/scope.h"
#include "src/verify/subprocess.h"

namespace semmut::verify {
namespace {

using codemodel::IdentifierRole;
using codemodel::SyntaxUnit;

std::vector<std::string_view> Spellings(const SyntaxUnit& unit) {
  std::vector<std::string_view> out;
  out.reserve(unit.tokens().size());
  for (size_t i = 0; i < unit.tokens().size(); ++i) {
    out.push_back(unit.TokenText(i));
  }
  return out;
}

void CheckScopes(const SyntaxUnit& original, const SyntaxUnit& variant,
                 Verdict& verdict) {
  std::set<std::string> resolved;
  std::map<std::string, int> unresolved_before;
  const codemodel::ScopeMap original_scopes = codemodel::ResolveScopes(original);
  for (const auto& occurrence : original_scopes.occurrences()) {
    if (occurrence.role == IdentifierRole::kUnresolved) {
      ++unresolved_before[occurrence.name];
    } else {
      resolved.insert(occurrence.name);
    }
  }
  std::map<std::string, int> unresolved_after;
  const codemodel::ScopeMap variant_scopes = codemodel::ResolveScopes(variant);
  for (const auto& occurrence : variant_scopes.occurrences()) {
    if (occurrence.role == IdentifierRole::kUnresolved) {
      ++unresolved_after[occurrence.name];
    }
  }
  for (const auto& [name, count] : unresolved_after) {
    if (resolved.contains(name) && count > unresolved_before[name]) {
      verdict.Fail("scope", "unresolved identifier " + name);
    }
  }
}

void CheckLocality(const SyntaxUnit& original, const SyntaxUnit& variant,
                   codemodel::Span edit_span, Verdict& verdict) {
  const auto before = Spellings(original);
  const auto after = Spellings(variant);
  size_t prefix = 0;
  while (prefix < before.size() &&
         original.tokens()[prefix].span.end <= edit_span.begin) {
    ++prefix;
  }
  size_t suffix = 0;
  while (suffix < before.size() - prefix &&
         original.tokens()[before.size() - 1 - suffix].span.begin >=
             edit_span.end) {
    ++suffix;
  }
  bool ok = prefix + suffix <= after.size();
  for (size_t i = 0; ok && i < prefix; ++i) ok = before[i] == after[i];
  for (size_t i = 1; ok && i <= suffix; ++i) {
    ok = before[before.size() - i] == after[after.size() - i];
  }
  if (!ok) {
    verdict.Fail("locality", "tokens outside the edit span [" +
                                 std::to_string(edit_span.begin) + ", " +
                                 std::to_string(edit_span.end) + ") changed");
  }
}

}  // namespace

Verdict CheckStatic(const SyntaxUnit& original, const SyntaxUnit& variant,
                    const StaticCheckOptions& options) {
  Verdict verdict;
  CheckScopes(original, variant, verdict);
  if (options.category == transforms::Category::kFormatting) {
    if (Spellings(original) != Spellings(variant)) {
      verdict.Fail("tokens", "formatting variant changed the token stream");
    }
  } else if (options.edit_span.has_value()) {
    CheckLocality(original, variant, *options.edit_span, verdict);
  }
  return verdict;
}

Verdict CheckStatic(const SyntaxUnit& original,
                    const transforms::Variant& variant) {
  const codemodel::ParseResult parsed = codemodel::ParseFunction(variant.text);
  if (!parsed.ok()) {
    Verdict verdict;
    verdict.Fail("parse", "variant does not parse at offset " +
                              std::to_string(parsed.failure().position) +
                              ": " + parsed.failure().message);
    return verdict;
  }
  StaticCheckOptions options;
  options.category = variant.category;
  options.edit_span = variant.edit_span;
  return CheckStatic(original, parsed.unit(), options);
}

std::string_view CompilePrelude() {
  // Type-only headers, so that generated `int f();` declarations cannot
  // conflict with library prototypes.
  return "#include <stdbool.h>\n#include <stddef.h>\n#include <stdint.h>\n";
}

namespace {

Verdict CompileOne(std::string_view text, std::string_view compiler_cmd) {
  Verdict verdict;
  const codemodel::ParseResult parsed = codemodel::ParseFunction(text);
  if (!parsed.ok()) {
    verdict.Fail("parse", "does not parse at offset " +
                              std::to_string(parsed.failure().position));
    return verdict;
  }
  const SyntaxUnit& unit = parsed.unit();
  std::set<std::string> callees;
  const codemodel::ScopeMap scopes = codemodel::ResolveScopes(unit);
  for (const auto& occurrence : scopes.occurrences()) {
    if (occurrence.role != IdentifierRole::kUnresolved) continue;
    const codemodel::NodeId parent = unit.node(occurrence.node).parent;
    if (parent != codemodel::kNoNode &&
        unit.node(parent).kind == codemodel::NodeKind::kCallExpression &&
        unit.node(parent).child(0) == occurrence.node) {
      callees.insert(occurrence.name);
    }
  }
  std::string source(CompilePrelude());
  for (const std::string& callee : callees) source += "int " + callee + "();\n";
  source += text;
  source += "\n";

  internal::TempDir dir;
  const auto file = dir.path() / "unit.c";
  internal::WriteFile(file, source);
  std::vector<std::string> argv = internal::SplitCommand(compiler_cmd);
  argv.push_back("-fsyntax-only");
  argv.push_back(file.string());
  const internal::ProcessResult result =
      internal::RunProcess(argv, std::chrono::seconds(60));
  if (!result.started) {
    verdict.MarkUnknown("compile", "compiler unavailable: " + result.start_error);
  } else if (result.timed_out) {
    verdict.MarkUnknown("compile", "compiler timed out");
  } else if (result.exit_code != 0) {
    verdict.Fail("compile", result.err.empty() ? "compiler exited with " +
                                                     std::to_string(result.exit_code)
                                               : result.err);
  }
  return verdict;
}

}  // namespace

Verdict CheckCompile(std::string_view variant_text,
                     std::string_view compiler_cmd,
                     std::optional<std::string_view> original_text) {
  if (original_text.has_value()) {
    const Verdict baseline = CompileOne(*original_text, compiler_cmd);
    if (!baseline.preserved()) {
      Verdict verdict;
      const std::string detail =
          baseline.reasons().empty() ? "" : baseline.reasons().front().message;
      verdict.MarkUnknown("compile", "original does not compile: " + detail);
      return verdict;
    }
  }
  return CompileOne(variant_text, compiler_cmd);
}

}  // namespace semmut::verify
