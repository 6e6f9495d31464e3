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

#include "semmut/verify/differential.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "semmut/codemodel/parser.h"
#include "src/verify/subprocess.h"

namespace semmut::verify {
namespace {

constexpr std::string_view kRunPrelude =
    "#include <stdbool.h>\n#include <stddef.h>\n#include <stdint.h>\n"
    "#include <stdio.h>\n#include <stdlib.h>\n#include <string.h>\n\n";
constexpr std::string_view kDriverSuffix = ".driver.c";

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream content;
  content << stream.rdbuf();
  return content.str();
}

std::string FirstLines(const std::string& text, size_t lines) {
  size_t pos = 0;
  for (size_t i = 0; i < lines && pos != std::string::npos; ++i) {
    pos = text.find('\n', pos == 0 ? 0 : pos + 1);
  }
  return pos == std::string::npos ? text : text.substr(0, pos);
}

struct RunOutcome {
  bool compiled = false;
  std::string compile_errors;
  internal::ProcessResult run;
};

RunOutcome BuildAndRun(const internal::TempDir& dir, const std::string& stem,
                       const std::string& program,
                       const DifferentialOptions& options) {
  RunOutcome outcome;
  const auto source = dir.path() / (stem + ".c");
  const auto binary = dir.path() / stem;
  internal::WriteFile(source, program);
  std::vector<std::string> argv = internal::SplitCommand(options.compiler_cmd);
  argv.insert(argv.end(), {"-o", binary.string(), source.string()});
  const internal::ProcessResult compile =
      internal::RunProcess(argv, std::chrono::seconds(120));
  if (!compile.started) {
    throw ToolchainError("compiler unavailable: " + compile.start_error);
  }
  if (compile.timed_out || compile.exit_code != 0) {
    outcome.compile_errors =
        compile.timed_out ? "compiler timed out" : FirstLines(compile.err, 3);
    return outcome;
  }
  outcome.compiled = true;
  outcome.run = internal::RunProcess({binary.string()}, options.timeout);
  return outcome;
}

std::string Program(std::string_view function, std::string_view rename_from,
                    std::string_view rename_to, std::string_view driver) {
  std::string program(kRunPrelude);
  program += function;
  program += "\n";
  if (rename_from != rename_to) {
    program += "#define " + std::string(rename_from) + " " +
               std::string(rename_to) + "\n";
  }
  program += driver;
  return program;
}

}  // namespace

std::vector<DifferentialCase> LoadDifferentialCases(
    const std::filesystem::path& directory) {
  std::vector<DifferentialCase> cases;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    const std::string file = entry.path().filename().string();
    if (file.size() <= kDriverSuffix.size() ||
        !file.ends_with(kDriverSuffix)) {
      continue;
    }
    DifferentialCase test_case;
    test_case.name = file.substr(0, file.size() - kDriverSuffix.size());
    test_case.function = ReadFile(directory / (test_case.name + ".c"));
    test_case.driver = ReadFile(entry.path());
    const auto expected = directory / (test_case.name + ".expected");
    if (std::filesystem::exists(expected)) {
      test_case.expected_output = ReadFile(expected);
    }
    cases.push_back(std::move(test_case));
  }
  std::sort(cases.begin(), cases.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return cases;
}

bool CompilerAvailable(std::string_view compiler_cmd) {
  std::vector<std::string> argv = internal::SplitCommand(compiler_cmd);
  if (argv.empty()) return false;
  const internal::ProcessResult result =
      internal::RunProcess({argv[0], "--version"}, std::chrono::seconds(30));
  return result.started && !result.timed_out && result.exit_code == 0;
}

Verdict CheckDifferential(const DifferentialCase& test_case,
                          const transforms::TransformOperator& op,
                          const DifferentialOptions& options) {
  const codemodel::ParseResult parsed =
      codemodel::ParseFunction(test_case.function);
  if (!parsed.ok()) {
    throw std::invalid_argument("case " + test_case.name +
                                " does not parse: " + parsed.failure().message);
  }
  const codemodel::SyntaxUnit& unit = parsed.unit();
  Verdict verdict;
  const std::vector<transforms::Site> sites = op.FindSites(unit);
  if (sites.empty()) {
    verdict.MarkUnknown("differential",
                        op.id() + " has no site in " + test_case.name);
    return verdict;
  }
  const std::string name(unit.NodeText(unit.FunctionName()));

  internal::TempDir dir;
  const RunOutcome baseline = BuildAndRun(
      dir, "original", Program(test_case.function, name, name, test_case.driver),
      options);
  if (!baseline.compiled) {
    throw ToolchainError(test_case.name + " does not compile: " +
                         baseline.compile_errors);
  }
  if (baseline.run.timed_out || baseline.run.exit_code != 0) {
    throw ToolchainError(test_case.name + " does not run cleanly");
  }
  if (!test_case.expected_output.empty() &&
      baseline.run.out != test_case.expected_output) {
    throw ToolchainError(test_case.name +
                         " output differs from its recorded output");
  }

  for (const transforms::Site& site : sites) {
    const std::string where = "site " + std::to_string(site.ordinal) + ": ";
    transforms::Variant variant;
    try {
      variant = transforms::Apply(op, unit, site, test_case.name);
    } catch (const transforms::RewriteFailure& failure) {
      verdict.Fail("rewrite", where + failure.what());
      continue;
    }
    const codemodel::ParseResult reparsed =
        codemodel::ParseFunction(variant.text);
    const std::string new_name(
        reparsed.unit().NodeText(reparsed.unit().FunctionName()));
    const RunOutcome outcome =
        BuildAndRun(dir, "variant" + std::to_string(site.ordinal),
                    Program(variant.text, name, new_name, test_case.driver),
                    options);
    if (!outcome.compiled) {
      verdict.Fail("compile", where + outcome.compile_errors);
    } else if (outcome.run.timed_out) {
      verdict.Fail("differential", where + "timeout");
    } else if (outcome.run.exit_code != 0) {
      verdict.Fail("differential",
                   where + "exit code " + std::to_string(outcome.run.exit_code));
    } else if (outcome.run.out != baseline.run.out) {
      verdict.Fail("differential", where + "output differs");
    }
  }
  return verdict;
}

}  // namespace semmut::verify
