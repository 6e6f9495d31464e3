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

#ifndef SEMMUT_VERIFY_DIFFERENTIAL_H_
#define SEMMUT_VERIFY_DIFFERENTIAL_H_

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "semmut/transforms/operator.h"
#include "semmut/verify/checks.h"
#include "semmut/verify/verdict.h"

namespace semmut::verify {

// An executable check: one function plus a deterministic main() that calls
// it over fixed inputs and prints the results.
struct DifferentialCase {
  std::string name;
  std::string function;
  std::string driver;
  // Recorded stdout of the original program; empty means not recorded.
  std::string expected_output;
};

// Reads `<name>.c`, `<name>.driver.c` and optional `<name>.expected` for
// every case in `directory`, sorted by name.
std::vector<DifferentialCase> LoadDifferentialCases(
    const std::filesystem::path& directory);

struct DifferentialOptions {
  std::string compiler_cmd = std::string(kDefaultCompilerCommand);
  std::chrono::milliseconds timeout{10000};
};

// True if `<compiler_cmd> --version` runs successfully.
bool CompilerAvailable(std::string_view compiler_cmd);

// Compiles and runs the case with its original function and with `op`
// applied at every site, comparing stdout byte for byte. Unknown when `op`
// has no site. Throws ToolchainError when the original cannot be built,
// crashes, or differs from its recorded output.
Verdict CheckDifferential(const DifferentialCase& test_case,
                          const transforms::TransformOperator& op,
                          const DifferentialOptions& options = {});

}  // namespace semmut::verify

#endif  // SEMMUT_VERIFY_DIFFERENTIAL_H_
