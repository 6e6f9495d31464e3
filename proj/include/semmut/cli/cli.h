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

#ifndef SEMMUT_CLI_CLI_H_
#define SEMMUT_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace semmut::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
// Usage, I/O or schema error.
inline constexpr int kExitError = 1;
// The command ran but produced nothing usable, e.g. every record skipped.
inline constexpr int kExitEmpty = 2;
// Verification found a Broken variant.
inline constexpr int kExitBroken = 3;

// Runs `semmut <args...>`; `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace semmut::cli

#endif  // SEMMUT_CLI_CLI_H_
