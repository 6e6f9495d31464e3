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

#ifndef SEMMUT_VERIFY_SUBPROCESS_H_
#define SEMMUT_VERIFY_SUBPROCESS_H_

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace semmut::verify::internal {

struct ProcessResult {
  // False when the executable could not be found or started.
  bool started = false;
  std::string start_error;
  bool timed_out = false;
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs argv[0] (searched on PATH unless it contains a slash) with no shell
// and closed stdin; the process is killed after `timeout`.
ProcessResult RunProcess(const std::vector<std::string>& argv,
                         std::chrono::milliseconds timeout);

// Whitespace-separated words of a command template such as "cc -O0".
std::vector<std::string> SplitCommand(std::string_view command);

// A fresh directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void WriteFile(const std::filesystem::path& path, std::string_view content);

}  // namespace semmut::verify::internal

#endif  // SEMMUT_VERIFY_SUBPROCESS_H_
