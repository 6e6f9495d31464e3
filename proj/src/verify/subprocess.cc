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

#include "src/verify/subprocess.h"

#include <stdlib.h>

#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <thread>

#include <boost/asio/io_context.hpp>
#include <boost/process.hpp>

namespace semmut::verify::internal {

namespace bp = boost::process;

ProcessResult RunProcess(const std::vector<std::string>& argv,
                         std::chrono::milliseconds timeout) {
  ProcessResult result;
  if (argv.empty()) {
    result.start_error = "empty command";
    return result;
  }
  boost::filesystem::path executable = argv[0];
  if (argv[0].find('/') == std::string::npos) {
    executable = bp::search_path(argv[0]);
    if (executable.empty()) {
      result.start_error = argv[0] + ": not found on PATH";
      return result;
    }
  }
  const std::vector<std::string> args(argv.begin() + 1, argv.end());

  boost::asio::io_context io;
  std::future<std::string> out;
  std::future<std::string> err;
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  try {
    bp::child child(executable, bp::args(args), bp::std_in.close(),
                    bp::std_out > out, bp::std_err > err, io);
    result.started = true;
    io.run_until(deadline);
    while (child.running() && std::chrono::steady_clock::now() < deadline) {
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    if (child.running()) {
      result.timed_out = true;
      child.terminate();
      return result;
    }
    child.wait();
    io.run();
    result.exit_code = child.exit_code();
    result.out = out.get();
    result.err = err.get();
  } catch (const std::exception& e) {
    if (!result.started) result.start_error = e.what();
  }
  return result;
}

std::vector<std::string> SplitCommand(std::string_view command) {
  std::istringstream stream{std::string(command)};
  std::vector<std::string> words;
  for (std::string word; stream >> word;) words.push_back(word);
  return words;
}

TempDir::TempDir() {
  std::string pattern =
      (std::filesystem::temp_directory_path() / "semmut-XXXXXX").string();
  if (mkdtemp(pattern.data()) == nullptr) {
    throw std::system_error(errno, std::generic_category(), "mkdtemp");
  }
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ignored;
  std::filesystem::remove_all(path_, ignored);
}

void WriteFile(const std::filesystem::path& path, std::string_view content) {
  std::ofstream stream(path, std::ios::binary);
  stream.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!stream) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace semmut::verify::internal
