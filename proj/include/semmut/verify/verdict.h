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

#ifndef SEMMUT_VERIFY_VERDICT_H_
#define SEMMUT_VERIFY_VERDICT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semmut::verify {

enum class Status { kPreserved, kBroken, kUnknown };

std::string_view StatusName(Status status);
std::optional<Status> ParseStatus(std::string_view name);

struct Reason {
  std::string check;
  std::string message;

  friend bool operator==(const Reason&, const Reason&) = default;
};

// Outcome of one or more preservation checks. Broken dominates Unknown,
// which dominates Preserved.
class Verdict {
 public:
  Status status() const { return status_; }
  const std::vector<Reason>& reasons() const { return reasons_; }

  bool preserved() const { return status_ == Status::kPreserved; }
  bool broken() const { return status_ == Status::kBroken; }

  void Fail(std::string check, std::string message);
  void MarkUnknown(std::string check, std::string message);
  void Merge(const Verdict& other);

  // One-line JSON object {"variant_id", "status", "reasons": [...]}.
  std::string ToJsonLine(std::string_view variant_id) const;

 private:
  Status status_ = Status::kPreserved;
  std::vector<Reason> reasons_;
};

// The toolchain could not establish a baseline: the original program fails
// to compile or run, or disagrees with its recorded output.
class ToolchainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semmut::verify

#endif  // SEMMUT_VERIFY_VERDICT_H_
