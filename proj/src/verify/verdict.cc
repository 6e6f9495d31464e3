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

#include "semmut/verify/verdict.h"

#include "json.hpp"

namespace semmut::verify {

std::string_view StatusName(Status status) {
  switch (status) {
    case Status::kPreserved:
      return "Preserved";
    case Status::kBroken:
      return "Broken";
    case Status::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

std::optional<Status> ParseStatus(std::string_view name) {
  for (Status status : {Status::kPreserved, Status::kBroken, Status::kUnknown}) {
    if (StatusName(status) == name) return status;
  }
  return std::nullopt;
}

void Verdict::Fail(std::string check, std::string message) {
  status_ = Status::kBroken;
  reasons_.push_back({std::move(check), std::move(message)});
}

void Verdict::MarkUnknown(std::string check, std::string message) {
  if (status_ == Status::kPreserved) status_ = Status::kUnknown;
  reasons_.push_back({std::move(check), std::move(message)});
}

void Verdict::Merge(const Verdict& other) {
  if (other.status_ == Status::kBroken ||
      (other.status_ == Status::kUnknown && status_ == Status::kPreserved)) {
    status_ = other.status_;
  }
  reasons_.insert(reasons_.end(), other.reasons_.begin(), other.reasons_.end());
}

std::string Verdict::ToJsonLine(std::string_view variant_id) const {
  nlohmann::ordered_json reasons = nlohmann::ordered_json::array();
  for (const Reason& reason : reasons_) {
    reasons.push_back({{"check", reason.check}, {"message", reason.message}});
  }
  nlohmann::ordered_json line = {{"variant_id", variant_id},
                                 {"status", StatusName(status_)},
                                 {"reasons", std::move(reasons)}};
  return line.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace semmut::verify
