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

#include "semmut/cli/config.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

namespace semmut::cli {
namespace {

template <typename T>
T ParseNumber(const std::string& key, const std::string& value) {
  T number{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, number);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("bad value for " + key + ": " + value);
  }
  return number;
}

void Set(Config& config, const std::string& key, const std::string& value) {
  if (key == "max_sites_per_op") {
    config.max_sites_per_op = ParseNumber<uint32_t>(key, value);
    if (config.max_sites_per_op == 0) throw ConfigError("max_sites_per_op must be positive");
  } else if (key == "compiler_cmd") {
    if (value.empty()) throw ConfigError("compiler_cmd is empty");
    config.compiler_cmd = value;
  } else if (key == "seed") {
    config.seed = ParseNumber<uint64_t>(key, value);
  } else if (key == "tie_rule") {
    if (value == "ties0") {
      config.tie_rule = ensemble::TieRule::kTies0;
    } else if (value == "ties1") {
      config.tie_rule = ensemble::TieRule::kTies1;
    } else {
      throw ConfigError("tie_rule must be ties0 or ties1, got " + value);
    }
  } else if (key == "encoding") {
    if (value == "labels") {
      config.encoding = ensemble::Encoding::kLabels;
    } else if (value == "probability") {
      config.encoding = ensemble::Encoding::kProbability;
    } else {
      throw ConfigError("encoding must be labels or probability, got " + value);
    }
  } else if (key == "workers") {
    config.workers = ParseNumber<unsigned>(key, value);
  } else if (key == "timeout_ms") {
    config.timeout_ms = ParseNumber<uint32_t>(key, value);
  } else if (key == "microcorpus_dir") {
    config.microcorpus_dir = value;
  } else {
    throw ConfigError("unknown config key " + key);
  }
}

}  // namespace

void ParseConfig(std::istream& in, Config& config) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::Error& e) {
    throw ConfigError(e.what());
  }
  for (const CLI::ConfigItem& item : items) {
    if (!item.parents.empty()) {
      throw ConfigError("sections are not supported: [" + item.parents.front() + "]");
    }
    if (item.inputs.size() != 1) {
      throw ConfigError("expected one value for " + item.name);
    }
    Set(config, item.name, item.inputs.front());
  }
}

void LoadConfig(const std::string& path, Config& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  ParseConfig(in, config);
}

void ApplyEnvironment(Config& config) {
  const char* cc = std::getenv("SEMMUT_CC");
  if (cc != nullptr && *cc != '\0') config.compiler_cmd = cc;
}

std::string ToConfigText(const Config& config) {
  std::ostringstream out;
  out << "max_sites_per_op = " << config.max_sites_per_op << "\n"
      << "compiler_cmd = \"" << config.compiler_cmd << "\"\n"
      << "seed = " << config.seed << "\n"
      << "tie_rule = \""
      << (config.tie_rule == ensemble::TieRule::kTies1 ? "ties1" : "ties0")
      << "\"\n"
      << "encoding = \"" << ensemble::EncodingName(config.encoding) << "\"\n"
      << "workers = " << config.workers << "\n"
      << "timeout_ms = " << config.timeout_ms << "\n"
      << "microcorpus_dir = \"" << config.microcorpus_dir << "\"\n";
  return out.str();
}

}  // namespace semmut::cli
