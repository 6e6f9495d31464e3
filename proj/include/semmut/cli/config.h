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

#ifndef SEMMUT_CLI_CONFIG_H_
#define SEMMUT_CLI_CONFIG_H_

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>

#include "semmut/ensemble/aggregate.h"

namespace semmut::cli {

// Pipeline settings. Sources in increasing precedence: defaults, config
// file, the SEMMUT_CC environment variable (compiler_cmd only), flags.
struct Config {
  uint32_t max_sites_per_op = 4;
  std::string compiler_cmd = "cc -std=c11 -O0";
  uint64_t seed = 42;
  // Used when a strategy is given as plain "majority" or "weighted".
  ensemble::TieRule tie_rule = ensemble::TieRule::kTies0;
  ensemble::Encoding encoding = ensemble::Encoding::kLabels;
  // Worker threads for corpus transformation; 0 picks the core count.
  unsigned workers = 0;
  uint32_t timeout_ms = 10000;
  std::string microcorpus_dir;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads flat `key = value` lines; `#` starts a comment and string values
// may be quoted. Keys are the Config field names. Sections, unknown keys
// and bad values throw ConfigError.
void ParseConfig(std::istream& in, Config& config);
void LoadConfig(const std::string& path, Config& config);

// Applies SEMMUT_CC when set and non-empty.
void ApplyEnvironment(Config& config);

std::string ToConfigText(const Config& config);

}  // namespace semmut::cli

#endif  // SEMMUT_CLI_CONFIG_H_
