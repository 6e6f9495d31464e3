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

#include "semmut/verify/gate.h"

#include <stdexcept>

#include "semmut/codemodel/parser.h"
#include "semmut/verify/checks.h"

namespace semmut::verify {

GateSummary RunPreservationGate(const std::vector<DifferentialCase>& cases,
                                const transforms::Registry& registry,
                                const GateOptions& options) {
  GateSummary summary;
  summary.differential = !options.static_only &&
                         CompilerAvailable(options.differential.compiler_cmd);
  for (const DifferentialCase& test_case : cases) {
    const codemodel::ParseResult parsed =
        codemodel::ParseFunction(test_case.function);
    if (!parsed.ok()) {
      throw std::invalid_argument("case " + test_case.name +
                                  " does not parse: " + parsed.failure().message);
    }
    for (const auto& op : registry.operators()) {
      const std::vector<transforms::Site> sites = op->FindSites(parsed.unit());
      if (sites.empty()) {
        ++summary.inapplicable;
        continue;
      }
      GateEntry entry{test_case.name, op->id(), sites.size(), Verdict()};
      for (const transforms::Site& site : sites) {
        try {
          const transforms::Variant variant =
              transforms::Apply(*op, parsed.unit(), site, test_case.name);
          entry.verdict.Merge(CheckStatic(parsed.unit(), variant));
        } catch (const transforms::RewriteFailure& failure) {
          entry.verdict.Fail("rewrite", failure.what());
        }
      }
      if (summary.differential) {
        try {
          entry.verdict.Merge(
              CheckDifferential(test_case, *op, options.differential));
        } catch (const ToolchainError& error) {
          entry.verdict.MarkUnknown("differential", error.what());
        }
      }
      switch (entry.verdict.status()) {
        case Status::kPreserved: ++summary.preserved; break;
        case Status::kBroken: ++summary.broken; break;
        case Status::kUnknown: ++summary.unknown; break;
      }
      summary.entries.push_back(std::move(entry));
    }
  }
  return summary;
}

}  // namespace semmut::verify
