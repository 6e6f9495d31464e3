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

#ifndef SEMMUT_VERIFY_GATE_H_
#define SEMMUT_VERIFY_GATE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "semmut/transforms/registry.h"
#include "semmut/verify/differential.h"
#include "semmut/verify/verdict.h"

namespace semmut::verify {

// Verdict for one operator on one case, over all of its sites.
struct GateEntry {
  std::string case_name;
  std::string operator_id;
  size_t sites = 0;
  Verdict verdict;
};

struct GateSummary {
  // Applicable (case, operator) pairs only, in case then registry order.
  std::vector<GateEntry> entries;
  size_t inapplicable = 0;
  size_t preserved = 0;
  size_t broken = 0;
  size_t unknown = 0;
  // False when the run fell back to static checks only.
  bool differential = false;

  bool passed() const { return broken == 0 && unknown == 0; }
};

struct GateOptions {
  DifferentialOptions differential;
  // Skip compilation and execution even if a compiler is available.
  bool static_only = false;
};

// Applies every operator of `registry` at every site of every case and
// checks each variant statically and, when a compiler is available,
// differentially. A case whose original cannot be built or run makes the
// affected entries Unknown.
GateSummary RunPreservationGate(const std::vector<DifferentialCase>& cases,
                                const transforms::Registry& registry,
                                const GateOptions& options = {});

}  // namespace semmut::verify

#endif  // SEMMUT_VERIFY_GATE_H_
