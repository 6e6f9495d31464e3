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

#ifndef SEMMUT_CLI_STUB_PREDICT_H_
#define SEMMUT_CLI_STUB_PREDICT_H_

#include <cstdint>
#include <string_view>

#include "semmut/corpus/transform.h"
#include "semmut/ensemble/predictions.h"

namespace semmut::cli {

// 64-bit FNV-1a.
uint64_t Fnv1a64(std::string_view bytes, uint64_t hash = 0xcbf29ce484222325ULL);

// splitmix64 output function.
uint64_t Mix64(uint64_t value);

// Deterministic stand-in for a classifier: a hash of (model id, exact
// text, seed) mapped to [0, 1). Textually different but equivalent
// functions generally get different values.
double StubProbability(std::string_view model_id, std::string_view text,
                       uint64_t seed);

// label = [p1 > 0.5].
ensemble::Prediction StubPredict(const corpus::VariantRecord& variant,
                                 std::string_view model_id, uint64_t seed);

}  // namespace semmut::cli

#endif  // SEMMUT_CLI_STUB_PREDICT_H_
