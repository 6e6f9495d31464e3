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

#include "semmut/cli/stub_predict.h"

namespace semmut::cli {

uint64_t Fnv1a64(std::string_view bytes, uint64_t hash) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

uint64_t Mix64(uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

double StubProbability(std::string_view model_id, std::string_view text,
                       uint64_t seed) {
  // Length prefixes keep (model, text) pairs unambiguous.
  uint64_t hash = Fnv1a64(std::to_string(model_id.size()) + ":");
  hash = Fnv1a64(model_id, hash);
  hash = Fnv1a64(std::to_string(text.size()) + ":", hash);
  hash = Fnv1a64(text, hash);
  return static_cast<double>(Mix64(hash ^ Mix64(seed)) >> 11) * 0x1.0p-53;
}

ensemble::Prediction StubPredict(const corpus::VariantRecord& variant,
                                 std::string_view model_id, uint64_t seed) {
  ensemble::Prediction prediction;
  prediction.parent_idx = variant.parent_idx;
  prediction.variant_id = variant.variant_id;
  prediction.transform_id = variant.transform_id;
  prediction.model_id = std::string(model_id);
  prediction.p1 = StubProbability(model_id, variant.func, seed);
  prediction.label = prediction.p1 > 0.5 ? 1 : 0;
  return prediction;
}

}  // namespace semmut::cli
