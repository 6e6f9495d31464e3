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

#include "semmut/transforms/registry.h"

#include "src/transforms/support.h"

namespace semmut::transforms {
namespace {

Registry BuildDefault() {
  Registry registry;
  for (auto* group : {&internal::MakeRenamingOperators,
                      &internal::MakeControlFlowOperators,
                      &internal::MakeStatementOperators,
                      &internal::MakeInsertionOperators}) {
    for (auto& op : (*group)()) registry.Add(std::move(op));
  }
  registry.Add(internal::MakeReformatOperator());
  return registry;
}

}  // namespace

const Registry& Registry::Default() {
  static const Registry* registry = new Registry(BuildDefault());
  return *registry;
}

void Registry::Add(std::unique_ptr<TransformOperator> op) {
  if (Find(op->id()) != nullptr) {
    throw std::invalid_argument("duplicate operator id " + op->id());
  }
  operators_.push_back(std::move(op));
}

const TransformOperator* Registry::Find(std::string_view id) const {
  for (const auto& op : operators_) {
    if (op->id() == id) return op.get();
  }
  return nullptr;
}

std::vector<const TransformOperator*> ListOperators() {
  std::vector<const TransformOperator*> result;
  for (const auto& op : Registry::Default().operators()) {
    result.push_back(op.get());
  }
  return result;
}

}  // namespace semmut::transforms
