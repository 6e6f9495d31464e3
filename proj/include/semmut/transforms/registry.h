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

#ifndef SEMMUT_TRANSFORMS_REGISTRY_H_
#define SEMMUT_TRANSFORMS_REGISTRY_H_

#include <memory>
#include <string_view>
#include <vector>

#include "semmut/transforms/operator.h"

namespace semmut::transforms {

// An ordered operator collection. The default registry holds the sixteen
// shipped operators T01..T16 in id order:
//
//   T01 rename local variable          T09 conditional assignment -> if/else
//   T02 rename parameter               T10 ++/-- statement -> compound assign
//   T03 rename recursive function      T11 split multi-declarator declaration
//   T04 for -> while                   T12 split declaration initializer
//   T05 while -> for                   T13 add unused variable
//   T06 switch -> if/else chain        T14 insert unexecuted code
//   T07 split `&&` if-condition        T15 add comment
//   T08 swap if/else bodies            T16 reformat whitespace
class Registry {
 public:
  Registry() = default;
  Registry(Registry&&) = default;
  Registry& operator=(Registry&&) = default;

  static const Registry& Default();

  void Add(std::unique_ptr<TransformOperator> op);

  const std::vector<std::unique_ptr<TransformOperator>>& operators() const {
    return operators_;
  }
  size_t size() const { return operators_.size(); }
  // nullptr when no operator has this id.
  const TransformOperator* Find(std::string_view id) const;

 private:
  std::vector<std::unique_ptr<TransformOperator>> operators_;
};

std::vector<const TransformOperator*> ListOperators();

}  // namespace semmut::transforms

#endif  // SEMMUT_TRANSFORMS_REGISTRY_H_
