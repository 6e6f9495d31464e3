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

#include "semmut/codemodel/render.h"

#include <algorithm>

namespace semmut::codemodel {

std::string Render(std::string_view text, std::vector<TextEdit> edits) {
  std::sort(edits.begin(), edits.end(),
            [](const TextEdit& a, const TextEdit& b) {
              return a.span.begin != b.span.begin ? a.span.begin < b.span.begin
                                                  : a.span.end < b.span.end;
            });
  std::string out;
  out.reserve(text.size());
  uint32_t cursor = 0;
  for (size_t i = 0; i < edits.size(); ++i) {
    const Span span = edits[i].span;
    if (span.begin > span.end || span.end > text.size()) {
      throw std::out_of_range("edit span outside text");
    }
    if (i > 0) {
      const Span prev = edits[i - 1].span;
      if (span.begin < prev.end || (span.begin == prev.begin)) {
        throw OverlapError("overlapping edits at offset " +
                           std::to_string(span.begin));
      }
    }
    out.append(text.substr(cursor, span.begin - cursor));
    out.append(edits[i].replacement);
    cursor = span.end;
  }
  out.append(text.substr(cursor));
  return out;
}

Span EditHull(const std::vector<TextEdit>& edits) {
  if (edits.empty()) return {};
  Span hull = edits.front().span;
  for (const TextEdit& edit : edits) {
    hull.begin = std::min(hull.begin, edit.span.begin);
    hull.end = std::max(hull.end, edit.span.end);
  }
  return hull;
}

}  // namespace semmut::codemodel
