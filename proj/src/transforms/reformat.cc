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

#include "semmut/transforms/reformat.h"

#include <string>
#include <vector>

#include "src/transforms/support.h"

namespace semmut::transforms {
namespace {

using codemodel::Span;
using codemodel::SyntaxUnit;
using codemodel::Trivia;

struct Piece {
  Span span;
  bool is_token = false;
  Trivia::Kind trivia_kind = Trivia::Kind::kBlockComment;
};

std::vector<Piece> Pieces(const SyntaxUnit& unit) {
  std::vector<Piece> pieces;
  const auto& tokens = unit.tokens();
  const auto& trivia = unit.trivia();
  size_t t = 0;
  size_t v = 0;
  while (t < tokens.size() || v < trivia.size()) {
    if (v == trivia.size() ||
        (t < tokens.size() && tokens[t].span.begin < trivia[v].span.begin)) {
      pieces.push_back({tokens[t++].span, true});
    } else {
      pieces.push_back({trivia[v].span, false, trivia[v].kind});
      ++v;
    }
  }
  return pieces;
}

class Printer {
 public:
  explicit Printer(bool expanded) : expanded_(expanded) {}

  void Newline() {
    if (!at_line_start_) {
      out_ += '\n';
      at_line_start_ = true;
    }
  }

  // Directives always start in column 0.
  void Directive(std::string_view text) {
    Newline();
    out_ += text;
    out_ += '\n';
  }

  void Word(std::string_view text) {
    if (at_line_start_) {
      if (expanded_) out_.append(4 * static_cast<size_t>(indent_), ' ');
    } else {
      out_ += ' ';
    }
    out_ += text;
    at_line_start_ = false;
  }

  void Indent(int delta) { indent_ = std::max(0, indent_ + delta); }

  std::string Finish() {
    while (!out_.empty() && out_.back() == '\n') out_.pop_back();
    return std::move(out_);
  }

 private:
  bool expanded_;
  int indent_ = 0;
  bool at_line_start_ = true;
  std::string out_;
};

}  // namespace

std::string Reformat(const SyntaxUnit& unit, LayoutStyle style) {
  const bool expanded = style == LayoutStyle::kExpanded;
  const std::vector<Piece> pieces = Pieces(unit);
  Printer printer(expanded);
  int paren_depth = 0;
  for (size_t i = 0; i < pieces.size(); ++i) {
    const Piece& piece = pieces[i];
    const std::string_view text =
        unit.text().substr(piece.span.begin, piece.span.size());
    if (!piece.is_token) {
      if (piece.trivia_kind == Trivia::Kind::kDirective) {
        printer.Directive(text);
        continue;
      }
      printer.Word(text);
      if (piece.trivia_kind != Trivia::Kind::kBlockComment) printer.Newline();
      continue;
    }
    if (text == "(" || text == "[") ++paren_depth;
    if (text == ")" || text == "]") --paren_depth;
    if (!expanded) {
      printer.Word(text);
      continue;
    }
    if (text == "}") {
      printer.Indent(-1);
      printer.Newline();
    }
    printer.Word(text);
    if (text == "{") {
      printer.Indent(1);
      printer.Newline();
    } else if (text == ";" && paren_depth == 0) {
      printer.Newline();
    } else if (text == "}") {
      std::string_view next;
      for (size_t j = i + 1; j < pieces.size(); ++j) {
        if (pieces[j].is_token) {
          next = unit.text().substr(pieces[j].span.begin,
                                    pieces[j].span.size());
          break;
        }
      }
      if (next != "else" && next != "while" && next != ";" && next != "," &&
          next != ")") {
        printer.Newline();
      }
    }
  }
  return printer.Finish();
}

namespace internal {
namespace {

class ReformatWhitespace : public TransformOperator {
 public:
  using TransformOperator::TransformOperator;

  std::vector<codemodel::TextEdit> Rewrite(const SyntaxUnit& unit,
                                           NodeId) const override {
    std::string text = Reformat(unit, LayoutStyle::kExpanded);
    if (text == unit.text()) text = Reformat(unit, LayoutStyle::kCollapsed);
    const uint32_t size = static_cast<uint32_t>(unit.text().size());
    return {{{0, size}, std::move(text)}};
  }

 protected:
  std::vector<NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    return {unit.root()};
  }
};

}  // namespace

std::unique_ptr<TransformOperator> MakeReformatOperator() {
  return std::make_unique<ReformatWhitespace>(
      OperatorInfo{"T16_reformat_whitespace", Category::kFormatting,
                   "Re-layout the function's whitespace and indentation",
                   "LimitsOfML4Vuln"});
}

}  // namespace internal
}  // namespace semmut::transforms
