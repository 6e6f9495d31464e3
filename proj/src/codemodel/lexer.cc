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

#include "semmut/codemodel/lexer.h"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace semmut::codemodel {
namespace {

const std::unordered_set<std::string_view>& Keywords() {
  static const std::unordered_set<std::string_view> kKeywords = {
      "auto",          "break",         "case",          "char",
      "const",         "continue",      "default",       "do",
      "double",        "else",          "enum",          "extern",
      "float",         "for",           "goto",          "if",
      "inline",        "int",           "long",          "register",
      "restrict",      "return",        "short",         "signed",
      "sizeof",        "static",        "struct",        "switch",
      "typedef",       "union",         "unsigned",      "void",
      "volatile",      "while",         "_Alignas",      "_Alignof",
      "_Atomic",       "_Bool",         "_Complex",      "_Generic",
      "_Imaginary",    "_Noreturn",     "_Static_assert", "_Thread_local",
      "asm",           "__asm",         "__asm__",       "__attribute__",
      "__attribute",   "__declspec",    "__inline",      "__inline__",
      "__restrict",    "__restrict__",  "__volatile__",  "__volatile",
      "__const",       "__const__",     "__signed__",    "__signed",
      "__extension__", "typeof",        "__typeof__",    "__typeof",
      "__alignof__",   "__alignof",     "__int128",      "__thread",
      "__builtin_va_arg", "__builtin_offsetof", "__label__",
  };
  return kKeywords;
}

// Longest-first so that greedy matching picks multi-character operators.
constexpr std::array<std::string_view, 48> kPunctuators = {
    "...", "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",  "||",  "*=",  "/=", "%=", "+=", "-=", "&=", "^=", "|=", "##", "[",
    "]",   "(",   ")",   "{",  "}",  ".",  "&",  "*",  "+",  "-",  "~",  "!",
    "/",   "%",   "<",   ">",  "^",  "|",  "?",  ":",  ";",  "=",  ",",  "#",
};

bool IsIdentStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool IsIdentContinue(unsigned char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9');
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  LexResult Run() {
    LexResult result;
    while (pos_ < text_.size()) {
      const unsigned char c = text_[pos_];
      if (c == '\n') {
        at_line_start_ = true;
        ++pos_;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        ++pos_;
        continue;
      }
      if (c == '\\' && NextIsNewline(pos_ + 1)) {
        pos_ = SkipNewline(pos_ + 1);
        continue;
      }
      const uint32_t start = static_cast<uint32_t>(pos_);
      if (c == '#' && at_line_start_) {
        LexDirective();
        result.trivia.push_back(
            {Trivia::Kind::kDirective, {start, static_cast<uint32_t>(pos_)}});
        continue;
      }
      at_line_start_ = false;
      if (c == '/' && Peek(1) == '/') {
        LexLineComment();
        result.trivia.push_back(
            {Trivia::Kind::kLineComment, {start, static_cast<uint32_t>(pos_)}});
        continue;
      }
      if (c == '/' && Peek(1) == '*') {
        if (!LexBlockComment()) {
          result.error = LexError{start, "unterminated block comment"};
          return result;
        }
        result.trivia.push_back({Trivia::Kind::kBlockComment,
                                 {start, static_cast<uint32_t>(pos_)}});
        continue;
      }
      std::optional<TokenKind> kind = LexToken();
      if (!kind) {
        result.error = LexError{start, error_};
        return result;
      }
      result.tokens.push_back({*kind, {start, static_cast<uint32_t>(pos_)}});
    }
    return result;
  }

 private:
  char Peek(size_t offset) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }

  bool NextIsNewline(size_t at) const {
    if (at < text_.size() && text_[at] == '\n') return true;
    return at + 1 < text_.size() && text_[at] == '\r' && text_[at + 1] == '\n';
  }

  size_t SkipNewline(size_t at) const {
    return text_[at] == '\r' ? at + 2 : at + 1;
  }

  void LexDirective() {
    // Runs to the end of the line, honouring backslash continuations and
    // block comments that span lines.
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\\' && NextIsNewline(pos_ + 1)) {
        pos_ = SkipNewline(pos_ + 1);
        continue;
      }
      if (c == '/' && Peek(1) == '*') {
        if (!LexBlockComment()) pos_ = text_.size();
        continue;
      }
      if (c == '\n') break;
      ++pos_;
    }
    // Trailing carriage return belongs to the line break, not the directive.
    while (pos_ > 0 && text_[pos_ - 1] == '\r') --pos_;
    at_line_start_ = false;
  }

  void LexLineComment() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '\\' && NextIsNewline(pos_ + 1)) {
        pos_ = SkipNewline(pos_ + 1);
        continue;
      }
      if (text_[pos_] == '\n') break;
      ++pos_;
    }
    while (text_[pos_ - 1] == '\r') --pos_;
  }

  bool LexBlockComment() {
    const size_t close = text_.find("*/", pos_ + 2);
    if (close == std::string_view::npos) return false;
    pos_ = close + 2;
    return true;
  }

  bool LexQuoted(char quote) {
    ++pos_;  // opening quote
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\\') {
        pos_ += 2;
        continue;
      }
      if (c == '\n') return false;
      ++pos_;
      if (c == quote) return true;
    }
    return false;
  }

  std::optional<TokenKind> LexToken() {
    const unsigned char c = text_[pos_];
    // Encoding prefixes: L"..", u8"..", u'..', U"..".
    for (std::string_view prefix : {"u8", "L", "u", "U"}) {
      if (text_.substr(pos_, prefix.size()) == prefix) {
        const char q = Peek(prefix.size());
        if (q == '"' || q == '\'') {
          pos_ += prefix.size();
          return LexQuotedToken(q);
        }
      }
    }
    if (c == '"' || c == '\'') return LexQuotedToken(static_cast<char>(c));
    if (IsIdentStart(c)) {
      const size_t start = pos_;
      while (pos_ < text_.size() &&
             IsIdentContinue(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      return IsKeyword(text_.substr(start, pos_ - start))
                 ? TokenKind::kKeyword
                 : TokenKind::kIdentifier;
    }
    if (IsDigit(c) ||
        (c == '.' && IsDigit(static_cast<unsigned char>(Peek(1))))) {
      LexNumber();
      return TokenKind::kNumber;
    }
    for (std::string_view punct : kPunctuators) {
      if (text_.substr(pos_, punct.size()) == punct) {
        pos_ += punct.size();
        return TokenKind::kPunctuator;
      }
    }
    error_ = "unexpected character";
    return std::nullopt;
  }

  std::optional<TokenKind> LexQuotedToken(char quote) {
    if (!LexQuoted(quote)) {
      error_ = quote == '"' ? "unterminated string literal"
                            : "unterminated character literal";
      return std::nullopt;
    }
    return quote == '"' ? TokenKind::kString : TokenKind::kChar;
  }

  // pp-number: digits, letters, underscores, dots and signed exponents.
  void LexNumber() {
    ++pos_;
    while (pos_ < text_.size()) {
      const unsigned char c = text_[pos_];
      if ((c == '+' || c == '-') && pos_ > 0) {
        const char prev = text_[pos_ - 1];
        if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
          ++pos_;
          continue;
        }
        break;
      }
      if (IsIdentContinue(c) || c == '.') {
        ++pos_;
        continue;
      }
      break;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  bool at_line_start_ = true;
  std::string error_;
};

}  // namespace

bool IsKeyword(std::string_view word) { return Keywords().contains(word); }

std::optional<uint32_t> FindInvalidUtf8(std::string_view text) {
  size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = text[i];
    size_t length = 0;
    uint32_t min_code = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      length = 2;
      min_code = 0x80;
    } else if ((c & 0xF0) == 0xE0) {
      length = 3;
      min_code = 0x800;
    } else if ((c & 0xF8) == 0xF0) {
      length = 4;
      min_code = 0x10000;
    } else {
      return static_cast<uint32_t>(i);
    }
    if (i + length > text.size()) return static_cast<uint32_t>(i);
    uint32_t code = c & (0xFF >> (length + 1));
    for (size_t k = 1; k < length; ++k) {
      const unsigned char cc = text[i + k];
      if ((cc & 0xC0) != 0x80) return static_cast<uint32_t>(i);
      code = (code << 6) | (cc & 0x3F);
    }
    if (code < min_code || code > 0x10FFFF ||
        (code >= 0xD800 && code <= 0xDFFF)) {
      return static_cast<uint32_t>(i);
    }
    i += length;
  }
  return std::nullopt;
}

LexResult Lex(std::string_view text) { return Lexer(text).Run(); }

}  // namespace semmut::codemodel
