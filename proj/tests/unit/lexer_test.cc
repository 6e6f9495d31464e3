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

#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace semmut::codemodel {
namespace {

std::vector<std::string> Spellings(const std::string& text) {
  const LexResult result = Lex(text);
  std::vector<std::string> out;
  for (const Token& token : result.tokens) {
    out.emplace_back(text.substr(token.span.begin, token.span.size()));
  }
  return out;
}

TEST(LexerTest, SplitsPunctuatorsGreedily) {
  EXPECT_EQ((std::vector<std::string>{"a", "<<=", "b", "->", "c", "...", "++"}),
            Spellings("a<<=b->c...++"));
}

TEST(LexerTest, CommentsAndDirectivesAreTrivia) {
  const std::string text =
      "int f(void) {\n#ifdef X\n  return 1; // one\n#endif\n  /* two */ }";
  const LexResult result = Lex(text);
  ASSERT_FALSE(result.error.has_value());
  ASSERT_EQ(4u, result.trivia.size());
  EXPECT_EQ(Trivia::Kind::kDirective, result.trivia[0].kind);
  EXPECT_EQ(Trivia::Kind::kLineComment, result.trivia[1].kind);
  EXPECT_EQ(Trivia::Kind::kDirective, result.trivia[2].kind);
  EXPECT_EQ(Trivia::Kind::kBlockComment, result.trivia[3].kind);
  for (const Token& token : result.tokens) {
    EXPECT_NE('#', text[token.span.begin]);
  }
}

TEST(LexerTest, DirectiveContinuationLines) {
  const std::string text = "#define A(x) \\\n  ((x) + 1)\nint";
  const LexResult result = Lex(text);
  ASSERT_EQ(1u, result.trivia.size());
  EXPECT_EQ(text.find("int"), result.tokens.front().span.begin);
}

TEST(LexerTest, LiteralsWithPrefixesAndEscapes) {
  EXPECT_EQ((std::vector<std::string>{"L\"a\\\"b\"", "u8'x'", "0x1fULL", "1.5e-3f"}),
            Spellings("L\"a\\\"b\" u8'x' 0x1fULL 1.5e-3f"));
  EXPECT_EQ(TokenKind::kString, Lex("\"s\"").tokens[0].kind);
  EXPECT_EQ(TokenKind::kChar, Lex("'c'").tokens[0].kind);
  EXPECT_EQ(TokenKind::kNumber, Lex(".5").tokens[0].kind);
}

TEST(LexerTest, KeywordsAreClassified) {
  const LexResult result = Lex("while __asm__ whilst");
  EXPECT_EQ(TokenKind::kKeyword, result.tokens[0].kind);
  EXPECT_EQ(TokenKind::kKeyword, result.tokens[1].kind);
  EXPECT_EQ(TokenKind::kIdentifier, result.tokens[2].kind);
}

TEST(LexerTest, UnterminatedCommentIsAnError) {
  const LexResult result = Lex("int x; /* open");
  ASSERT_TRUE(result.error.has_value());
  EXPECT_EQ(7u, result.error->position);
}

TEST(LexerTest, InvalidUtf8IsLocated) {
  EXPECT_FALSE(FindInvalidUtf8("caf\xc3\xa9").has_value());
  const std::optional<uint32_t> bad = FindInvalidUtf8("ab\xff");
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(2u, *bad);
  EXPECT_TRUE(FindInvalidUtf8("\xc3").has_value());
}

}  // namespace
}  // namespace semmut::codemodel
