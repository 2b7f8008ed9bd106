// Copyright 2026 The Normpipe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "normpipe/tokenizer.h"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "normpipe/lexicon.h"
#include "normpipe/ner.h"
#include "test_util.h"

namespace normpipe {
namespace {

std::vector<std::string> Surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

TEST(SplitSentencesTest, SplitsOnTerminatorsFollowedBySpace) {
  EXPECT_EQ(SplitSentences("hi there. how r u?? fine!"),
            (std::vector<std::string>{"hi there.", "how r u??", "fine!"}));
}

TEST(SplitSentencesTest, KeepsAbbreviationDotsInsideWords) {
  EXPECT_EQ(SplitSentences("see u at 5.30 ok"),
            (std::vector<std::string>{"see u at 5.30 ok"}));
}

TEST(SplitSentencesTest, EmptyAndBlank) {
  EXPECT_TRUE(SplitSentences("").empty());
  EXPECT_TRUE(SplitSentences("   \n ").empty());
}

TEST(TokenizeTest, SplitsEdgePunctuation) {
  const auto tokens = Tokenize("i m wit her.");
  EXPECT_EQ(Surfaces(tokens),
            (std::vector<std::string>{"i", "m", "wit", "her", "."}));
  EXPECT_EQ(tokens[4].kind, TokenKind::kPunctuation);
  EXPECT_EQ(tokens[3].span, (Span{8, 11}));
}

TEST(TokenizeTest, KeepsInnerApostrophesAndSymbols) {
  EXPECT_EQ(Surfaces(Tokenize("\"we're\" gr8, (2morrow)!")),
            (std::vector<std::string>{"\"", "we're", "\"", "gr8", ",", "(",
                                      "2morrow", ")!"}));
}

TEST(TokenizeTest, PunctuationOnlyChunk) {
  const auto tokens = Tokenize("wait ... what");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].kind, TokenKind::kPunctuation);
}

TEST(TokenizeTest, Empty) { EXPECT_TRUE(Tokenize("  ").empty()); }

TEST(TokenizeTest, SpansPointIntoSource) {
  const std::string s = "  Hello,  world ";
  for (const Token& t : Tokenize(s)) {
    EXPECT_EQ(s.substr(t.span.start, t.span.end - t.span.start), t.surface);
  }
}

class ClassifyTest : public ::testing::Test {
 protected:
  ClassifyTest()
      : lexicon_({"i", "her", "wit", "with", "late", "hello", "cricket",
                  "bc"},
                 {{"gm", "good morning"}, {"we're", "we are"},
                  {"bc", "because"}},
                 {{"2", "to"}},
                 {"jack"}),
        recognizer_(lexicon_) {}

  Lexicon lexicon_;
  EntityRecognizer recognizer_;
};

TEST_F(ClassifyTest, FiveCategories) {
  const Sentence s =
      AnalyzeSentence("GM Jack, we're late m 2morrow", lexicon_, recognizer_);
  std::vector<Category> got;
  for (const Token& t : s.tokens) got.push_back(t.category);
  EXPECT_EQ(got, (std::vector<Category>{
                     Category::kAcronym, Category::kNamedEntity,
                     Category::kNormalized, Category::kContraction,
                     Category::kNormalized, Category::kUnnormalized,
                     Category::kUnnormalized}));
}

TEST_F(ClassifyTest, ExpansionBeatsVocabulary) {
  const auto tokens =
      Classify(Tokenize("bc"), lexicon_, recognizer_);
  EXPECT_EQ(tokens[0].category, Category::kAcronym);
}

TEST_F(ClassifyTest, NumbersBecomeSymbols) {
  const Sentence s = AnalyzeSentence("in 5 min", lexicon_, recognizer_);
  EXPECT_EQ(s.tokens[1].kind, TokenKind::kSymbol);
  EXPECT_EQ(s.tokens[1].category, Category::kNormalized);
  // "in" and "min" are unknown to this tiny lexicon; "5" is not counted.
  EXPECT_DOUBLE_EQ(s.informality_ratio, 1.0);
}

TEST_F(ClassifyTest, InformalityRatio) {
  EXPECT_DOUBLE_EQ(
      AnalyzeSentence("i m wit her.", lexicon_, recognizer_).informality_ratio,
      0.25);
  EXPECT_DOUBLE_EQ(
      AnalyzeSentence("hello cricket", lexicon_, recognizer_).informality_ratio,
      0.0);
  EXPECT_DOUBLE_EQ(AnalyzeSentence("!", lexicon_, recognizer_).informality_ratio,
                   0.0);
  EXPECT_DOUBLE_EQ(AnalyzeSentence("", lexicon_, recognizer_).informality_ratio,
                   0.0);
}

TEST(CategoryTest, NamesRoundTrip) {
  for (Category c : {Category::kNormalized, Category::kAcronym,
                     Category::kContraction, Category::kNamedEntity,
                     Category::kUnnormalized}) {
    EXPECT_EQ(ParseCategory(CategoryName(c)), c);
  }
  EXPECT_THROW(ParseCategory("slang"), std::invalid_argument);
}

TEST(DetokenizeTest, RestoresAdjacency) {
  const std::string s = "hi, (you) there!";
  EXPECT_EQ(Detokenize(Tokenize(s)), s);
  EXPECT_EQ(Detokenize(Tokenize("a   b")), "a b");
}

}  // namespace
}  // namespace normpipe
