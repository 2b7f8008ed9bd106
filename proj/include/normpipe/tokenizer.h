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

#ifndef NORMPIPE_TOKENIZER_H_
#define NORMPIPE_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "normpipe/lexicon.h"
#include "normpipe/ner.h"

namespace normpipe {

enum class Category {
  kNormalized,
  kAcronym,
  kContraction,
  kNamedEntity,
  kUnnormalized,
};

std::string_view CategoryName(Category category);
// Inverse of CategoryName; throws std::invalid_argument.
Category ParseCategory(std::string_view name);

enum class TokenKind {
  kWord,
  // A run of punctuation split off a word, or a chunk with no letters.
  kPunctuation,
  // A word-like token with no phonetic reading, e.g. "5" or "$$".
  kSymbol,
};

// Byte offsets into the source sentence, end exclusive.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

struct Token {
  std::string surface;
  std::string normalized_surface;
  Span span;
  TokenKind kind = TokenKind::kWord;
  Category category = Category::kNormalized;

  bool is_word() const { return kind == TokenKind::kWord; }
};

struct Sentence {
  std::string source;
  std::vector<Token> tokens;
  double informality_ratio = 0.0;
};

// Splits after runs of '.', '!' or '?' that are followed by whitespace or
// the end of the text. Terminators stay with their sentence; segments are
// trimmed and empty ones dropped.
std::vector<std::string> SplitSentences(std::string_view text);

// Whitespace tokenization. Leading and trailing punctuation runs become
// separate tokens; apostrophes inside a word are kept ("can't").
std::vector<Token> Tokenize(std::string_view sentence);

// Assigns a category to every token. Word tokens take the first match of:
// expansion table, recognized entity, vocabulary, otherwise unnormalized.
// Word tokens without any letter, even after symbol substitution, are
// re-labelled kSymbol. Non-word tokens are always kNormalized.
std::vector<Token> Classify(std::vector<Token> tokens, const Lexicon& lexicon,
                            const EntityRecognizer& recognizer,
                            std::vector<std::string>* warnings = nullptr);

// Unnormalized word tokens over all word tokens; 0 with no words.
double InformalityRatio(const std::vector<Token>& tokens);

// Tokenize + Classify + InformalityRatio.
Sentence AnalyzeSentence(std::string_view source, const Lexicon& lexicon,
                         const EntityRecognizer& recognizer,
                         std::vector<std::string>* warnings = nullptr);

// Rebuilds text from token spans: tokens that were adjacent in the source
// are glued, everything else is joined by one space.
std::string Detokenize(const std::vector<Token>& tokens);

}  // namespace normpipe

#endif  // NORMPIPE_TOKENIZER_H_
