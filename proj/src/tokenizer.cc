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

#include <stdexcept>
#include <utility>

#include "normpipe/text.h"

namespace normpipe {
namespace {

bool IsEdgePunctuation(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case '"': case '\'': case '`': case '(': case ')': case '[':
    case ']': case '{': case '}': case '<': case '>': case '-':
    case '_': case '*': case '/': case '\\': case '|': case '~':
      return true;
    default:
      return false;
  }
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

Token MakeToken(std::string_view sentence, std::size_t start, std::size_t end,
                TokenKind kind) {
  Token t;
  t.surface = std::string(sentence.substr(start, end - start));
  t.normalized_surface = text::Lowercase(t.surface);
  t.span = {start, end};
  t.kind = kind;
  return t;
}

}  // namespace

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kNormalized: return "normalized";
    case Category::kAcronym: return "acronym";
    case Category::kContraction: return "contraction";
    case Category::kNamedEntity: return "named_entity";
    case Category::kUnnormalized: return "unnormalized";
  }
  return "normalized";
}

Category ParseCategory(std::string_view name) {
  for (Category c : {Category::kNormalized, Category::kAcronym,
                     Category::kContraction, Category::kNamedEntity,
                     Category::kUnnormalized}) {
    if (CategoryName(c) == name) return c;
  }
  throw std::invalid_argument("unknown category '" + std::string(name) + "'");
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> out;
  auto emit = [&](std::size_t b, std::size_t e) {
    std::string_view piece = text::Trim(text.substr(b, e - b));
    if (!piece.empty()) out.emplace_back(piece);
  };
  std::size_t begin = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsTerminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < text.size() && IsTerminator(text[run_end])) ++run_end;
    if (run_end == text.size() || text::IsAsciiSpace(text[run_end])) {
      emit(begin, run_end);
      begin = run_end;
    }
    i = run_end;
  }
  emit(begin, text.size());
  return out;
}

std::vector<Token> Tokenize(std::string_view sentence) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && text::IsAsciiSpace(sentence[i])) ++i;
    std::size_t end = i;
    while (end < sentence.size() && !text::IsAsciiSpace(sentence[end])) ++end;
    if (end == i) break;

    std::size_t lead = i;
    while (lead < end && IsEdgePunctuation(sentence[lead])) ++lead;
    if (lead == end) {
      tokens.push_back(MakeToken(sentence, i, end, TokenKind::kPunctuation));
      i = end;
      continue;
    }
    std::size_t trail = end;
    while (trail > lead && IsEdgePunctuation(sentence[trail - 1])) --trail;

    if (lead > i) {
      tokens.push_back(MakeToken(sentence, i, lead, TokenKind::kPunctuation));
    }
    tokens.push_back(MakeToken(sentence, lead, trail, TokenKind::kWord));
    if (trail < end) {
      tokens.push_back(
          MakeToken(sentence, trail, end, TokenKind::kPunctuation));
    }
    i = end;
  }
  return tokens;
}

std::vector<Token> Classify(std::vector<Token> tokens, const Lexicon& lexicon,
                            const EntityRecognizer& recognizer,
                            std::vector<std::string>* warnings) {
  std::vector<std::string> words(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& t = tokens[i];
    if (t.kind == TokenKind::kWord &&
        lexicon.SubstituteSymbols(t.surface).empty()) {
      t.kind = TokenKind::kSymbol;
    }
    if (t.is_word()) words[i] = t.normalized_surface;
  }
  const auto entities = recognizer.Recognize(words, warnings);

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& t = tokens[i];
    if (!t.is_word()) {
      t.category = Category::kNormalized;
    } else if (lexicon.Expand(t.normalized_surface)) {
      t.category = lexicon.IsContraction(t.normalized_surface)
                       ? Category::kContraction
                       : Category::kAcronym;
    } else if (entities.count(i) > 0) {
      t.category = Category::kNamedEntity;
    } else if (lexicon.IsWord(t.normalized_surface)) {
      t.category = Category::kNormalized;
    } else {
      t.category = Category::kUnnormalized;
    }
  }
  return tokens;
}

double InformalityRatio(const std::vector<Token>& tokens) {
  std::size_t words = 0;
  std::size_t unnormalized = 0;
  for (const Token& t : tokens) {
    if (!t.is_word()) continue;
    ++words;
    if (t.category == Category::kUnnormalized) ++unnormalized;
  }
  return words == 0 ? 0.0
                    : static_cast<double>(unnormalized) /
                          static_cast<double>(words);
}

Sentence AnalyzeSentence(std::string_view source, const Lexicon& lexicon,
                         const EntityRecognizer& recognizer,
                         std::vector<std::string>* warnings) {
  Sentence s;
  s.source = std::string(source);
  s.tokens = Classify(Tokenize(source), lexicon, recognizer, warnings);
  s.informality_ratio = InformalityRatio(s.tokens);
  return s;
}

std::string Detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && tokens[i].span.start != tokens[i - 1].span.end) out += ' ';
    out += tokens[i].surface;
  }
  return out;
}

}  // namespace normpipe
