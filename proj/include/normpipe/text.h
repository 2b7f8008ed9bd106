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

#ifndef NORMPIPE_TEXT_H_
#define NORMPIPE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 helpers shared by the lexicon, tokenizer and encoders.
namespace normpipe::text {

inline bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Lowercases ASCII, Latin-1, Latin Extended-A, basic Greek and Cyrillic.
// Other code points and invalid bytes pass through unchanged.
std::string Lowercase(std::string_view s);

// Transliterates accented Latin letters to ASCII ("é" -> "e", "ß" -> "ss")
// and drops every other non-ASCII code point.
std::string FoldToAscii(std::string_view s);

// True if `s` contains an ASCII letter after folding.
bool HasLetter(std::string_view s);

std::string_view Trim(std::string_view s);

// Splits on runs of ASCII whitespace; never returns empty pieces.
std::vector<std::string_view> SplitWhitespace(std::string_view s);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace normpipe::text

#endif  // NORMPIPE_TEXT_H_
