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

#include "normpipe/phonetics.h"

#include <stdexcept>

#include "normpipe/errors.h"
#include "normpipe/text.h"

namespace normpipe {
namespace {

std::string PrepareLetters(std::string_view word) {
  std::string out;
  for (char c : text::FoldToAscii(word)) {
    if (text::IsAsciiAlpha(c)) out.push_back(static_cast<char>(c & ~0x20));
  }
  if (out.empty()) {
    throw EncodingError("no letters to encode in '" + std::string(word) +
                        "'");
  }
  return out;
}

// Digit classes for A..Z. '0' separates (vowels), '-' is transparent.
constexpr std::string_view kSoundexClasses = "0123012-02245501262301-202";
constexpr std::string_view kFuzzyClasses = "0193017-07745501769301-7-9";

std::string CollapseRepeats(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  return out;
}

// Shared tail of Soundex and Fuzzy Soundex: map letters, drop transparent
// ones, collapse runs, restore the first letter, drop separators, pad.
std::string DigitCode(const std::string& word, std::string_view classes,
                      std::string_view transparent_initials,
                      std::size_t length) {
  std::string digits;
  for (char c : word) {
    const char d = classes[c - 'A'];
    if (d != '-') digits.push_back(d);
  }
  digits = CollapseRepeats(digits);
  std::string code(1, word[0]);
  if (transparent_initials.find(word[0]) != std::string_view::npos) {
    code += digits;
  } else if (!digits.empty()) {
    code += digits.substr(1);
  }
  std::string out;
  for (char c : code) {
    if (c != '0') out.push_back(c);
  }
  out.resize(length, '0');
  return out;
}

void ReplaceAll(std::string* s, std::string_view from, std::string_view to) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s->find(from, pos);
    if (hit == std::string::npos) break;
    out.append(*s, pos, hit - pos);
    out += to;
    pos = hit + from.size();
  }
  out.append(*s, pos, std::string::npos);
  *s = std::move(out);
}

bool StartsWith(const std::string& s, std::string_view p) {
  return s.compare(0, p.size(), p) == 0;
}

bool EndsWith(const std::string& s, std::string_view p) {
  return s.size() >= p.size() &&
         s.compare(s.size() - p.size(), p.size(), p) == 0;
}

bool IsVowel(char c) {
  return c == 'A' || c == 'E' || c == 'I' || c == 'O' || c == 'U';
}

bool IsFrontVowel(char c) { return c == 'E' || c == 'I' || c == 'Y'; }

}  // namespace

PhoneticCode Soundex(std::string_view word) {
  const std::string w = PrepareLetters(word);
  return {PhoneticAlgorithm::kSoundex, DigitCode(w, kSoundexClasses, "HW", 4)};
}

PhoneticCode FuzzySoundex(std::string_view word) {
  std::string w = PrepareLetters(word);

  if (StartsWith(w, "CS") || StartsWith(w, "CZ") || StartsWith(w, "TS") ||
      StartsWith(w, "TZ")) {
    w.replace(0, 2, "SS");
  } else if (StartsWith(w, "GN")) {
    w.replace(0, 2, "NN");
  } else if (StartsWith(w, "HR") || StartsWith(w, "WR")) {
    w.replace(0, 2, "RR");
  } else if (StartsWith(w, "HW")) {
    w.replace(0, 2, "WW");
  } else if (StartsWith(w, "KN") || StartsWith(w, "NG")) {
    w.replace(0, 2, "NN");
  }

  if (EndsWith(w, "CH")) {
    w.replace(w.size() - 2, 2, "KK");
  } else if (EndsWith(w, "NT")) {
    w.replace(w.size() - 2, 2, "TT");
  } else if (EndsWith(w, "RT")) {
    w.replace(w.size() - 2, 2, "RR");
  } else if (EndsWith(w, "RDT")) {
    w.replace(w.size() - 3, 3, "RR");
  }

  // Order matters: each rewrite sees the output of the previous one.
  static constexpr std::pair<std::string_view, std::string_view> kRewrites[] =
      {{"CA", "KA"},   {"CC", "KK"},  {"CK", "KK"},   {"CE", "SE"},
       {"CHL", "KL"},  {"CL", "KL"},  {"CHR", "KR"},  {"CR", "KR"},
       {"CI", "SI"},   {"CO", "KO"},  {"CU", "KU"},   {"CY", "SY"},
       {"DG", "GG"},   {"GH", "HH"},  {"MAC", "MK"},  {"MC", "MK"},
       {"NST", "NSS"}, {"PF", "FF"},  {"PH", "FF"},   {"SCH", "SSS"},
       {"TIO", "SIO"}, {"TIA", "SIO"}, {"TCH", "CHH"}};
  for (const auto& [from, to] : kRewrites) ReplaceAll(&w, from, to);

  return {PhoneticAlgorithm::kFuzzySoundex,
          DigitCode(w, kFuzzyClasses, "HWY", 5)};
}

PhoneticCode Metaphone(std::string_view word) {
  std::string w = PrepareLetters(word);

  if (StartsWith(w, "AE") || StartsWith(w, "GN") || StartsWith(w, "KN") ||
      StartsWith(w, "PN") || StartsWith(w, "WR")) {
    w.erase(0, 1);
  } else if (w[0] == 'X') {
    w[0] = 'S';
  } else if (StartsWith(w, "WH")) {
    w.erase(1, 1);
  }

  const auto n = static_cast<long>(w.size());
  auto at = [&](long i) -> char { return (i >= 0 && i < n) ? w[i] : '\0'; };

  std::string out;
  for (long i = 0; i < n; ++i) {
    const char c = w[i];
    if (c != 'C' && i > 0 && w[i - 1] == c) continue;
    const char prev = at(i - 1);
    const char next = at(i + 1);
    const char next2 = at(i + 2);
    switch (c) {
      case 'A': case 'E': case 'I': case 'O': case 'U':
        if (i == 0) out += c;
        break;
      case 'B':
        if (!(i == n - 1 && prev == 'M')) out += 'B';
        break;
      case 'C':
        if (prev == 'S' && IsFrontVowel(next)) break;  // -SCI- -SCE- -SCY-
        if (next == 'I' && next2 == 'A') {
          out += 'X';
        } else if (next == 'H') {
          out += (prev == 'S') ? 'K' : 'X';
        } else if (IsFrontVowel(next)) {
          out += 'S';
        } else {
          out += 'K';
        }
        break;
      case 'D':
        out += (next == 'G' && IsFrontVowel(next2)) ? 'J' : 'T';
        break;
      case 'G':
        if (next == 'H' && !IsVowel(next2)) break;
        if (next == 'N' &&
            (i + 2 == n ||
             (next2 == 'E' && at(i + 3) == 'D' && i + 4 == n))) {
          break;
        }
        if (prev == 'D' && IsFrontVowel(next)) break;
        out += IsFrontVowel(next) ? 'J' : 'K';
        break;
      case 'H':
        if (IsVowel(prev) && !IsVowel(next)) break;
        if (prev == 'C' || prev == 'S' || prev == 'P' || prev == 'T' ||
            prev == 'G') {
          break;
        }
        out += 'H';
        break;
      case 'K':
        if (prev != 'C') out += 'K';
        break;
      case 'P':
        out += (next == 'H') ? 'F' : 'P';
        break;
      case 'Q':
        out += 'K';
        break;
      case 'S':
        if (next == 'H' || (next == 'I' && (next2 == 'O' || next2 == 'A'))) {
          out += 'X';
        } else {
          out += 'S';
        }
        break;
      case 'T':
        if (next == 'I' && (next2 == 'A' || next2 == 'O')) {
          out += 'X';
        } else if (next == 'H') {
          out += '0';
        } else if (!(next == 'C' && next2 == 'H')) {
          out += 'T';
        }
        break;
      case 'V':
        out += 'F';
        break;
      case 'W': case 'Y':
        if (IsVowel(next)) out += c;
        break;
      case 'X':
        out += "KS";
        break;
      case 'Z':
        out += 'S';
        break;
      default:  // F J L M N R
        out += c;
        break;
    }
  }
  return {PhoneticAlgorithm::kMetaphone, out};
}

PhoneticCode Encode(PhoneticAlgorithm algorithm, std::string_view word) {
  switch (algorithm) {
    case PhoneticAlgorithm::kSoundex: return Soundex(word);
    case PhoneticAlgorithm::kMetaphone: return Metaphone(word);
    case PhoneticAlgorithm::kFuzzySoundex: return FuzzySoundex(word);
  }
  throw std::invalid_argument("unknown phonetic algorithm");
}

PhoneticAlgorithm ParsePhoneticAlgorithm(std::string_view name) {
  if (name == "soundex") return PhoneticAlgorithm::kSoundex;
  if (name == "metaphone") return PhoneticAlgorithm::kMetaphone;
  if (name == "fuzzy" || name == "fuzzy_soundex") {
    return PhoneticAlgorithm::kFuzzySoundex;
  }
  throw std::invalid_argument("unknown phonetic algorithm '" +
                              std::string(name) + "'");
}

std::string_view PhoneticAlgorithmName(PhoneticAlgorithm algorithm) {
  switch (algorithm) {
    case PhoneticAlgorithm::kSoundex: return "soundex";
    case PhoneticAlgorithm::kMetaphone: return "metaphone";
    case PhoneticAlgorithm::kFuzzySoundex: return "fuzzy";
  }
  return "soundex";
}

}  // namespace normpipe
