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

#ifndef NORMPIPE_PHONETICS_H_
#define NORMPIPE_PHONETICS_H_

#include <string>
#include <string_view>

// Phonetic encoders. Input is folded to ASCII and uppercased; anything that
// is not a letter is ignored. A word without letters throws EncodingError.
namespace normpipe {

enum class PhoneticAlgorithm { kSoundex, kMetaphone, kFuzzySoundex };

struct PhoneticCode {
  PhoneticAlgorithm algorithm;
  std::string code;

  bool operator==(const PhoneticCode&) const = default;
};

// Russell/American Soundex: first letter plus three digits, with H and W
// transparent between letters of the same class.
PhoneticCode Soundex(std::string_view word);

// Original (single-code) Metaphone. Codes are not truncated. '0' stands for
// "th".
PhoneticCode Metaphone(std::string_view word);

// Holmes-McCabe Fuzzy Soundex: n-gram rewrites, then Soundex-style coding
// with the extended table, padded or truncated to five characters.
PhoneticCode FuzzySoundex(std::string_view word);

PhoneticCode Encode(PhoneticAlgorithm algorithm, std::string_view word);

// "soundex", "metaphone" or "fuzzy"; throws std::invalid_argument.
PhoneticAlgorithm ParsePhoneticAlgorithm(std::string_view name);
std::string_view PhoneticAlgorithmName(PhoneticAlgorithm algorithm);

}  // namespace normpipe

#endif  // NORMPIPE_PHONETICS_H_
