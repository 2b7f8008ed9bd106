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

#ifndef NORMPIPE_STRING_METRICS_H_
#define NORMPIPE_STRING_METRICS_H_

#include <cstddef>
#include <string_view>

// Similarity primitives over byte strings. Callers pass lowercased,
// symbol-substituted forms. Every similarity lies in [0, 1].
namespace normpipe {

// Unit-cost insert/delete/substitute edit distance.
std::size_t EditDistance(std::string_view a, std::string_view b);

// 1 - d / max(|a|, |b|); 1 when both are empty.
double NormalizedLevenshtein(std::string_view a, std::string_view b);

double Jaro(std::string_view a, std::string_view b);

// Winkler boost (p = 0.1, prefix up to 4) applied when Jaro exceeds 0.7.
double JaroWinkler(std::string_view a, std::string_view b);

// Cosine over the sets of character n-grams (binary incidence vectors).
// Both sets empty gives 1, one empty gives 0. n must be 1 or 2.
double NgramSetCosine(std::string_view a, std::string_view b, int n);

struct SsimComponents {
  double levenshtein = 0;
  double jaro_winkler = 0;
  double unigram_cosine = 0;
  double bigram_cosine = 0;
  double value = 0;
};

SsimComponents SsimBreakdown(std::string_view x, std::string_view y);

// 0.6 NL + 0.2 JW + 0.15 cos1 + 0.05 cos2.
double Ssim(std::string_view x, std::string_view y);

}  // namespace normpipe

#endif  // NORMPIPE_STRING_METRICS_H_
