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

#ifndef NORMPIPE_NOISE_H_
#define NORMPIPE_NOISE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "normpipe/lexicon.h"

namespace normpipe {

enum class NoiseOp {
  kInsert,         // random lowercase letter at a random position
  kDelete,         // drop one character; never empties the word
  kSwap,           // swap two adjacent, different characters
  kVowelDrop,      // drop a vowel that is neither first nor last
  kRepeatStretch,  // repeat one letter 3 to 6 times
  kSymbolSub,      // write a syllable as its symbol ("to" -> "2")
};

using NoiseOps = std::set<NoiseOp>;

// insert, delete, swap, vowel, stretch, symbol.
std::string_view NoiseOpName(NoiseOp op);
NoiseOp ParseNoiseOp(std::string_view name);
// Comma separated list of names; throws std::invalid_argument.
NoiseOps ParseNoiseOps(std::string_view list);
NoiseOps AllNoiseOps();

// Small wrapper so draws do not depend on the standard library's
// distribution implementations.
class NoiseRng {
 public:
  explicit NoiseRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, n); n must be positive.
  std::size_t Below(std::size_t n);
  // Uniform in [0, 1).
  double Unit();

 private:
  std::mt19937_64 engine_;
};

struct PerturbResult {
  std::string word;
  // Set when some step found no applicable enabled operation.
  bool exhausted = false;
};

struct AlignmentEntry {
  std::size_t line = 0;
  // Token index within the line, as produced by Tokenize.
  std::size_t pos = 0;
  std::string original;
  std::string noisy;

  bool operator==(const AlignmentEntry&) const = default;
};

struct NoisyCorpus {
  std::vector<std::string> lines;
  // Only words that actually changed.
  std::vector<AlignmentEntry> alignment;
  std::size_t words = 0;
  // Changed words over all words.
  double informality_ratio = 0;
  std::size_t exhausted_words = 0;
};

class NoiseGenerator {
 public:
  // `symbols` maps symbol -> syllable; SymbolSub applies it in reverse.
  explicit NoiseGenerator(SymbolMap symbols = {});

  // Applies `count` operations drawn from the enabled ones that apply.
  // Throws std::invalid_argument for an empty word.
  PerturbResult PerturbWord(std::string_view word, const NoiseOps& ops,
                            int count, std::uint64_t seed) const;
  PerturbResult PerturbWord(std::string_view word, const NoiseOps& ops,
                            int count, NoiseRng& rng) const;

  // Perturbs each word token independently with probability `rate`, using
  // seed ^ line_index for every line. Throws std::invalid_argument when
  // rate is outside [0, 1].
  NoisyCorpus PerturbCorpus(const std::vector<std::string>& lines,
                            double rate, const NoiseOps& ops,
                            std::uint64_t seed, int ops_per_word = 1) const;

 private:
  bool Applicable(NoiseOp op, const std::string& w) const;
  void Apply(NoiseOp op, std::string* w, NoiseRng& rng) const;

  // (syllable, symbol) pairs.
  std::vector<std::pair<std::string, std::string>> inverse_;
};

// TSV: line<TAB>pos<TAB>original<TAB>noisy.
void WriteAlignment(const std::filesystem::path& path,
                    const std::vector<AlignmentEntry>& alignment);
std::vector<AlignmentEntry> LoadAlignment(const std::filesystem::path& path);

}  // namespace normpipe

#endif  // NORMPIPE_NOISE_H_
