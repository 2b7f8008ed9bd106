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

#ifndef NORMPIPE_LEXICON_H_
#define NORMPIPE_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>

namespace normpipe {

// Non-alphabetic symbol run -> the syllable it is read as ("4" -> "for").
using SymbolMap = std::map<std::string, std::string, std::less<>>;

// Locations of the four lexicon files.
struct LexiconPaths {
  std::filesystem::path vocabulary;
  std::filesystem::path expansions;
  std::filesystem::path symbols;
  std::filesystem::path gazetteer;

  // vocabulary.txt, expansions.tsv, symbols.tsv and gazetteer.txt in `dir`.
  static LexiconPaths FromDataDir(const std::filesystem::path& dir);
};

// Word vocabulary, acronym/contraction expansions, symbol readings and the
// named-entity gazetteer. Immutable once built; every query lowercases its
// argument first.
class Lexicon {
 public:
  Lexicon() = default;

  // Builds a lexicon from in-memory tables. Entries are lowercased.
  // Throws std::invalid_argument on empty or malformed entries.
  Lexicon(const std::unordered_set<std::string>& vocabulary,
          const std::map<std::string, std::string>& expansions,
          const SymbolMap& symbols,
          const std::unordered_set<std::string>& gazetteer);

  // Throws LoadError for unreadable files and ParseError for malformed
  // lines or duplicate expansion keys.
  static Lexicon Load(const LexiconPaths& paths);

  // True iff the lowercased token is in the vocabulary. `token` must be
  // non-empty (std::invalid_argument otherwise).
  bool IsWord(std::string_view token) const;

  // Expansion phrase for the token, ignoring trailing sentence punctuation
  // ("lol!" matches "lol"). Multi-word phrases are space separated.
  std::optional<std::string> Expand(std::string_view token) const;

  // True when `token` is an expansion key for a contraction: the key has an
  // apostrophe, or it is an apostrophe-less spelling of such a key
  // ("dont" for "don't").
  bool IsContraction(std::string_view token) const;

  // Replaces symbol runs with their syllables, greedily matching the longest
  // key at each position of a non-alphabetic run. Unmatched non-alphabetic
  // characters are dropped and letters are folded to lowercase ASCII.
  std::string SubstituteSymbols(std::string_view token) const;

  bool IsEntity(std::string_view token) const;

  const std::unordered_set<std::string>& vocabulary() const {
    return vocabulary_;
  }
  const std::map<std::string, std::string, std::less<>>& expansions() const {
    return expansions_;
  }
  const SymbolMap& symbol_map() const { return symbols_; }
  const std::unordered_set<std::string>& gazetteer() const {
    return gazetteer_;
  }

 private:
  void IndexContractions();

  std::unordered_set<std::string> vocabulary_;
  std::map<std::string, std::string, std::less<>> expansions_;
  SymbolMap symbols_;
  std::unordered_set<std::string> gazetteer_;
  std::unordered_set<std::string> contraction_keys_;
  std::size_t longest_symbol_ = 0;
};

// Loads only the symbol map (used by the noise generator and `sim`).
SymbolMap LoadSymbolMap(const std::filesystem::path& path);

}  // namespace normpipe

#endif  // NORMPIPE_LEXICON_H_
