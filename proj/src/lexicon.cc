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

#include "normpipe/lexicon.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "normpipe/errors.h"
#include "normpipe/text.h"

namespace normpipe {
namespace {

struct Line {
  std::size_t number;
  std::string content;
};

// Reads non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> ReadDataLines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), "no such file or not readable");
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view trimmed = text::Trim(raw);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    lines.push_back({number, std::string(raw)});
  }
  if (in.bad()) throw LoadError(path.string(), "read failed");
  return lines;
}

bool IsVocabularyEntry(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (!text::IsAsciiAlpha(c) && c != '\'') return false;
  }
  return true;
}

bool HasAsciiAlpha(std::string_view s) {
  for (char c : s) {
    if (text::IsAsciiAlpha(c)) return true;
  }
  return false;
}

std::pair<std::string, std::string> SplitTsv(const std::string& path,
                                             const Line& line) {
  const auto tab = line.content.find('\t');
  if (tab == std::string::npos ||
      line.content.find('\t', tab + 1) != std::string::npos) {
    throw ParseError(path, line.number, "expected two tab-separated columns");
  }
  std::string key = text::Lowercase(text::Trim(line.content.substr(0, tab)));
  std::string value =
      text::Lowercase(text::Trim(line.content.substr(tab + 1)));
  if (key.empty() || value.empty()) {
    throw ParseError(path, line.number, "empty key or value");
  }
  return {std::move(key), std::move(value)};
}

std::unordered_set<std::string> LoadWordList(
    const std::filesystem::path& path) {
  std::unordered_set<std::string> words;
  for (const Line& line : ReadDataLines(path)) {
    std::string word = text::Lowercase(text::Trim(line.content));
    if (!IsVocabularyEntry(word)) {
      throw ParseError(path.string(), line.number,
                       "entry must contain only letters and apostrophes");
    }
    words.insert(std::move(word));
  }
  return words;
}

std::string StripTrailingPunctuation(std::string_view s) {
  std::size_t end = s.size();
  while (end > 0) {
    const char c = s[end - 1];
    if (c == '.' || c == '!' || c == '?' || c == ',' || c == ';' ||
        c == ':') {
      --end;
    } else {
      break;
    }
  }
  return std::string(s.substr(0, end));
}

std::string StripApostrophes(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != '\'') out.push_back(c);
  }
  return out;
}

void RequireNonEmpty(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty token");
}

}  // namespace

LexiconPaths LexiconPaths::FromDataDir(const std::filesystem::path& dir) {
  return {dir / "vocabulary.txt", dir / "expansions.tsv", dir / "symbols.tsv",
          dir / "gazetteer.txt"};
}

Lexicon::Lexicon(const std::unordered_set<std::string>& vocabulary,
                 const std::map<std::string, std::string>& expansions,
                 const SymbolMap& symbols,
                 const std::unordered_set<std::string>& gazetteer) {
  for (const auto& w : vocabulary) {
    std::string lower = text::Lowercase(w);
    if (!IsVocabularyEntry(lower)) {
      throw std::invalid_argument("bad vocabulary entry '" + w + "'");
    }
    vocabulary_.insert(std::move(lower));
  }
  for (const auto& [key, value] : expansions) {
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("empty expansion entry");
    }
    if (!expansions_.emplace(text::Lowercase(key), text::Lowercase(value))
             .second) {
      throw std::invalid_argument("duplicate expansion key '" + key + "'");
    }
  }
  for (const auto& [key, value] : symbols) {
    if (key.empty() || HasAsciiAlpha(key) || value.empty()) {
      throw std::invalid_argument("bad symbol entry '" + key + "'");
    }
    symbols_.emplace(key, text::Lowercase(value));
  }
  for (const auto& g : gazetteer) {
    if (g.empty()) throw std::invalid_argument("empty gazetteer entry");
    gazetteer_.insert(text::Lowercase(g));
  }
  IndexContractions();
}

Lexicon Lexicon::Load(const LexiconPaths& paths) {
  Lexicon lex;
  lex.vocabulary_ = LoadWordList(paths.vocabulary);
  lex.gazetteer_ = LoadWordList(paths.gazetteer);

  const std::string exp_path = paths.expansions.string();
  for (const Line& line : ReadDataLines(paths.expansions)) {
    auto [key, value] = SplitTsv(exp_path, line);
    if (!lex.expansions_.emplace(key, std::move(value)).second) {
      throw ParseError(exp_path, line.number,
                       "duplicate expansion key '" + key + "'");
    }
  }
  lex.symbols_ = LoadSymbolMap(paths.symbols);
  lex.IndexContractions();
  return lex;
}

SymbolMap LoadSymbolMap(const std::filesystem::path& path) {
  SymbolMap symbols;
  const std::string p = path.string();
  for (const Line& line : ReadDataLines(path)) {
    auto [key, value] = SplitTsv(p, line);
    if (HasAsciiAlpha(key)) {
      throw ParseError(p, line.number, "symbol key must not contain letters");
    }
    if (!symbols.emplace(key, std::move(value)).second) {
      throw ParseError(p, line.number, "duplicate symbol key '" + key + "'");
    }
  }
  return symbols;
}

void Lexicon::IndexContractions() {
  contraction_keys_.clear();
  for (const auto& [key, value] : expansions_) {
    if (key.find('\'') == std::string::npos) continue;
    contraction_keys_.insert(key);
    std::string bare = StripApostrophes(key);
    if (expansions_.count(bare) > 0) contraction_keys_.insert(bare);
  }
  longest_symbol_ = 0;
  for (const auto& [key, value] : symbols_) {
    longest_symbol_ = std::max(longest_symbol_, key.size());
  }
}

bool Lexicon::IsWord(std::string_view token) const {
  RequireNonEmpty(token);
  return vocabulary_.count(text::Lowercase(token)) > 0;
}

std::optional<std::string> Lexicon::Expand(std::string_view token) const {
  RequireNonEmpty(token);
  const std::string key = StripTrailingPunctuation(text::Lowercase(token));
  if (key.empty()) return std::nullopt;
  auto it = expansions_.find(key);
  if (it == expansions_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::IsContraction(std::string_view token) const {
  return contraction_keys_.count(
             StripTrailingPunctuation(text::Lowercase(token))) > 0;
}

std::string Lexicon::SubstituteSymbols(std::string_view token) const {
  const std::string folded = text::FoldToAscii(token);
  std::string out;
  out.reserve(folded.size() + 8);
  std::size_t i = 0;
  while (i < folded.size()) {
    const char c = folded[i];
    if (text::IsAsciiAlpha(c)) {
      out.push_back(static_cast<char>(c | 0x20));
      ++i;
      continue;
    }
    // Longest key that matches here without crossing into letters.
    std::size_t run_end = i;
    while (run_end < folded.size() && !text::IsAsciiAlpha(folded[run_end])) {
      ++run_end;
    }
    bool matched = false;
    for (std::size_t len = std::min(longest_symbol_, run_end - i); len > 0;
         --len) {
      auto it = symbols_.find(std::string_view(folded).substr(i, len));
      if (it != symbols_.end()) {
        out += it->second;
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return out;
}

bool Lexicon::IsEntity(std::string_view token) const {
  RequireNonEmpty(token);
  return gazetteer_.count(text::Lowercase(token)) > 0;
}

}  // namespace normpipe
