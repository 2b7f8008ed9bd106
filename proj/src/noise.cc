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

#include "normpipe/noise.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "normpipe/errors.h"
#include "normpipe/text.h"
#include "normpipe/tokenizer.h"

namespace normpipe {
namespace {

constexpr std::pair<NoiseOp, std::string_view> kOpNames[] = {
    {NoiseOp::kInsert, "insert"},        {NoiseOp::kDelete, "delete"},
    {NoiseOp::kSwap, "swap"},            {NoiseOp::kVowelDrop, "vowel"},
    {NoiseOp::kRepeatStretch, "stretch"}, {NoiseOp::kSymbolSub, "symbol"},
};

bool IsVowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
    case 'A': case 'E': case 'I': case 'O': case 'U':
      return true;
    default:
      return false;
  }
}

std::vector<std::size_t> InteriorVowels(const std::string& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (IsVowel(w[i])) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> SwapPoints(const std::string& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != w[i + 1]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> LetterPositions(const std::string& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (text::IsAsciiAlpha(w[i])) out.push_back(i);
  }
  return out;
}

}  // namespace

std::string_view NoiseOpName(NoiseOp op) {
  for (const auto& [o, name] : kOpNames) {
    if (o == op) return name;
  }
  return "insert";
}

NoiseOp ParseNoiseOp(std::string_view name) {
  for (const auto& [op, n] : kOpNames) {
    if (n == name) return op;
  }
  if (name == "vowel_drop") return NoiseOp::kVowelDrop;
  if (name == "repeat" || name == "repeat_stretch") {
    return NoiseOp::kRepeatStretch;
  }
  if (name == "symbol_sub") return NoiseOp::kSymbolSub;
  throw std::invalid_argument("unknown noise operation '" + std::string(name) +
                              "'");
}

NoiseOps ParseNoiseOps(std::string_view list) {
  NoiseOps ops;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    const std::string_view name = text::Trim(list.substr(start, comma - start));
    if (!name.empty()) ops.insert(ParseNoiseOp(name));
    start = comma + 1;
  }
  if (ops.empty()) throw std::invalid_argument("no noise operations given");
  return ops;
}

NoiseOps AllNoiseOps() {
  NoiseOps ops;
  for (const auto& [op, name] : kOpNames) ops.insert(op);
  return ops;
}

std::size_t NoiseRng::Below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

double NoiseRng::Unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

NoiseGenerator::NoiseGenerator(SymbolMap symbols) {
  for (const auto& [symbol, syllable] : symbols) {
    inverse_.emplace_back(syllable, symbol);
  }
}

bool NoiseGenerator::Applicable(NoiseOp op, const std::string& w) const {
  switch (op) {
    case NoiseOp::kInsert: return true;
    case NoiseOp::kDelete: return w.size() >= 2;
    case NoiseOp::kSwap: return !SwapPoints(w).empty();
    case NoiseOp::kVowelDrop: return !InteriorVowels(w).empty();
    case NoiseOp::kRepeatStretch: return !LetterPositions(w).empty();
    case NoiseOp::kSymbolSub: {
      const std::string lower = text::Lowercase(w);
      for (const auto& [syllable, symbol] : inverse_) {
        if (lower.find(syllable) != std::string::npos) return true;
      }
      return false;
    }
  }
  return false;
}

void NoiseGenerator::Apply(NoiseOp op, std::string* w, NoiseRng& rng) const {
  switch (op) {
    case NoiseOp::kInsert: {
      const std::size_t at = rng.Below(w->size() + 1);
      w->insert(at, 1, static_cast<char>('a' + rng.Below(26)));
      break;
    }
    case NoiseOp::kDelete:
      w->erase(rng.Below(w->size()), 1);
      break;
    case NoiseOp::kSwap: {
      const auto points = SwapPoints(*w);
      const std::size_t i = points[rng.Below(points.size())];
      std::swap((*w)[i], (*w)[i + 1]);
      break;
    }
    case NoiseOp::kVowelDrop: {
      const auto vowels = InteriorVowels(*w);
      w->erase(vowels[rng.Below(vowels.size())], 1);
      break;
    }
    case NoiseOp::kRepeatStretch: {
      const auto letters = LetterPositions(*w);
      const std::size_t i = letters[rng.Below(letters.size())];
      const std::size_t times = 3 + rng.Below(4);
      w->insert(i, times - 1, (*w)[i]);
      break;
    }
    case NoiseOp::kSymbolSub: {
      const std::string lower = text::Lowercase(*w);
      // (position, syllable length, symbol) for every occurrence.
      std::vector<std::tuple<std::size_t, std::size_t, std::string>> hits;
      for (const auto& [syllable, symbol] : inverse_) {
        for (std::size_t p = lower.find(syllable); p != std::string::npos;
             p = lower.find(syllable, p + 1)) {
          hits.emplace_back(p, syllable.size(), symbol);
        }
      }
      std::sort(hits.begin(), hits.end());
      const auto& [p, len, symbol] = hits[rng.Below(hits.size())];
      w->replace(p, len, symbol);
      break;
    }
  }
}

PerturbResult NoiseGenerator::PerturbWord(std::string_view word,
                                          const NoiseOps& ops, int count,
                                          std::uint64_t seed) const {
  NoiseRng rng(seed);
  return PerturbWord(word, ops, count, rng);
}

PerturbResult NoiseGenerator::PerturbWord(std::string_view word,
                                          const NoiseOps& ops, int count,
                                          NoiseRng& rng) const {
  if (word.empty()) throw std::invalid_argument("cannot perturb empty word");
  if (count < 0) throw std::invalid_argument("operation count must be >= 0");
  PerturbResult result{std::string(word), false};
  for (int step = 0; step < count; ++step) {
    std::vector<NoiseOp> usable;
    for (NoiseOp op : ops) {
      if (Applicable(op, result.word)) usable.push_back(op);
    }
    if (usable.empty()) {
      result.exhausted = true;
      break;
    }
    Apply(usable[rng.Below(usable.size())], &result.word, rng);
  }
  return result;
}

NoisyCorpus NoiseGenerator::PerturbCorpus(const std::vector<std::string>& lines,
                                          double rate, const NoiseOps& ops,
                                          std::uint64_t seed,
                                          int ops_per_word) const {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw std::invalid_argument("noise rate must lie in [0, 1]");
  }
  NoisyCorpus corpus;
  std::size_t changed = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    NoiseRng rng(seed ^ static_cast<std::uint64_t>(li));
    const std::string& line = lines[li];
    const std::vector<Token> tokens = Tokenize(line);
    std::string noisy;
    std::size_t copied = 0;
    for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
      const Token& t = tokens[pos];
      if (!t.is_word() || !text::HasLetter(t.surface)) continue;
      ++corpus.words;
      if (rng.Unit() >= rate) continue;
      PerturbResult r = PerturbWord(t.surface, ops, ops_per_word, rng);
      if (r.exhausted) ++corpus.exhausted_words;
      if (r.word == t.surface) continue;
      ++changed;
      noisy.append(line, copied, t.span.start - copied);
      noisy += r.word;
      copied = t.span.end;
      corpus.alignment.push_back({li, pos, t.surface, r.word});
    }
    noisy.append(line, copied, std::string::npos);
    corpus.lines.push_back(std::move(noisy));
  }
  corpus.informality_ratio =
      corpus.words == 0 ? 0.0
                        : static_cast<double>(changed) /
                              static_cast<double>(corpus.words);
  return corpus;
}

void WriteAlignment(const std::filesystem::path& path,
                    const std::vector<AlignmentEntry>& alignment) {
  std::ofstream out(path);
  if (!out) throw LoadError(path.string(), "cannot open for writing");
  for (const AlignmentEntry& a : alignment) {
    out << a.line << '\t' << a.pos << '\t' << a.original << '\t' << a.noisy
        << '\n';
  }
  if (!out) throw LoadError(path.string(), "write failed");
}

std::vector<AlignmentEntry> LoadAlignment(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string());
  std::vector<AlignmentEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::Trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos;
         start = tab + 1) {
      fields.push_back(line.substr(start, tab - start));
    }
    fields.push_back(line.substr(start));
    if (fields.size() != 4) {
      throw ParseError(path.string(), line_no, "expected 4 tab-separated "
                                               "fields");
    }
    AlignmentEntry a;
    try {
      a.line = std::stoul(fields[0]);
      a.pos = std::stoul(fields[1]);
    } catch (const std::exception&) {
      throw ParseError(path.string(), line_no, "bad line or position number");
    }
    a.original = fields[2];
    a.noisy = fields[3];
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace normpipe
