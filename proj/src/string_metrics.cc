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

#include "normpipe/string_metrics.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace normpipe {
namespace {

constexpr double kWinklerScale = 0.1;
constexpr std::size_t kWinklerPrefix = 4;
constexpr double kWinklerThreshold = 0.7;

std::set<std::string_view> NgramSet(std::string_view s, int n) {
  std::set<std::string_view> grams;
  const auto len = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + len <= s.size(); ++i) {
    grams.insert(s.substr(i, len));
  }
  return grams;
}

}  // namespace

std::size_t EditDistance(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double NormalizedLevenshtein(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(EditDistance(a, b)) /
                   static_cast<double>(longest);
}

double Jaro(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  // Greedy matching can depend on argument order; fix an order so the
  // result is symmetric.
  if (b < a) std::swap(a, b);
  const std::size_t longest = std::max(a.size(), b.size());
  const std::size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;

  std::vector<bool> a_hit(a.size()), b_hit(b.size());
  std::size_t matches = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(i + window + 1, b.size());
    for (std::size_t j = lo; j < hi; ++j) {
      if (!b_hit[j] && a[i] == b[j]) {
        a_hit[i] = b_hit[j] = true;
        ++matches;
        break;
      }
    }
  }
  if (matches == 0) return 0.0;

  std::size_t half_transpositions = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a_hit[i]) continue;
    while (!b_hit[k]) ++k;
    if (a[i] != b[k]) ++half_transpositions;
    ++k;
  }
  const double m = static_cast<double>(matches);
  const double t = static_cast<double>(half_transpositions) / 2.0;
  return (m / static_cast<double>(a.size()) +
          m / static_cast<double>(b.size()) + (m - t) / m) /
         3.0;
}

double JaroWinkler(std::string_view a, std::string_view b) {
  const double jaro = Jaro(a, b);
  if (jaro <= kWinklerThreshold) return jaro;
  std::size_t prefix = 0;
  const std::size_t cap = std::min({a.size(), b.size(), kWinklerPrefix});
  while (prefix < cap && a[prefix] == b[prefix]) ++prefix;
  return jaro + static_cast<double>(prefix) * kWinklerScale * (1.0 - jaro);
}

double NgramSetCosine(std::string_view a, std::string_view b, int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("n-gram size must be 1 or 2");
  const auto ga = NgramSet(a, n);
  const auto gb = NgramSet(b, n);
  if (ga.empty() && gb.empty()) return 1.0;
  if (ga.empty() || gb.empty()) return 0.0;
  std::size_t shared = 0;
  for (const auto& g : ga) shared += gb.count(g);
  return static_cast<double>(shared) /
         std::sqrt(static_cast<double>(ga.size()) *
                   static_cast<double>(gb.size()));
}

SsimComponents SsimBreakdown(std::string_view x, std::string_view y) {
  SsimComponents c;
  c.levenshtein = NormalizedLevenshtein(x, y);
  c.jaro_winkler = JaroWinkler(x, y);
  c.unigram_cosine = NgramSetCosine(x, y, 1);
  c.bigram_cosine = NgramSetCosine(x, y, 2);
  c.value = 0.6 * c.levenshtein + 0.2 * c.jaro_winkler +
            0.15 * c.unigram_cosine + 0.05 * c.bigram_cosine;
  return c;
}

double Ssim(std::string_view x, std::string_view y) {
  return SsimBreakdown(x, y).value;
}

}  // namespace normpipe
