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

#ifndef NORMPIPE_SCORING_H_
#define NORMPIPE_SCORING_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "normpipe/string_metrics.h"

namespace normpipe {

// The two spellings of an observed token that scoring compares against.
// `phonetic_form` is always symbol-substituted ("2morrow" -> "tomorrow");
// `string_form` is either the same or the raw lowercase token, depending on
// the substitution scope.
struct WordForms {
  std::string string_form;
  std::string phonetic_form;
};

// How the first/last-letter rule changed the base score.
enum class EndpointRule { kBoost, kDilute, kUnchanged };

std::string_view EndpointRuleName(EndpointRule rule);

// 1 - rank / list_cap for a 0-based rank. Throws std::out_of_range when
// rank >= list_cap, and std::invalid_argument when list_cap is 0.
double ContextProbability(std::size_t rank, std::size_t list_cap);

// 0.6 NL(metaphone) + 0.2 NL(soundex) + 0.2 NL(fuzzy soundex). Throws
// EncodingError if either word has no letters.
double Psim(std::string_view x, std::string_view y);

struct SimilarityBreakdown {
  SsimComponents ssim;
  double s_sim = 0;
  double p_sim = 0;
  double base = 0;
  EndpointRule rule = EndpointRule::kUnchanged;
  double sim_score = 0;
  // Set when phonetic encoding failed and p_sim was taken as 0.
  bool phonetic_error = false;
};

// Squares the base when both the first and the last letters of the
// candidate and the observed phonetic form agree, takes the square root
// when both differ, and leaves it alone otherwise.
SimilarityBreakdown ScoreSimilarity(std::string_view candidate,
                                    const WordForms& observed);

// Convenience overload when both forms are the same string.
SimilarityBreakdown ScoreSimilarity(std::string_view candidate,
                                    std::string_view observed);

struct ScoredCandidate {
  std::string word;
  std::size_t rank_index = 0;
  double p_context = 0;
  double s_sim = 0;
  double p_sim = 0;
  double sim_score = 0;
  double final_score = 0;
  EndpointRule rule = EndpointRule::kUnchanged;
  bool phonetic_error = false;
  // Spelling of the observed token this row was scored against.
  std::string compared_form;
};

ScoredCandidate ScoreCandidate(std::string_view word, std::size_t rank_index,
                               std::size_t list_cap,
                               const WordForms& observed);

// Index of the best candidate if its final score reaches `threshold`.
// Ties go to the lower rank, then to the lexicographically smaller word.
std::optional<std::size_t> SelectReplacement(
    const std::vector<ScoredCandidate>& scored, double threshold = 0.25);

// Orders by final score descending with the same tie-breaks as
// SelectReplacement.
bool BetterCandidate(const ScoredCandidate& a, const ScoredCandidate& b);

nlohmann::json ToJson(const ScoredCandidate& c);
ScoredCandidate ScoredCandidateFromJson(const nlohmann::json& j);

}  // namespace normpipe

#endif  // NORMPIPE_SCORING_H_
