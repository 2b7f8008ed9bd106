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

#include "normpipe/scoring.h"

#include <cmath>
#include <stdexcept>

#include "normpipe/errors.h"
#include "normpipe/phonetics.h"

namespace normpipe {

std::string_view EndpointRuleName(EndpointRule rule) {
  switch (rule) {
    case EndpointRule::kBoost: return "boost";
    case EndpointRule::kDilute: return "dilute";
    case EndpointRule::kUnchanged: return "unchanged";
  }
  return "unchanged";
}

namespace {

EndpointRule ParseEndpointRule(std::string_view name) {
  if (name == "boost") return EndpointRule::kBoost;
  if (name == "dilute") return EndpointRule::kDilute;
  if (name == "unchanged") return EndpointRule::kUnchanged;
  throw std::invalid_argument("unknown endpoint rule '" + std::string(name) +
                              "'");
}

}  // namespace

double ContextProbability(std::size_t rank, std::size_t list_cap) {
  if (list_cap == 0) throw std::invalid_argument("list cap must be positive");
  if (rank >= list_cap) {
    throw std::out_of_range("rank " + std::to_string(rank) +
                            " is outside the candidate list cap " +
                            std::to_string(list_cap));
  }
  return 1.0 - static_cast<double>(rank) / static_cast<double>(list_cap);
}

double Psim(std::string_view x, std::string_view y) {
  const double m = NormalizedLevenshtein(Metaphone(x).code, Metaphone(y).code);
  const double s = NormalizedLevenshtein(Soundex(x).code, Soundex(y).code);
  const double f =
      NormalizedLevenshtein(FuzzySoundex(x).code, FuzzySoundex(y).code);
  return 0.6 * m + 0.2 * s + 0.2 * f;
}

SimilarityBreakdown ScoreSimilarity(std::string_view candidate,
                                    const WordForms& observed) {
  SimilarityBreakdown b;
  b.ssim = SsimBreakdown(candidate, observed.string_form);
  b.s_sim = b.ssim.value;
  try {
    b.p_sim = Psim(candidate, observed.phonetic_form);
  } catch (const EncodingError&) {
    b.p_sim = 0.0;
    b.phonetic_error = true;
  }
  b.base = 0.65 * b.p_sim + 0.35 * b.s_sim;

  const std::string_view y = observed.phonetic_form;
  if (candidate.empty() || y.empty()) {
    b.rule = EndpointRule::kUnchanged;
  } else {
    const bool first = candidate.front() == y.front();
    const bool last = candidate.back() == y.back();
    if (first && last) {
      b.rule = EndpointRule::kBoost;
    } else if (!first && !last) {
      b.rule = EndpointRule::kDilute;
    } else {
      b.rule = EndpointRule::kUnchanged;
    }
  }
  switch (b.rule) {
    case EndpointRule::kBoost: b.sim_score = b.base * b.base; break;
    case EndpointRule::kDilute: b.sim_score = std::sqrt(b.base); break;
    case EndpointRule::kUnchanged: b.sim_score = b.base; break;
  }
  return b;
}

SimilarityBreakdown ScoreSimilarity(std::string_view candidate,
                                    std::string_view observed) {
  return ScoreSimilarity(candidate,
                         WordForms{std::string(observed), std::string(observed)});
}

ScoredCandidate ScoreCandidate(std::string_view word, std::size_t rank_index,
                               std::size_t list_cap,
                               const WordForms& observed) {
  ScoredCandidate c;
  c.word = std::string(word);
  c.rank_index = rank_index;
  c.p_context = ContextProbability(rank_index, list_cap);
  const SimilarityBreakdown b = ScoreSimilarity(word, observed);
  c.s_sim = b.s_sim;
  c.p_sim = b.p_sim;
  c.sim_score = b.sim_score;
  c.rule = b.rule;
  c.phonetic_error = b.phonetic_error;
  c.final_score = c.p_context * c.sim_score;
  c.compared_form = observed.phonetic_form;
  return c;
}

bool BetterCandidate(const ScoredCandidate& a, const ScoredCandidate& b) {
  if (a.final_score != b.final_score) return a.final_score > b.final_score;
  if (a.rank_index != b.rank_index) return a.rank_index < b.rank_index;
  return a.word < b.word;
}

std::optional<std::size_t> SelectReplacement(
    const std::vector<ScoredCandidate>& scored, double threshold) {
  if (scored.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < scored.size(); ++i) {
    if (BetterCandidate(scored[i], scored[best])) best = i;
  }
  if (scored[best].final_score < threshold) return std::nullopt;
  return best;
}

nlohmann::json ToJson(const ScoredCandidate& c) {
  nlohmann::json j = {
      {"word", c.word},
      {"rank_index", c.rank_index},
      {"p_context", c.p_context},
      {"s_sim", c.s_sim},
      {"p_sim", c.p_sim},
      {"sim_score", c.sim_score},
      {"final_score", c.final_score},
      {"endpoint_rule", EndpointRuleName(c.rule)},
      {"compared_form", c.compared_form},
  };
  if (c.phonetic_error) j["phonetic_error"] = true;
  return j;
}

ScoredCandidate ScoredCandidateFromJson(const nlohmann::json& j) {
  ScoredCandidate c;
  c.word = j.at("word").get<std::string>();
  c.rank_index = j.at("rank_index").get<std::size_t>();
  c.p_context = j.at("p_context").get<double>();
  c.s_sim = j.at("s_sim").get<double>();
  c.p_sim = j.at("p_sim").get<double>();
  c.sim_score = j.at("sim_score").get<double>();
  c.final_score = j.at("final_score").get<double>();
  c.rule = ParseEndpointRule(j.at("endpoint_rule").get<std::string>());
  c.compared_form = j.value("compared_form", std::string());
  c.phonetic_error = j.value("phonetic_error", false);
  return c;
}

}  // namespace normpipe
