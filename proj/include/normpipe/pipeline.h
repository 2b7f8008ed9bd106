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

#ifndef NORMPIPE_PIPELINE_H_
#define NORMPIPE_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "normpipe/context_model.h"
#include "normpipe/lexicon.h"
#include "normpipe/ner.h"
#include "normpipe/scoring.h"
#include "normpipe/tokenizer.h"

namespace normpipe {

enum class Strategy {
  // Mask only tokens classified as unnormalized.
  kOovMasking,
  // Mask every normalized or unnormalized word.
  kWordByWordMasking,
};

// Where symbol substitution feeds the similarity measures. kBoth compares
// string similarity on the substituted form too; kPhoneticOnly keeps the
// raw lowercase token for string similarity.
enum class SubstitutionScope { kPhoneticOnly, kBoth };

std::string_view StrategyName(Strategy strategy);
// "oov" / "wbw" (also the long names); throws std::invalid_argument.
Strategy ParseStrategy(std::string_view name);
std::string_view SubstitutionScopeName(SubstitutionScope scope);
SubstitutionScope ParseSubstitutionScope(std::string_view name);

struct NormalizationConfig {
  Strategy strategy = Strategy::kOovMasking;
  std::size_t list_cap = 5000;
  double threshold = 0.25;
  SubstitutionScope substitution_scope = SubstitutionScope::kBoth;
  // Feed earlier replacements into later queries instead of masking
  // against the original tokens.
  bool progressive_context = false;
  // Scored candidates kept per decision in the trace.
  std::size_t trace_top_n = 3;
  bool record_timing = false;

  // Throws std::invalid_argument when list_cap is 0 or the threshold is
  // outside [0, 1].
  void Validate() const;
};

struct TokenDecision {
  std::string token;
  Category category = Category::kNormalized;
  TokenKind kind = TokenKind::kWord;
  bool masked = false;
  std::size_t candidates_considered = 0;
  // Replacement or expansion; empty when the token was kept.
  std::optional<std::string> chosen;
  std::optional<double> final_score;
  std::vector<ScoredCandidate> top_candidates;
};

struct NormalizationTrace {
  // Input line the sentence came from (0-based); set by batch callers.
  std::size_t line = 0;
  std::string sentence;
  std::string output;
  std::vector<TokenDecision> decisions;
  double informality_ratio = 0;
  std::size_t predictions_made = 0;
  std::size_t transport_failures = 0;
  std::vector<std::string> warnings;
  std::optional<double> elapsed_ms;
};

nlohmann::json TraceToJson(const NormalizationTrace& trace);
NormalizationTrace TraceFromJson(const nlohmann::json& j);

struct SentenceResult {
  std::string output;
  NormalizationTrace trace;
};

struct TextResult {
  std::string output;
  std::vector<NormalizationTrace> traces;
};

// Shortens every run of three or more identical letters to `max_run`
// letters ("coooool", 2 -> "cool"). Shorter runs are left alone.
std::string CollapseRepeats(std::string_view word, std::size_t max_run = 2);

// Forms compared against candidates: the word itself plus, when it has a
// run of three or more letters, the run->2 and run->1 collapses. Unique, in
// that order.
std::vector<std::string> RepeatVariants(std::string_view word);

// Runs either normalization strategy over sentences. Dependencies are
// borrowed and must outlive the normalizer; all methods are const and safe
// to call from several threads.
class Normalizer {
 public:
  Normalizer(const Lexicon& lexicon, const EntityRecognizer& recognizer,
             const ContextModel& model, NormalizationConfig config);

  // Output is lowercase, tokens joined by single spaces ("i am with her .").
  // A failing context model keeps the token and records a warning.
  SentenceResult NormalizeSentence(std::string_view sentence) const;

  // Splits into sentences, normalizes them independently on up to `jobs`
  // threads and joins outputs with single spaces in input order.
  TextResult NormalizeText(std::string_view text, int jobs = 1) const;

  // NormalizeText for every line, sharing one pool of `jobs` threads across
  // all sentences. Traces carry their line index.
  std::vector<TextResult> NormalizeLines(const std::vector<std::string>& lines,
                                         int jobs = 1) const;

  // Scores one observed token against a ranked list, trying repeat
  // variants and keeping each candidate's best variant.
  std::vector<ScoredCandidate> ScoreCandidates(
      std::string_view observed, const std::vector<Candidate>& ranked) const;

  const NormalizationConfig& config() const { return config_; }

 private:
  WordForms FormsFor(std::string_view variant) const;

  const Lexicon* lexicon_;
  const EntityRecognizer* recognizer_;
  const ContextModel* model_;
  NormalizationConfig config_;
};

}  // namespace normpipe

#endif  // NORMPIPE_PIPELINE_H_
