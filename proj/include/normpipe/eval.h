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

#ifndef NORMPIPE_EVAL_H_
#define NORMPIPE_EVAL_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "normpipe/noise.h"
#include "normpipe/pipeline.h"

namespace normpipe {

struct RatingRecord {
  std::string tuple_id;
  std::vector<int> ratings;
};

// CSV rows "tuple_id,rating"; an optional header row is skipped. Rows with
// the same id are merged in order of first appearance. Ratings must be
// integers in 1..5. Throws ParseError.
std::vector<RatingRecord> ParseRatings(std::istream& in,
                                       const std::string& origin = "<ratings>");
std::vector<RatingRecord> LoadRatings(const std::filesystem::path& path);

// (20 / N) * sum of per-tuple mean ratings, a percentage in [20, 100].
// Throws EvaluationError for no records or a record without ratings.
double RatingAccuracy(const std::vector<RatingRecord>& records);

struct WordMetrics {
  std::size_t lines = 0;
  std::size_t gold_words = 0;
  std::size_t matched_words = 0;
  double word_acc = 0;
  // Only with an alignment: accuracy on the positions that were perturbed.
  std::optional<double> changed_word_acc;
  std::size_t changed_words = 0;
  // Share of originally correct words the system altered. Needs an
  // alignment or the system's input lines.
  std::optional<double> unchanged_false_change;
  std::size_t unchanged_words = 0;
  std::size_t false_changes = 0;
};

struct WordEvalOptions {
  // Positions perturbed by the noise generator.
  const std::vector<AlignmentEntry>* alignment = nullptr;
  // The lines the system was given; tokens equal to gold count as
  // originally correct. Ignored when an alignment is present.
  const std::vector<std::string>* source = nullptr;
  // When set, only gold words accepted by the filter count towards
  // unchanged_false_change.
  std::function<bool(std::string_view)> unchanged_filter;
};

// Compares system lines to gold lines token by token (lowercased, word
// tokens only). Lines with equal token counts are compared positionally,
// others through a minimum edit alignment. Throws EvaluationError when the
// line counts differ.
WordMetrics EvaluateWords(const std::vector<std::string>& system,
                          const std::vector<std::string>& gold,
                          const WordEvalOptions& options = {});

nlohmann::json ToJson(const WordMetrics& m);

struct RunSummary {
  std::size_t sentences = 0;
  std::size_t predictions_made = 0;
  std::size_t transport_failures = 0;
  std::optional<double> mean_latency_ms;
  std::optional<WordMetrics> words;
};

RunSummary Summarize(const std::vector<NormalizationTrace>& traces,
                     std::optional<WordMetrics> words = {});

// Outputs regrouped by the traces' line numbers, `lines` entries long.
std::vector<std::string> OutputsByLine(
    const std::vector<NormalizationTrace>& traces, std::size_t lines);

struct CompareReport {
  std::string label_a = "a";
  std::string label_b = "b";
  RunSummary a;
  RunSummary b;
};

// Throws EvaluationError when the two runs were not over the same
// sentences.
CompareReport Compare(const std::vector<NormalizationTrace>& a,
                      const std::vector<NormalizationTrace>& b,
                      std::optional<WordMetrics> words_a = {},
                      std::optional<WordMetrics> words_b = {});

nlohmann::json ToJson(const CompareReport& report);
// Aligned plain-text table with one row per metric and a delta column.
std::string FormatTable(const CompareReport& report);

// One JSON trace per line.
std::vector<NormalizationTrace> LoadTraces(const std::filesystem::path& path);
std::vector<std::string> ReadLines(const std::filesystem::path& path);

}  // namespace normpipe

#endif  // NORMPIPE_EVAL_H_
