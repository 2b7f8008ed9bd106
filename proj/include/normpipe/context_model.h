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

#ifndef NORMPIPE_CONTEXT_MODEL_H_
#define NORMPIPE_CONTEXT_MODEL_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <semaphore>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace normpipe {

inline constexpr std::string_view kMaskToken = "[MASK]";

// A sentence with one position to predict.
struct MaskQuery {
  std::vector<std::string> tokens;
  std::size_t mask_index = 0;
  std::size_t top_k = 5000;

  // Tokens joined by single spaces with "[MASK]" at mask_index.
  std::string Key() const;
  // Throws std::out_of_range / std::invalid_argument on a bad query.
  void Validate() const;
};

struct Candidate {
  std::string word;
  double model_score = 0;

  bool operator==(const Candidate&) const = default;
};

// Masked-token predictor. Implementations are safe to share between
// threads; Predict returns at most top_k unique lowercase words sorted by
// descending score.
class ContextModel {
 public:
  virtual ~ContextModel() = default;
  virtual std::vector<Candidate> Predict(const MaskQuery& query) const = 0;
  virtual std::string Describe() const = 0;
};

// Replays stored prediction lists. Unknown keys give an empty list.
class FixtureModel : public ContextModel {
 public:
  // Each line: {"key": "<masked sentence>", "candidates": [["w", s], ...]}.
  // Blank lines are skipped. Throws LoadError or ParseError (with the line
  // number) for unreadable files, bad JSON, duplicate keys, duplicate
  // words or lists that are not in descending score order.
  static FixtureModel Load(const std::filesystem::path& path);

  // Same format, read from a string. `origin` names the source in errors.
  static FixtureModel Parse(std::string_view jsonl,
                            const std::string& origin = "<fixture>");

  FixtureModel() = default;
  void Add(std::string key, std::vector<Candidate> candidates);

  std::vector<Candidate> Predict(const MaskQuery& query) const override;
  std::string Describe() const override;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<Candidate>> entries_;
};

// Word n-gram model (order 2 or 3) with add-k smoothing and backoff. A
// candidate w at the mask scores
//   log P(w | left context) + log P(next | w)
// where the right term is used only when the next token was seen in
// training. Candidates are all trained words containing a letter.
class NgramModel : public ContextModel {
 public:
  static constexpr double kSmoothing = 0.01;

  // Sentences are tokenized like pipeline input and lowercased. Throws
  // TrainingError when there is nothing to train on or the order is not 2
  // or 3.
  static NgramModel Train(const std::vector<std::string>& sentences,
                          int order = 3);
  // One sentence per line.
  static NgramModel TrainFromFile(const std::filesystem::path& corpus,
                                  int order = 3);

  std::vector<Candidate> Predict(const MaskQuery& query) const override;
  std::string Describe() const override;

  int order() const { return order_; }
  std::size_t vocabulary_size() const { return candidates_.size(); }
  bool Knows(std::string_view word) const;
  double Score(const MaskQuery& query, std::string_view word) const;

 private:
  double LeftLogProb(const std::string& w2, const std::string& w1,
                     const std::string& w) const;
  double RightLogProb(const std::string& w, const std::string& next) const;

  int order_ = 3;
  double types_ = 0;
  double total_ = 0;
  std::unordered_map<std::string, double> unigram_;
  // Counts of a token used as left context (followed by anything).
  std::unordered_map<std::string, double> context1_;
  std::unordered_map<std::string, double> context2_;
  std::unordered_map<std::string, double> bigram_;
  std::unordered_map<std::string, double> trigram_;
  std::vector<std::string> candidates_;
};

struct RemoteOptions {
  std::string url;
  std::chrono::milliseconds timeout{10000};
  int max_attempts = 3;
  std::chrono::milliseconds backoff{100};
  std::ptrdiff_t max_in_flight = 4;
};

// Client for the /v1/predict protocol. Connection failures, 5xx and 429
// replies are retried with exponential backoff; other 4xx replies are not.
// Throws TransportError once attempts are exhausted.
class RemoteModel : public ContextModel {
 public:
  explicit RemoteModel(RemoteOptions options);

  std::vector<Candidate> Predict(const MaskQuery& query) const override;
  std::string Describe() const override;

 private:
  static constexpr std::ptrdiff_t kSemaphoreMax = 1024;

  std::vector<Candidate> Attempt(const std::string& body, int attempt) const;

  RemoteOptions options_;
  mutable std::counting_semaphore<kSemaphoreMax> in_flight_;
};

// Checks the ranked-list contract: lowercase non-empty words, no
// duplicates, scores non-increasing. Throws std::invalid_argument.
void ValidateCandidates(const std::vector<Candidate>& candidates);

struct BackendOptions {
  int ngram_order = 3;
  RemoteOptions remote;
};

// "fixture:<file>", "ngram:<corpus>" or "remote:<url>". Throws
// std::invalid_argument for an unknown scheme.
std::unique_ptr<ContextModel> MakeContextModel(std::string_view spec,
                                               const BackendOptions& options);

}  // namespace normpipe

#endif  // NORMPIPE_CONTEXT_MODEL_H_
