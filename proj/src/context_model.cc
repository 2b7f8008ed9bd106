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

#include "normpipe/context_model.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "normpipe/errors.h"
#include "normpipe/text.h"
#include "normpipe/tokenizer.h"

namespace normpipe {

using json = nlohmann::json;

namespace {

constexpr std::string_view kBos = "<s>";
constexpr std::string_view kEos = "</s>";

std::string Pair(std::string_view a, std::string_view b) {
  std::string key(a);
  key += '\x1f';
  key += b;
  return key;
}

double Count(const std::unordered_map<std::string, double>& table,
             const std::string& key) {
  const auto it = table.find(key);
  return it == table.end() ? 0.0 : it->second;
}

std::vector<std::string> TrainingTokens(std::string_view sentence) {
  std::vector<std::string> out;
  for (const Token& t : Tokenize(sentence)) {
    out.push_back(text::Lowercase(t.surface));
  }
  return out;
}

std::vector<Candidate> Truncate(std::vector<Candidate> list,
                                std::size_t top_k) {
  if (list.size() > top_k) list.resize(top_k);
  return list;
}

// Lowercases a fixture key while keeping the mask placeholder intact.
std::string CanonicalKey(std::string_view key) {
  std::string out = text::Lowercase(key);
  const std::string lowered_mask = text::Lowercase(kMaskToken);
  for (std::size_t p = out.find(lowered_mask); p != std::string::npos;
       p = out.find(lowered_mask, p + kMaskToken.size())) {
    out.replace(p, lowered_mask.size(), kMaskToken);
  }
  return out;
}

}  // namespace

std::string MaskQuery::Key() const {
  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) key += ' ';
    key += (i == mask_index) ? std::string(kMaskToken) : tokens[i];
  }
  return key;
}

void MaskQuery::Validate() const {
  if (mask_index >= tokens.size()) {
    throw std::out_of_range("mask index " + std::to_string(mask_index) +
                            " outside a sentence of " +
                            std::to_string(tokens.size()) + " tokens");
  }
  if (top_k == 0) throw std::invalid_argument("top_k must be at least 1");
}

void ValidateCandidates(const std::vector<Candidate>& candidates) {
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    if (c.word.empty()) throw std::invalid_argument("empty candidate word");
    if (text::Lowercase(c.word) != c.word) {
      throw std::invalid_argument("candidate '" + c.word +
                                  "' is not lowercase");
    }
    if (!seen.insert(c.word).second) {
      throw std::invalid_argument("duplicate candidate '" + c.word + "'");
    }
    if (i > 0 && c.model_score > candidates[i - 1].model_score) {
      throw std::invalid_argument("candidates not in descending score order "
                                  "at '" + c.word + "'");
    }
  }
}

// ---------------------------------------------------------------------------
// FixtureModel

FixtureModel FixtureModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path.string());
}

FixtureModel FixtureModel::Parse(std::string_view jsonl,
                                 const std::string& origin) {
  FixtureModel model;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::Trim(line).empty()) continue;
    std::string key;
    std::vector<Candidate> list;
    try {
      const json j = json::parse(line);
      key = CanonicalKey(j.at("key").get<std::string>());
      for (const auto& pair : j.at("candidates")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw std::invalid_argument("candidate must be [word, score]");
        }
        list.push_back({text::Lowercase(pair[0].get<std::string>()),
                        pair[1].get<double>()});
      }
      ValidateCandidates(list);
    } catch (const json::exception& e) {
      throw ParseError(origin, line_no, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(origin, line_no, e.what());
    }
    if (model.entries_.count(key) > 0) {
      throw ParseError(origin, line_no, "duplicate key '" + key + "'");
    }
    model.entries_.emplace(std::move(key), std::move(list));
  }
  return model;
}

void FixtureModel::Add(std::string key, std::vector<Candidate> candidates) {
  ValidateCandidates(candidates);
  entries_[CanonicalKey(key)] = std::move(candidates);
}

std::vector<Candidate> FixtureModel::Predict(const MaskQuery& query) const {
  query.Validate();
  const auto it = entries_.find(query.Key());
  if (it == entries_.end()) return {};
  return Truncate(it->second, query.top_k);
}

std::string FixtureModel::Describe() const {
  return "fixture (" + std::to_string(entries_.size()) + " entries)";
}

// ---------------------------------------------------------------------------
// NgramModel

NgramModel NgramModel::Train(const std::vector<std::string>& sentences,
                             int order) {
  if (order != 2 && order != 3) {
    throw TrainingError("n-gram order must be 2 or 3, got " +
                        std::to_string(order));
  }
  NgramModel m;
  m.order_ = order;
  std::set<std::string> words;
  for (const std::string& sentence : sentences) {
    std::vector<std::string> toks = TrainingTokens(sentence);
    if (toks.empty()) continue;
    std::vector<std::string> padded = {std::string(kBos), std::string(kBos)};
    padded.insert(padded.end(), toks.begin(), toks.end());
    padded.emplace_back(kEos);
    for (std::size_t i = 2; i < padded.size(); ++i) {
      const std::string& w = padded[i];
      m.unigram_[w] += 1;
      m.total_ += 1;
      m.context1_[padded[i - 1]] += 1;
      m.bigram_[Pair(padded[i - 1], w)] += 1;
      const std::string h2 = Pair(padded[i - 2], padded[i - 1]);
      m.context2_[h2] += 1;
      m.trigram_[Pair(h2, w)] += 1;
    }
    for (const std::string& w : toks) {
      if (text::HasLetter(w)) words.insert(w);
    }
  }
  if (m.total_ == 0 || words.empty()) {
    throw TrainingError("n-gram corpus has no words");
  }
  m.types_ = static_cast<double>(m.unigram_.size());
  m.candidates_.assign(words.begin(), words.end());
  return m;
}

NgramModel NgramModel::TrainFromFile(const std::filesystem::path& corpus,
                                     int order) {
  std::ifstream in(corpus);
  if (!in) throw LoadError(corpus.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return Train(lines, order);
}

bool NgramModel::Knows(std::string_view word) const {
  return unigram_.count(std::string(word)) > 0;
}

double NgramModel::LeftLogProb(const std::string& w2, const std::string& w1,
                               const std::string& w) const {
  const double kv = kSmoothing * types_;
  if (order_ == 3) {
    const std::string h2 = Pair(w2, w1);
    const double ch = Count(context2_, h2);
    if (ch > 0) {
      return std::log((Count(trigram_, Pair(h2, w)) + kSmoothing) /
                      (ch + kv));
    }
  }
  const double c1 = Count(context1_, w1);
  if (c1 > 0) {
    return std::log((Count(bigram_, Pair(w1, w)) + kSmoothing) / (c1 + kv));
  }
  return std::log((Count(unigram_, w) + kSmoothing) / (total_ + kv));
}

double NgramModel::RightLogProb(const std::string& w,
                                const std::string& next) const {
  const double kv = kSmoothing * types_;
  return std::log((Count(bigram_, Pair(w, next)) + kSmoothing) /
                  (Count(context1_, w) + kv));
}

double NgramModel::Score(const MaskQuery& query, std::string_view word) const {
  const std::size_t i = query.mask_index;
  auto token = [&](std::ptrdiff_t j) -> std::string {
    if (j < 0) return std::string(kBos);
    if (static_cast<std::size_t>(j) >= query.tokens.size()) {
      return std::string(kEos);
    }
    return text::Lowercase(query.tokens[static_cast<std::size_t>(j)]);
  };
  const auto si = static_cast<std::ptrdiff_t>(i);
  const std::string w(word);
  double score = LeftLogProb(token(si - 2), token(si - 1), w);
  const std::string next = token(si + 1);
  if (Knows(next)) score += RightLogProb(w, next);
  return score;
}

std::vector<Candidate> NgramModel::Predict(const MaskQuery& query) const {
  query.Validate();
  std::vector<Candidate> list;
  list.reserve(candidates_.size());
  for (const std::string& w : candidates_) {
    list.push_back({w, Score(query, w)});
  }
  std::sort(list.begin(), list.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.model_score != b.model_score) {
                return a.model_score > b.model_score;
              }
              return a.word < b.word;
            });
  return Truncate(std::move(list), query.top_k);
}

std::string NgramModel::Describe() const {
  return std::to_string(order_) + "-gram (" +
         std::to_string(candidates_.size()) + " words)";
}

// ---------------------------------------------------------------------------
// RemoteModel

RemoteModel::RemoteModel(RemoteOptions options)
    : options_(std::move(options)),
      in_flight_(std::clamp<std::ptrdiff_t>(options_.max_in_flight, 1,
                                            kSemaphoreMax)) {
  if (options_.url.empty()) {
    throw std::invalid_argument("remote model needs a URL");
  }
  if (options_.max_attempts < 1) options_.max_attempts = 1;
}

std::vector<Candidate> RemoteModel::Attempt(const std::string& body,
                                            int attempt) const {
  httplib::Client client(options_.url);
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
      options_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());

  auto res = client.Post("/v1/predict", body, "application/json");
  if (!res) {
    throw TransportError(
        "predict request failed: " + httplib::to_string(res.error()), 0,
        attempt, true);
  }
  if (res->status != 200) {
    std::string detail;
    try {
      detail = json::parse(res->body).value("error", "");
    } catch (const json::exception&) {
    }
    throw TransportError("predict service returned HTTP " +
                             std::to_string(res->status) +
                             (detail.empty() ? "" : ": " + detail),
                         res->status, attempt,
                         res->status >= 500 || res->status == 429);
  }
  std::vector<Candidate> list;
  try {
    const json reply = json::parse(res->body);
    for (const auto& c : reply.at("candidates")) {
      list.push_back(
          {c.at("word").get<std::string>(), c.at("score").get<double>()});
    }
    ValidateCandidates(list);
  } catch (const std::exception& e) {
    throw TransportError(std::string("malformed predict reply: ") + e.what(),
                         res->status, attempt, false);
  }
  return list;
}

std::vector<Candidate> RemoteModel::Predict(const MaskQuery& query) const {
  query.Validate();
  json body = {{"tokens", query.tokens},
               {"mask_index", query.mask_index},
               {"top_k", query.top_k}};
  body["tokens"][query.mask_index] = std::string(kMaskToken);
  const std::string payload = body.dump();

  in_flight_.acquire();
  struct Release {
    std::counting_semaphore<kSemaphoreMax>* s;
    ~Release() { s->release(); }
  } release{&in_flight_};

  auto delay = options_.backoff;
  for (int attempt = 1;; ++attempt) {
    try {
      return Truncate(Attempt(payload, attempt), query.top_k);
    } catch (const TransportError& e) {
      if (!e.retryable() || attempt >= options_.max_attempts) throw;
    }
    std::this_thread::sleep_for(delay);
    delay *= 2;
  }
}

std::string RemoteModel::Describe() const {
  return "remote (" + options_.url + ")";
}

// ---------------------------------------------------------------------------

std::unique_ptr<ContextModel> MakeContextModel(std::string_view spec,
                                               const BackendOptions& options) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("backend must look like scheme:target, got '" +
                                std::string(spec) + "'");
  }
  const std::string scheme(spec.substr(0, colon));
  const std::string target(spec.substr(colon + 1));
  if (target.empty()) {
    throw std::invalid_argument("backend '" + scheme + "' needs a target");
  }
  if (scheme == "fixture") {
    return std::make_unique<FixtureModel>(FixtureModel::Load(target));
  }
  if (scheme == "ngram") {
    return std::make_unique<NgramModel>(
        NgramModel::TrainFromFile(target, options.ngram_order));
  }
  if (scheme == "remote") {
    RemoteOptions remote = options.remote;
    remote.url = target;
    return std::make_unique<RemoteModel>(std::move(remote));
  }
  throw std::invalid_argument("unknown backend scheme '" + scheme + "'");
}

}  // namespace normpipe
