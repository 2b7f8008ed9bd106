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

#include "normpipe/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "normpipe/errors.h"
#include "normpipe/text.h"

namespace normpipe {

using json = nlohmann::json;

std::string_view StrategyName(Strategy strategy) {
  return strategy == Strategy::kOovMasking ? "oov" : "wbw";
}

Strategy ParseStrategy(std::string_view name) {
  if (name == "oov" || name == "oov_masking") return Strategy::kOovMasking;
  if (name == "wbw" || name == "word_by_word") {
    return Strategy::kWordByWordMasking;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) +
                              "' (expected oov or wbw)");
}

std::string_view SubstitutionScopeName(SubstitutionScope scope) {
  return scope == SubstitutionScope::kBoth ? "both" : "phonetic";
}

SubstitutionScope ParseSubstitutionScope(std::string_view name) {
  if (name == "both") return SubstitutionScope::kBoth;
  if (name == "phonetic" || name == "phonetic_only") {
    return SubstitutionScope::kPhoneticOnly;
  }
  throw std::invalid_argument("unknown substitution scope '" +
                              std::string(name) + "' (expected both or "
                              "phonetic)");
}

void NormalizationConfig::Validate() const {
  if (list_cap == 0) throw std::invalid_argument("list cap must be >= 1");
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0, 1]");
  }
}

std::string CollapseRepeats(std::string_view word, std::size_t max_run) {
  if (max_run == 0) throw std::invalid_argument("max_run must be >= 1");
  std::string result;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    const std::size_t len = j - i;
    const std::size_t keep =
        (text::IsAsciiAlpha(word[i]) && len >= 3) ? std::min(len, max_run)
                                                  : len;
    result.append(keep, word[i]);
    i = j;
  }
  return result;
}

std::vector<std::string> RepeatVariants(std::string_view word) {
  std::vector<std::string> out = {std::string(word)};
  for (std::size_t run : {2, 1}) {
    std::string v = CollapseRepeats(word, run);
    if (std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(std::move(v));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trace serialization

namespace {

std::string_view KindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kSymbol: return "symbol";
  }
  return "word";
}

TokenKind ParseKind(std::string_view name) {
  if (name == "word") return TokenKind::kWord;
  if (name == "punctuation") return TokenKind::kPunctuation;
  if (name == "symbol") return TokenKind::kSymbol;
  throw std::invalid_argument("unknown token kind '" + std::string(name) +
                              "'");
}

}  // namespace

json TraceToJson(const NormalizationTrace& trace) {
  json decisions = json::array();
  for (const TokenDecision& d : trace.decisions) {
    json top = json::array();
    for (const ScoredCandidate& c : d.top_candidates) top.push_back(ToJson(c));
    decisions.push_back({
        {"token", d.token},
        {"category", CategoryName(d.category)},
        {"kind", KindName(d.kind)},
        {"masked", d.masked},
        {"candidates_considered", d.candidates_considered},
        {"chosen", d.chosen ? json(*d.chosen) : json(nullptr)},
        {"final_score", d.final_score ? json(*d.final_score) : json(nullptr)},
        {"top_candidates", std::move(top)},
    });
  }
  json j = {
      {"line", trace.line},
      {"sentence", trace.sentence},
      {"output", trace.output},
      {"decisions", std::move(decisions)},
      {"informality_ratio", trace.informality_ratio},
      {"predictions_made", trace.predictions_made},
      {"transport_failures", trace.transport_failures},
      {"warnings", trace.warnings},
  };
  if (trace.elapsed_ms) j["elapsed_ms"] = *trace.elapsed_ms;
  return j;
}

NormalizationTrace TraceFromJson(const json& j) {
  NormalizationTrace t;
  t.line = j.value("line", std::size_t{0});
  t.sentence = j.at("sentence").get<std::string>();
  t.output = j.value("output", std::string());
  t.informality_ratio = j.at("informality_ratio").get<double>();
  t.predictions_made = j.at("predictions_made").get<std::size_t>();
  t.transport_failures = j.value("transport_failures", std::size_t{0});
  t.warnings = j.value("warnings", std::vector<std::string>{});
  if (j.contains("elapsed_ms")) t.elapsed_ms = j["elapsed_ms"].get<double>();
  for (const json& d : j.at("decisions")) {
    TokenDecision td;
    td.token = d.at("token").get<std::string>();
    td.category = ParseCategory(d.at("category").get<std::string>());
    td.kind = ParseKind(d.value("kind", std::string("word")));
    td.masked = d.at("masked").get<bool>();
    td.candidates_considered = d.at("candidates_considered").get<std::size_t>();
    if (!d.at("chosen").is_null()) td.chosen = d["chosen"].get<std::string>();
    if (!d.at("final_score").is_null()) {
      td.final_score = d["final_score"].get<double>();
    }
    for (const json& c : d.value("top_candidates", json::array())) {
      td.top_candidates.push_back(ScoredCandidateFromJson(c));
    }
    t.decisions.push_back(std::move(td));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Normalizer

Normalizer::Normalizer(const Lexicon& lexicon,
                       const EntityRecognizer& recognizer,
                       const ContextModel& model, NormalizationConfig config)
    : lexicon_(&lexicon),
      recognizer_(&recognizer),
      model_(&model),
      config_(std::move(config)) {
  config_.Validate();
}

WordForms Normalizer::FormsFor(std::string_view variant) const {
  WordForms forms;
  forms.phonetic_form = lexicon_->SubstituteSymbols(variant);
  if (forms.phonetic_form.empty()) forms.phonetic_form = std::string(variant);
  forms.string_form = config_.substitution_scope == SubstitutionScope::kBoth
                          ? forms.phonetic_form
                          : std::string(variant);
  return forms;
}

std::vector<ScoredCandidate> Normalizer::ScoreCandidates(
    std::string_view observed, const std::vector<Candidate>& ranked) const {
  std::vector<WordForms> variants;
  for (const std::string& v : RepeatVariants(text::Lowercase(observed))) {
    variants.push_back(FormsFor(v));
  }
  std::vector<ScoredCandidate> scored;
  const std::size_t n = std::min(ranked.size(), config_.list_cap);
  scored.reserve(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    ScoredCandidate best;
    bool have = false;
    for (const WordForms& forms : variants) {
      ScoredCandidate c =
          ScoreCandidate(ranked[rank].word, rank, config_.list_cap, forms);
      if (!have || c.sim_score > best.sim_score) {
        best = std::move(c);
        have = true;
      }
    }
    scored.push_back(std::move(best));
  }
  return scored;
}

namespace {

// A token after expansion splicing. Expanded phrases become several items
// sharing one source token.
struct Item {
  std::string text;
  std::size_t source = 0;
  bool spliced = false;
};

}  // namespace

SentenceResult Normalizer::NormalizeSentence(std::string_view sentence) const {
  const auto start = std::chrono::steady_clock::now();
  NormalizationTrace trace;
  trace.sentence = std::string(sentence);

  const Sentence analyzed =
      AnalyzeSentence(sentence, *lexicon_, *recognizer_, &trace.warnings);
  trace.informality_ratio = analyzed.informality_ratio;
  const std::vector<Token>& tokens = analyzed.tokens;

  std::vector<Item> items;
  trace.decisions.resize(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    TokenDecision& d = trace.decisions[i];
    d.token = t.surface;
    d.category = t.category;
    d.kind = t.kind;
    const bool expands = t.is_word() && (t.category == Category::kAcronym ||
                                         t.category == Category::kContraction);
    if (expands) {
      const std::string phrase = *lexicon_->Expand(t.normalized_surface);
      d.chosen = phrase;
      for (std::string_view w : text::SplitWhitespace(phrase)) {
        items.push_back({text::Lowercase(w), i, true});
      }
    } else {
      items.push_back({text::Lowercase(t.surface), i, false});
    }
  }

  auto should_mask = [&](const Item& item) {
    if (item.spliced) return false;
    const Token& t = tokens[item.source];
    if (!t.is_word()) return false;
    if (config_.strategy == Strategy::kOovMasking) {
      return t.category == Category::kUnnormalized;
    }
    return t.category == Category::kUnnormalized ||
           t.category == Category::kNormalized;
  };

  std::vector<std::string> original;
  original.reserve(items.size());
  for (const Item& item : items) original.push_back(item.text);
  std::vector<std::string> current = original;

  for (std::size_t pos = 0; pos < items.size(); ++pos) {
    const Item& item = items[pos];
    if (!should_mask(item)) continue;
    TokenDecision& d = trace.decisions[item.source];
    d.masked = true;
    ++trace.predictions_made;

    MaskQuery query;
    query.tokens = config_.progressive_context ? current : original;
    query.mask_index = pos;
    query.top_k = config_.list_cap;

    std::vector<Candidate> ranked;
    try {
      ranked = model_->Predict(query);
    } catch (const TransportError& e) {
      ++trace.transport_failures;
      trace.warnings.push_back("context model failed for '" + item.text +
                               "', kept original: " + e.what());
      continue;
    }
    std::vector<ScoredCandidate> scored = ScoreCandidates(item.text, ranked);
    d.candidates_considered = scored.size();

    const auto pick = SelectReplacement(scored, config_.threshold);
    if (pick) {
      const ScoredCandidate& best = scored[*pick];
      d.final_score = best.final_score;
      if (best.word != item.text) {
        d.chosen = best.word;
        current[pos] = best.word;
      }
    }
    std::sort(scored.begin(), scored.end(), BetterCandidate);
    if (scored.size() > config_.trace_top_n) scored.resize(config_.trace_top_n);
    d.top_candidates = std::move(scored);
  }

  SentenceResult result;
  result.output = text::Lowercase(text::Join(current, " "));
  trace.output = result.output;
  if (config_.record_timing) {
    trace.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  }
  result.trace = std::move(trace);
  return result;
}

TextResult Normalizer::NormalizeText(std::string_view text, int jobs) const {
  return NormalizeLines({std::string(text)}, jobs).front();
}

std::vector<TextResult> Normalizer::NormalizeLines(
    const std::vector<std::string>& lines, int jobs) const {
  struct Unit {
    std::size_t line;
    std::string sentence;
  };
  std::vector<Unit> units;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    for (std::string& s : SplitSentences(lines[li])) {
      units.push_back({li, std::move(s)});
    }
  }
  std::vector<SentenceResult> results(units.size());
  auto run = [&](std::size_t i) {
    results[i] = NormalizeSentence(units[i].sentence);
    results[i].trace.line = units[i].line;
  };

  const std::size_t workers = std::min<std::size_t>(
      units.size(), static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < units.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < units.size(); i = next++) {
          try {
            run(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<TextResult> out(lines.size());
  std::vector<std::vector<std::string>> parts(lines.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    const std::size_t li = units[i].line;
    if (!results[i].output.empty()) parts[li].push_back(results[i].output);
    out[li].traces.push_back(std::move(results[i].trace));
  }
  for (std::size_t li = 0; li < lines.size(); ++li) {
    out[li].output = text::Join(parts[li], " ");
  }
  return out;
}

}  // namespace normpipe
