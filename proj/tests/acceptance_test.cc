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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "normpipe/context_model.h"
#include "normpipe/eval.h"
#include "normpipe/lexicon.h"
#include "normpipe/ner.h"
#include "normpipe/noise.h"
#include "normpipe/phonetics.h"
#include "normpipe/pipeline.h"
#include "normpipe/scoring.h"
#include "normpipe/string_metrics.h"
#include "normpipe/text.h"
#include "oracle.h"
#include "test_util.h"

namespace normpipe {
namespace {

namespace fs = std::filesystem;

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void Near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(17);
    s << what << ": got " << got << ", want " << want << " +/- " << tol;
    Expect(std::fabs(got - want) <= tol, s.str());
  }
  void Note(const std::string& note) { notes_.push_back(note); }

  bool ok() const { return failed_ == 0; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  std::string name;
  double budget_s;
  std::function<void(Check&)> body;
};

fs::path Data(const std::string& rel) { return test_util::DataDir() / rel; }

std::string Fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

// ---------------------------------------------------------------------------

std::vector<RatingRecord> FromHistogram(const std::vector<int>& counts) {
  std::vector<RatingRecord> out;
  for (int r = 1; r <= 5; ++r) {
    for (int i = 0; i < counts[r - 1]; ++i) {
      out.push_back({"t" + std::to_string(out.size()), {r}});
    }
  }
  return out;
}

void RatingAccuracyCriterion(Check& c) {
  const double a = RatingAccuracy(FromHistogram({43, 89, 292, 722, 1481}));
  const double b = RatingAccuracy(FromHistogram({41, 133, 464, 713, 1276}));
  c.Near(a, 86.71, 0.01, "approach 1");
  c.Near(b, 83.22, 0.01, "approach 2");
  c.Note("approach 1 " + Fmt(a) + ", approach 2 " + Fmt(b));
}

// ---------------------------------------------------------------------------

void GoldenCriterion(Check& c) {
  const Lexicon& lex = test_util::ShippedLexicon();
  const EntityRecognizer rec(lex);
  const FixtureModel fixture = FixtureModel::Load(Data("golden/fixture.jsonl"));
  const auto input = test_util::ReadLines(Data("golden/input.txt"));

  // Paper words that must come out as listed, per strategy.
  const std::map<std::string, std::string> worked = {
      {"frnd", "friend"},  {"2morrow", "tomorrow"}, {"coooool", "cool"},
      {"GM", "good morning"}, {"we're", "we are"},
  };
  std::size_t components = 0;
  double worst = 0;
  for (Strategy s : {Strategy::kOovMasking, Strategy::kWordByWordMasking}) {
    NormalizationConfig cfg;
    cfg.strategy = s;
    cfg.trace_top_n = 5;
    const Normalizer n(lex, rec, fixture, cfg);
    const auto results = n.NormalizeLines(input);
    const auto expected = test_util::ReadLines(
        Data(s == Strategy::kOovMasking ? "golden/expected_oov.txt"
                                        : "golden/expected_wbw.txt"));
    std::string got_text;
    std::string want_text;
    for (std::size_t i = 0; i < results.size(); ++i) {
      got_text += results[i].output + "\n";
      want_text += (i < expected.size() ? expected[i] : "") + "\n";
    }
    c.Expect(got_text == want_text && results.size() == expected.size(),
             std::string(StrategyName(s)) + " output differs from golden");

    for (const TextResult& r : results) {
      for (const NormalizationTrace& t : r.traces) {
        for (const TokenDecision& d : t.decisions) {
          const auto w = worked.find(d.token);
          if (w != worked.end()) {
            c.Expect(d.chosen == w->second,
                     d.token + " -> " + d.chosen.value_or("<kept>"));
          }
          if (d.token == "wit" && s == Strategy::kWordByWordMasking) {
            c.Expect(d.chosen == "with", "wit -> " + d.chosen.value_or("<kept>"));
          }
          for (const ScoredCandidate& sc : d.top_candidates) {
            const oracle::SimOracle o = oracle::Sim(sc.word, sc.compared_form);
            const double p = 1.0 - static_cast<double>(sc.rank_index) /
                                       static_cast<double>(cfg.list_cap);
            const std::string tag = d.token + "/" + sc.word;
            const double diffs[] = {sc.s_sim - o.s_sim, sc.p_sim - o.p_sim,
                                    sc.sim_score - o.sim_score,
                                    sc.p_context - p,
                                    sc.final_score - p * o.sim_score};
            for (double diff : diffs) {
              worst = std::max(worst, std::fabs(diff));
              c.Expect(std::fabs(diff) <= 1e-9, tag + " component off by " +
                                                    std::to_string(diff));
              ++components;
            }
            c.Expect(std::string(EndpointRuleName(sc.rule)) == o.rule,
                     tag + " rule");
          }
        }
      }
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", worst);
  c.Note(std::to_string(components) + " components, max diff " + buf);
}

// ---------------------------------------------------------------------------

void AllStrings(std::size_t max_len, std::vector<std::string>* out) {
  out->push_back("");
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out->size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char ch : {'a', 'b', 'c'}) out->push_back((*out)[i] + ch);
    }
    begin = end;
  }
}

void MetricOracleCriterion(Check& c) {
  std::vector<std::string> strings;
  AllStrings(6, &strings);
  std::size_t pairs = 0;
  for (const std::string& a : strings) {
    for (const std::string& b : strings) {
      const std::size_t want = oracle::RecursiveEditDistance(a, b);
      c.Expect(EditDistance(a, b) == want, "levenshtein " + a + "/" + b);
      ++pairs;
    }
  }
  const double jw = JaroWinkler("martha", "marhta");
  c.Near(jw, 0.9611, 1e-4, "jaro-winkler martha/marhta");

  std::size_t words = 0;
  for (const oracle::ReferenceCodes& r : oracle::PhoneticChecklist()) {
    ++words;
    c.Expect(Soundex(r.word).code == r.soundex, "soundex " + r.word);
    c.Expect(Metaphone(r.word).code == r.metaphone, "metaphone " + r.word);
    c.Expect(FuzzySoundex(r.word).code == r.fuzzy, "fuzzy soundex " + r.word);
  }
  c.Note(std::to_string(pairs) + " string pairs, jw " + Fmt(jw) + ", " +
         std::to_string(words) + " checklist words");
}

// ---------------------------------------------------------------------------

void ScoringContractsCriterion(Check& c) {
  c.Expect(ContextProbability(0, 5000) == 1.0, "P(rank 0) == 1");
  c.Expect(ContextProbability(2500, 5000) == 0.5, "P(rank 2500) == 0.5");
  for (const char* w : {"a", "with", "friend", "tomorrow", "cool"}) {
    c.Expect(ScoreSimilarity(w, w).sim_score == 1.0,
             std::string("sim(x, x) == 1 for ") + w);
  }
  struct Row {
    const char* x;
    const char* y;
    EndpointRule rule;
  };
  for (const Row& r : {Row{"friend", "frnd", EndpointRule::kBoost},
                       Row{"apple", "zebra", EndpointRule::kDilute},
                       Row{"with", "wit", EndpointRule::kUnchanged},
                       Row{"am", "m", EndpointRule::kUnchanged}}) {
    const SimilarityBreakdown b = ScoreSimilarity(r.x, r.y);
    const std::string tag = std::string(r.x) + "/" + r.y;
    c.Expect(b.rule == r.rule, tag + " branch");
    const double want = r.rule == EndpointRule::kBoost    ? b.base * b.base
                        : r.rule == EndpointRule::kDilute ? std::sqrt(b.base)
                                                          : b.base;
    c.Expect(b.sim_score == want, tag + " branch value");
  }
  const ScoredCandidate sc =
      ScoreCandidate("friend", 2500, 5000, WordForms{"frnd", "frnd"});
  c.Expect(sc.final_score == sc.p_context * sc.sim_score, "final = product");

  ScoredCandidate at;
  at.word = "a";
  at.final_score = 0.25;
  ScoredCandidate below = at;
  below.final_score = 0.2499;
  c.Expect(SelectReplacement({at}, 0.25).has_value(), "0.25 accepted");
  c.Expect(!SelectReplacement({below}, 0.25).has_value(), "0.2499 rejected");
}

// ---------------------------------------------------------------------------

std::vector<std::string> NoisyCorpus500() {
  const auto clean = test_util::ReadLines(Data("corpus/clean.txt"));
  std::vector<std::string> lines;
  for (std::size_t i = 0; lines.size() < 500; ++i) {
    std::string s = clean[i % clean.size()];
    // Every third sentence starts with a capital so case folding is
    // exercised.
    if (i % 3 == 0 && !s.empty()) {
      s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    }
    lines.push_back(std::move(s));
  }
  const NoiseGenerator gen(test_util::ShippedLexicon().symbol_map());
  return gen.PerturbCorpus(lines, 0.15, AllNoiseOps(), 2026).lines;
}

void PipelineInvariantsCriterion(Check& c) {
  const Lexicon& lex = test_util::ShippedLexicon();
  const EntityRecognizer rec(lex);
  const NgramModel model =
      NgramModel::TrainFromFile(Data("corpus/clean.txt"));
  const auto lines = NoisyCorpus500();

  NormalizationConfig oov_cfg;
  NormalizationConfig wbw_cfg;
  wbw_cfg.strategy = Strategy::kWordByWordMasking;
  const Normalizer oov(lex, rec, model, oov_cfg);
  const Normalizer wbw(lex, rec, model, wbw_cfg);
  const auto a = oov.NormalizeLines(lines);
  const auto b = wbw.NormalizeLines(lines);

  std::size_t sentences = 0;
  std::size_t fixed_points = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string tag = "line " + std::to_string(li + 1);
    c.Expect(a[li].traces.size() == b[li].traces.size(), tag + " split");
    for (std::size_t k = 0;
         k < a[li].traces.size() && k < b[li].traces.size(); ++k) {
      const NormalizationTrace& ta = a[li].traces[k];
      const NormalizationTrace& tb = b[li].traces[k];
      ++sentences;
      c.Expect(tb.predictions_made >= ta.predictions_made,
               tag + " predictions wbw < oov");
      if (ta.informality_ratio == 0.0) {
        ++fixed_points;
        // Fixed point: only case folding and expansions may differ.
        const Sentence s = AnalyzeSentence(ta.sentence, lex, rec);
        std::vector<std::string> expected;
        for (const Token& t : s.tokens) {
          const auto phrase =
              t.is_word() && (t.category == Category::kAcronym ||
                              t.category == Category::kContraction)
                  ? lex.Expand(t.normalized_surface)
                  : std::nullopt;
          expected.push_back(phrase ? *phrase : t.normalized_surface);
        }
        c.Expect(ta.output == text::Join(expected, " "),
                 tag + " not a fixed point: " + ta.output);
      }
    }
    for (const std::string& out : {a[li].output, b[li].output}) {
      bool upper = false;
      for (char ch : out) upper = upper || std::isupper(static_cast<unsigned char>(ch));
      c.Expect(!upper, tag + " has uppercase: " + out);
    }
  }
  c.Note(std::to_string(sentences) + " sentences, " +
         std::to_string(fixed_points) + " with informality 0");
}

// ---------------------------------------------------------------------------

void RoundTripCriterion(Check& c) {
  const Lexicon& lex = test_util::ShippedLexicon();
  const EntityRecognizer rec(lex);
  const auto clean = test_util::ReadLines(Data("corpus/clean.txt"));
  const NoiseGenerator gen(lex.symbol_map());
  const NoisyCorpus noisy = gen.PerturbCorpus(
      clean, 0.2,
      {NoiseOp::kVowelDrop, NoiseOp::kRepeatStretch, NoiseOp::kSymbolSub}, 7);
  const NgramModel model = NgramModel::Train(clean);
  const Normalizer n(lex, rec, model, NormalizationConfig{});
  std::vector<std::string> system;
  for (const TextResult& r : n.NormalizeLines(noisy.lines)) {
    system.push_back(r.output);
  }
  WordEvalOptions options;
  options.alignment = &noisy.alignment;
  options.unchanged_filter = [&lex](std::string_view w) {
    return lex.IsWord(w);
  };
  const WordMetrics m = EvaluateWords(system, clean, options);
  c.Expect(clean.size() == 200, "clean corpus has 200 sentences");
  c.Expect(m.changed_word_acc.has_value() && *m.changed_word_acc >= 0.5,
           "changed_word_acc " + Fmt(m.changed_word_acc.value_or(-1)) +
               " < 0.5");
  c.Expect(m.false_changes == 0,
           std::to_string(m.false_changes) + " untouched words changed");
  c.Note("changed_word_acc " + Fmt(m.changed_word_acc.value_or(-1)) +
         " over " + std::to_string(m.changed_words) + ", false changes " +
         std::to_string(m.false_changes) + "/" +
         std::to_string(m.unchanged_words) + ", word_acc " +
         Fmt(m.word_acc));
}

// ---------------------------------------------------------------------------

void DeterminismCriterion(Check& c) {
  test_util::TempDir dir;
  std::string corpus;
  for (const std::string& l : NoisyCorpus500()) corpus += l + "\n";
  test_util::WriteFile(dir.File("in.txt"), corpus);
  const std::string backend = "ngram:" + Data("corpus/clean.txt").string();
  auto run = [&](const std::string& tag, const std::string& strategy,
                 const std::string& jobs) {
    const auto r = test_util::Cli(
        {"normalize", "--strategy", strategy, "--backend", backend, "--in",
         dir.File("in.txt").string(), "--jobs", jobs, "--trace",
         dir.File(tag + ".jsonl").string()});
    c.Expect(r.code == 0, tag + " exit " + std::to_string(r.code) + ": " +
                              r.err);
    return std::make_pair(r.out, test_util::ReadFile(dir.File(tag + ".jsonl")));
  };
  for (const std::string strategy : {"oov", "wbw"}) {
    const auto first = run(strategy + "1", strategy, "1");
    const auto second = run(strategy + "2", strategy, "1");
    const auto threaded = run(strategy + "3", strategy, "2");
    c.Expect(!first.first.empty(), strategy + " produced no output");
    c.Expect(first == second, strategy + " repeated run differs");
    c.Expect(first == threaded, strategy + " threaded run differs");
  }
  const NoiseGenerator gen(test_util::ShippedLexicon().symbol_map());
  const auto clean = test_util::ReadLines(Data("corpus/clean.txt"));
  c.Expect(gen.PerturbCorpus(clean, 0.3, AllNoiseOps(), 5).lines ==
               gen.PerturbCorpus(clean, 0.3, AllNoiseOps(), 5).lines,
           "noise corpus differs between runs");
}

int Main() {
  const std::vector<Criterion> criteria = {
      {"rating accuracy reproduces 86.71 / 83.22", 1, RatingAccuracyCriterion},
      {"golden suite matches expected text and oracle components", 5,
       GoldenCriterion},
      {"string metrics and phonetic codes match oracles", 30,
       MetricOracleCriterion},
      {"scoring contracts", 1, ScoringContractsCriterion},
      {"pipeline invariants on 500 noisy sentences", 120,
       PipelineInvariantsCriterion},
      {"round-trip recovery on the clean corpus", 300, RoundTripCriterion},
      {"determinism of normalize output and traces", 300,
       DeterminismCriterion},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    check.Expect(secs <= cr.budget_s,
                 "took " + Fmt(secs, 2) + " s, budget " + Fmt(cr.budget_s, 0) +
                     " s");
    std::printf("%s  %s  [%.2f s]\n", check.ok() ? "PASS" : "FAIL",
                cr.name.c_str(), secs);
    for (const std::string& n : check.notes()) std::printf("      %s\n", n.c_str());
    for (const std::string& f : check.failures()) {
      std::printf("      - %s\n", f.c_str());
    }
    if (check.failed() > check.failures().size()) {
      std::printf("      ... %zu more\n",
                  check.failed() - check.failures().size());
    }
    if (!check.ok()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace normpipe

int main() { return normpipe::Main(); }
