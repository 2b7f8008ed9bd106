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

#include "normpipe/eval.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "normpipe/errors.h"
#include "normpipe/noise.h"
#include "normpipe/pipeline.h"
#include "test_util.h"

namespace normpipe {
namespace {

// One record per tuple, each with a single rating, following a histogram
// of counts for ratings 1..5.
std::vector<RatingRecord> FromHistogram(const std::vector<int>& counts) {
  std::vector<RatingRecord> out;
  for (int r = 1; r <= 5; ++r) {
    for (int i = 0; i < counts[r - 1]; ++i) {
      out.push_back({"t" + std::to_string(out.size()), {r}});
    }
  }
  return out;
}

TEST(RatingAccuracyTest, PublishedHistograms) {
  const auto a = FromHistogram({43, 89, 292, 722, 1481});
  const auto b = FromHistogram({41, 133, 464, 713, 1276});
  ASSERT_EQ(a.size(), 2627u);
  ASSERT_EQ(b.size(), 2627u);
  EXPECT_NEAR(RatingAccuracy(a), 86.71, 0.01);
  EXPECT_NEAR(RatingAccuracy(b), 83.22, 0.01);
  // Exact rational values: 20 * 11390 / 2627 and 20 * 10931 / 2627.
  EXPECT_NEAR(RatingAccuracy(a), 20.0 * 11390 / 2627, 1e-9);
  EXPECT_NEAR(RatingAccuracy(b), 20.0 * 10931 / 2627, 1e-9);
}

TEST(RatingAccuracyTest, ConstantRatingIsTwentyTimesRating) {
  for (int r = 1; r <= 5; ++r) {
    std::vector<RatingRecord> records;
    for (int i = 0; i < 37; ++i) {
      records.push_back({"t" + std::to_string(i), {r, r, r}});
    }
    EXPECT_EQ(RatingAccuracy(records), 20.0 * r);
  }
}

TEST(RatingAccuracyTest, PerTupleMeansComeFirst) {
  // Means 2 and 5 -> (20/2) * 7 = 70; a flat mean over ratings would give 60.
  EXPECT_DOUBLE_EQ(RatingAccuracy({{"a", {1, 2, 3}}, {"b", {5}}}), 70.0);
}

TEST(RatingAccuracyTest, OrderInvariant) {
  auto records = FromHistogram({3, 1, 4, 1, 5});
  records.push_back({"multi", {2, 5, 4}});
  const double base = RatingAccuracy(records);
  std::mt19937 rng(9);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(records.begin(), records.end(), rng);
    EXPECT_NEAR(RatingAccuracy(records), base, 1e-12);
  }
}

TEST(RatingAccuracyTest, Errors) {
  EXPECT_THROW(RatingAccuracy({}), EvaluationError);
  EXPECT_THROW(RatingAccuracy({{"a", {}}}), EvaluationError);
}

TEST(ParseRatingsTest, HeaderAndMerge) {
  std::istringstream in("tuple_id,rating\nx,4\ny,5\nx,2\n\n");
  const auto records = ParseRatings(in);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].tuple_id, "x");
  EXPECT_EQ(records[0].ratings, (std::vector<int>{4, 2}));
  EXPECT_EQ(records[1].tuple_id, "y");
}

TEST(ParseRatingsTest, SplittingRecordsAcrossRowsDoesNotMatter) {
  std::istringstream joined("a,1\na,5\nb,3\n");
  std::istringstream split("a,1\nb,3\na,5\n");
  EXPECT_EQ(RatingAccuracy(ParseRatings(joined)),
            RatingAccuracy(ParseRatings(split)));
}

std::size_t RatingsErrorLine(const std::string& csv) {
  std::istringstream in(csv);
  try {
    ParseRatings(in, "r.csv");
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for " << csv;
  return 0;
}

TEST(ParseRatingsTest, BadRows) {
  EXPECT_EQ(RatingsErrorLine("a,1\nb,6\n"), 2u);
  EXPECT_EQ(RatingsErrorLine("a,1\nb,0\n"), 2u);
  EXPECT_EQ(RatingsErrorLine("a,1\nb,3.5\n"), 2u);
  EXPECT_EQ(RatingsErrorLine("a\n"), 1u);
  EXPECT_EQ(RatingsErrorLine("a,1\nb,x\n"), 2u);
}

TEST(ParseRatingsTest, LoadMissingFile) {
  EXPECT_THROW(LoadRatings("/nonexistent/r.csv"), LoadError);
}

TEST(EvaluateWordsTest, IdenticalOutput) {
  const std::vector<std::string> gold = {"i am with her .", "hello"};
  const WordMetrics m = EvaluateWords(gold, gold, {.source = &gold});
  EXPECT_EQ(m.gold_words, 5u);
  EXPECT_EQ(m.word_acc, 1.0);
  EXPECT_EQ(m.unchanged_false_change, 0.0);
  EXPECT_FALSE(m.changed_word_acc.has_value());
}

TEST(EvaluateWordsTest, AlignmentSplitsChangedAndUntouched) {
  const std::vector<std::string> gold = {"my friend is coming tomorrow ."};
  const std::vector<std::string> noisy = {"my frnd is coming 2morrow ."};
  const std::vector<AlignmentEntry> align = {{0, 1, "friend", "frnd"},
                                             {0, 4, "tomorrow", "2morrow"}};
  const WordMetrics kept = EvaluateWords(noisy, gold, {.alignment = &align});
  EXPECT_EQ(kept.changed_words, 2u);
  EXPECT_EQ(kept.changed_word_acc, 0.0);
  EXPECT_EQ(kept.unchanged_false_change, 0.0);
  EXPECT_DOUBLE_EQ(kept.word_acc, 3.0 / 5.0);

  const std::vector<std::string> sys = {"my friend was coming 2morrow ."};
  const WordMetrics m = EvaluateWords(sys, gold, {.alignment = &align});
  EXPECT_EQ(m.changed_word_acc, 0.5);
  EXPECT_EQ(m.unchanged_words, 3u);
  EXPECT_EQ(m.false_changes, 1u);
  EXPECT_DOUBLE_EQ(*m.unchanged_false_change, 1.0 / 3.0);
}

TEST(EvaluateWordsTest, SourceMarksOriginallyCorrectWords) {
  const std::vector<std::string> gold = {"i am with her"};
  const std::vector<std::string> source = {"i m with her"};
  const std::vector<std::string> sys = {"i am wit her"};
  const WordMetrics m =
      EvaluateWords(sys, gold, {.source = &source});
  EXPECT_EQ(m.unchanged_words, 3u);
  EXPECT_EQ(m.false_changes, 1u);
}

TEST(EvaluateWordsTest, FilterRestrictsFalseChangeCount) {
  const std::vector<std::string> gold = {"i am with her"};
  const std::vector<std::string> sys = {"i am wit him"};
  const std::vector<AlignmentEntry> none;
  const WordMetrics m = EvaluateWords(
      sys, gold,
      {.alignment = &none,
       .unchanged_filter = [](std::string_view w) { return w != "her"; }});
  EXPECT_EQ(m.unchanged_words, 3u);
  EXPECT_EQ(m.false_changes, 1u);
}

TEST(EvaluateWordsTest, LengthMismatchUsesEditAlignment) {
  const std::vector<std::string> gold = {"good morning jack"};
  const std::vector<std::string> sys = {"gm jack"};
  const WordMetrics m = EvaluateWords(sys, gold);
  EXPECT_EQ(m.gold_words, 3u);
  EXPECT_EQ(m.matched_words, 1u);
}

TEST(EvaluateWordsTest, Errors) {
  EXPECT_THROW(EvaluateWords({"a"}, {"a", "b"}), EvaluationError);
  const std::vector<AlignmentEntry> bad = {{3, 0, "a", "b"}};
  EXPECT_THROW(EvaluateWords({"a"}, {"a"}, {.alignment = &bad}),
               EvaluationError);
  const std::vector<std::string> short_source;
  EXPECT_THROW(EvaluateWords({"a"}, {"a"}, {.source = &short_source}),
               EvaluationError);
}

TEST(EvaluateWordsTest, MetricsStayInUnitInterval) {
  const auto clean =
      test_util::ReadLines(test_util::DataDir() / "corpus" / "clean.txt");
  const NoiseGenerator gen(test_util::ShippedLexicon().symbol_map());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const NoisyCorpus noisy = gen.PerturbCorpus(clean, 0.5, AllNoiseOps(), seed);
    const WordMetrics m =
        EvaluateWords(noisy.lines, clean, {.alignment = &noisy.alignment});
    EXPECT_GE(m.word_acc, 0.0);
    EXPECT_LE(m.word_acc, 1.0);
    ASSERT_TRUE(m.changed_word_acc.has_value());
    EXPECT_EQ(*m.changed_word_acc, 0.0);
    EXPECT_EQ(*m.unchanged_false_change, 0.0);
  }
}

NormalizationTrace Trace(std::size_t line, std::string sentence,
                         std::string output, std::size_t predictions,
                         double ms) {
  NormalizationTrace t;
  t.line = line;
  t.sentence = std::move(sentence);
  t.output = std::move(output);
  t.predictions_made = predictions;
  t.elapsed_ms = ms;
  return t;
}

TEST(CompareTest, IdenticalRunsHaveZeroDeltas) {
  const std::vector<NormalizationTrace> run = {
      Trace(0, "i m here.", "i am here .", 1, 2.0),
      Trace(1, "hi", "hi", 0, 4.0)};
  const CompareReport r = Compare(run, run);
  EXPECT_EQ(r.a.predictions_made, 1u);
  EXPECT_EQ(r.a.mean_latency_ms, 3.0);
  const nlohmann::json j = ToJson(r);
  EXPECT_EQ(j["delta"]["predictions_made"], 0.0);
  EXPECT_EQ(j["delta"]["mean_latency_ms"], 0.0);
  EXPECT_TRUE(j["delta"]["word_acc"].is_null());
  const std::string table = FormatTable(r);
  EXPECT_NE(table.find("predictions_made"), std::string::npos);
  EXPECT_NE(table.find("n/a"), std::string::npos);
}

TEST(CompareTest, DifferentCorporaAreRejected) {
  const std::vector<NormalizationTrace> a = {Trace(0, "x", "x", 0, 1)};
  const std::vector<NormalizationTrace> b = {Trace(0, "y", "y", 0, 1)};
  EXPECT_THROW(Compare(a, b), EvaluationError);
  EXPECT_THROW(Compare(a, {}), EvaluationError);
}

TEST(CompareTest, OutputsByLineRegroupsSentences) {
  const std::vector<NormalizationTrace> run = {
      Trace(0, "a.", "a .", 0, 1), Trace(0, "b.", "b .", 0, 1),
      Trace(2, "c", "c", 0, 1)};
  EXPECT_EQ(OutputsByLine(run, 3),
            (std::vector<std::string>{"a . b .", "", "c"}));
  EXPECT_THROW(OutputsByLine(run, 2), EvaluationError);
}

TEST(CompareTest, GoldenRunsWordByWordPredictsMore) {
  const Lexicon& lex = test_util::ShippedLexicon();
  const EntityRecognizer rec(lex);
  const FixtureModel fixture =
      FixtureModel::Load(test_util::DataDir() / "golden" / "fixture.jsonl");
  const auto lines =
      test_util::ReadLines(test_util::DataDir() / "golden" / "input.txt");
  auto run = [&](Strategy s) {
    NormalizationConfig cfg;
    cfg.strategy = s;
    cfg.record_timing = true;
    std::vector<NormalizationTrace> traces;
    for (auto& r : Normalizer(lex, rec, fixture, cfg).NormalizeLines(lines)) {
      for (auto& t : r.traces) traces.push_back(std::move(t));
    }
    return traces;
  };
  const auto a = run(Strategy::kOovMasking);
  const auto b = run(Strategy::kWordByWordMasking);
  const auto gold =
      test_util::ReadLines(test_util::DataDir() / "golden" / "expected_wbw.txt");
  const CompareReport r =
      Compare(a, b, EvaluateWords(OutputsByLine(a, lines.size()), gold),
              EvaluateWords(OutputsByLine(b, lines.size()), gold));
  EXPECT_GE(r.b.predictions_made, r.a.predictions_made);
  EXPECT_EQ(r.b.words->word_acc, 1.0);
  EXPECT_LT(r.a.words->word_acc, 1.0);
  const nlohmann::json j = ToJson(r);
  for (const char* key : {"sentences", "predictions_made", "mean_latency_ms",
                          "word_acc", "false_change"}) {
    if (std::string(key) == "false_change") {
      // Needs an alignment or the source lines.
      EXPECT_TRUE(j["delta"][key].is_null());
      continue;
    }
    ASSERT_TRUE(j["delta"][key].is_number()) << key;
    EXPECT_TRUE(std::isfinite(j["delta"][key].get<double>())) << key;
  }
}

TEST(TraceIoTest, LoadTraces) {
  test_util::TempDir dir;
  const NormalizationTrace t = Trace(3, "x", "x", 1, 0.5);
  test_util::WriteFile(dir.File("t.jsonl"),
                       TraceToJson(t).dump() + "\n\n" + TraceToJson(t).dump() +
                           "\n");
  const auto loaded = LoadTraces(dir.File("t.jsonl"));
  ASSERT_EQ(loaded.size(), 2u);
  EXPECT_EQ(loaded[1].line, 3u);
  test_util::WriteFile(dir.File("bad.jsonl"), "{oops\n");
  EXPECT_THROW(LoadTraces(dir.File("bad.jsonl")), ParseError);
  EXPECT_THROW(LoadTraces(dir.File("missing.jsonl")), LoadError);
}

}  // namespace
}  // namespace normpipe
