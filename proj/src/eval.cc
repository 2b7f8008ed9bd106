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
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "normpipe/errors.h"
#include "normpipe/text.h"
#include "normpipe/tokenizer.h"

namespace normpipe {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Ratings

std::vector<RatingRecord> ParseRatings(std::istream& in,
                                       const std::string& origin) {
  std::vector<RatingRecord> records;
  std::unordered_map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view row = text::Trim(line);
    if (row.empty() || row.front() == '#') continue;
    const std::size_t comma = row.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(origin, line_no, "expected tuple_id,rating");
    }
    const std::string id(text::Trim(row.substr(0, comma)));
    const std::string value(text::Trim(row.substr(comma + 1)));
    int rating = 0;
    try {
      std::size_t used = 0;
      rating = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      if (first_row) {  // header
        first_row = false;
        continue;
      }
      throw ParseError(origin, line_no, "rating '" + value +
                                            "' is not an integer");
    }
    first_row = false;
    if (rating < 1 || rating > 5) {
      throw ParseError(origin, line_no,
                       "rating " + std::to_string(rating) + " outside 1..5");
    }
    if (id.empty()) throw ParseError(origin, line_no, "empty tuple id");
    auto [it, added] = index.emplace(id, records.size());
    if (added) records.push_back({id, {}});
    records[it->second].ratings.push_back(rating);
  }
  return records;
}

std::vector<RatingRecord> LoadRatings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string());
  return ParseRatings(in, path.string());
}

double RatingAccuracy(const std::vector<RatingRecord>& records) {
  if (records.empty()) throw EvaluationError("no rating records");
  double sum = 0;
  for (const RatingRecord& r : records) {
    if (r.ratings.empty()) {
      throw EvaluationError("tuple '" + r.tuple_id + "' has no ratings");
    }
    double total = 0;
    for (int v : r.ratings) total += v;
    sum += total / static_cast<double>(r.ratings.size());
  }
  return 20.0 / static_cast<double>(records.size()) * sum;
}

// ---------------------------------------------------------------------------
// Word accuracy

namespace {

struct LineWords {
  std::vector<std::string> words;
  // Tokenize index -> position in `words`.
  std::map<std::size_t, std::size_t> ordinal;
};

LineWords WordsOf(std::string_view line) {
  LineWords out;
  const std::vector<Token> tokens = Tokenize(line);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_word()) continue;
    out.ordinal[i] = out.words.size();
    out.words.push_back(text::Lowercase(tokens[i].surface));
  }
  return out;
}

// For each gold word, the index of the system word it aligns to, if any.
std::vector<std::optional<std::size_t>> AlignWords(
    const std::vector<std::string>& gold, const std::vector<std::string>& sys) {
  const std::size_t n = gold.size();
  const std::size_t m = sys.size();
  std::vector<std::optional<std::size_t>> map(n);
  if (n == m) {
    for (std::size_t i = 0; i < n; ++i) map[i] = i;
    return map;
  }
  std::vector<std::vector<std::size_t>> d(n + 1,
                                          std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (gold[i - 1] == sys[j - 1] ? 0 : 1)});
    }
  }
  std::size_t i = n, j = m;
  while (i > 0 && j > 0) {
    const std::size_t diag =
        d[i - 1][j - 1] + (gold[i - 1] == sys[j - 1] ? 0 : 1);
    if (d[i][j] == diag) {
      map[i - 1] = j - 1;
      --i;
      --j;
    } else if (d[i][j] == d[i - 1][j] + 1) {
      --i;
    } else {
      --j;
    }
  }
  return map;
}

bool Matches(const std::vector<std::string>& gold,
             const std::vector<std::string>& sys,
             const std::vector<std::optional<std::size_t>>& map,
             std::size_t g) {
  return map[g].has_value() && sys[*map[g]] == gold[g];
}

}  // namespace

WordMetrics EvaluateWords(const std::vector<std::string>& system,
                          const std::vector<std::string>& gold,
                          const WordEvalOptions& options) {
  if (system.size() != gold.size()) {
    throw EvaluationError("system output has " +
                          std::to_string(system.size()) +
                          " lines but gold has " + std::to_string(gold.size()));
  }
  const bool use_source = options.alignment == nullptr &&
                          options.source != nullptr;
  if (use_source && options.source->size() != gold.size()) {
    throw EvaluationError("source has " +
                          std::to_string(options.source->size()) +
                          " lines but gold has " + std::to_string(gold.size()));
  }
  std::map<std::size_t, std::set<std::size_t>> perturbed;  // line -> token idx
  if (options.alignment != nullptr) {
    for (const AlignmentEntry& a : *options.alignment) {
      if (a.line >= gold.size()) {
        throw EvaluationError("alignment refers to line " +
                              std::to_string(a.line) + " beyond the corpus");
      }
      perturbed[a.line].insert(a.pos);
    }
  }

  WordMetrics m;
  m.lines = gold.size();
  std::size_t changed_hits = 0;
  for (std::size_t li = 0; li < gold.size(); ++li) {
    const LineWords g = WordsOf(gold[li]);
    const LineWords s = WordsOf(system[li]);
    const auto map = AlignWords(g.words, s.words);

    std::vector<bool> was_correct(g.words.size(), false);
    std::vector<bool> was_changed(g.words.size(), false);
    if (options.alignment != nullptr) {
      for (std::size_t pos : perturbed[li]) {
        const auto it = g.ordinal.find(pos);
        if (it == g.ordinal.end()) {
          throw EvaluationError("alignment position " + std::to_string(pos) +
                                " on line " + std::to_string(li) +
                                " is not a gold word");
        }
        was_changed[it->second] = true;
      }
      for (std::size_t k = 0; k < g.words.size(); ++k) {
        was_correct[k] = !was_changed[k];
      }
    } else if (use_source) {
      const LineWords src = WordsOf((*options.source)[li]);
      const auto src_map = AlignWords(g.words, src.words);
      for (std::size_t k = 0; k < g.words.size(); ++k) {
        was_correct[k] = Matches(g.words, src.words, src_map, k);
      }
    }

    for (std::size_t k = 0; k < g.words.size(); ++k) {
      const bool hit = Matches(g.words, s.words, map, k);
      ++m.gold_words;
      if (hit) ++m.matched_words;
      if (was_changed[k]) {
        ++m.changed_words;
        if (hit) ++changed_hits;
      }
      if (was_correct[k] &&
          (!options.unchanged_filter || options.unchanged_filter(g.words[k]))) {
        ++m.unchanged_words;
        if (!hit) ++m.false_changes;
      }
    }
  }
  m.word_acc = m.gold_words == 0 ? 1.0
                                 : static_cast<double>(m.matched_words) /
                                       static_cast<double>(m.gold_words);
  if (options.alignment != nullptr && m.changed_words > 0) {
    m.changed_word_acc = static_cast<double>(changed_hits) /
                         static_cast<double>(m.changed_words);
  }
  if ((options.alignment != nullptr || use_source) && m.unchanged_words > 0) {
    m.unchanged_false_change = static_cast<double>(m.false_changes) /
                               static_cast<double>(m.unchanged_words);
  }
  return m;
}

namespace {

json OptionalNumber(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json ToJson(const WordMetrics& m) {
  return {
      {"lines", m.lines},
      {"gold_words", m.gold_words},
      {"matched_words", m.matched_words},
      {"word_acc", m.word_acc},
      {"changed_words", m.changed_words},
      {"changed_word_acc", OptionalNumber(m.changed_word_acc)},
      {"unchanged_words", m.unchanged_words},
      {"false_changes", m.false_changes},
      {"unchanged_false_change", OptionalNumber(m.unchanged_false_change)},
  };
}

// ---------------------------------------------------------------------------
// Comparison

RunSummary Summarize(const std::vector<NormalizationTrace>& traces,
                     std::optional<WordMetrics> words) {
  RunSummary s;
  s.sentences = traces.size();
  double latency = 0;
  bool timed = !traces.empty();
  for (const NormalizationTrace& t : traces) {
    s.predictions_made += t.predictions_made;
    s.transport_failures += t.transport_failures;
    if (t.elapsed_ms) {
      latency += *t.elapsed_ms;
    } else {
      timed = false;
    }
  }
  if (timed) s.mean_latency_ms = latency / static_cast<double>(traces.size());
  s.words = std::move(words);
  return s;
}

std::vector<std::string> OutputsByLine(
    const std::vector<NormalizationTrace>& traces, std::size_t lines) {
  std::vector<std::vector<std::string>> parts(lines);
  for (const NormalizationTrace& t : traces) {
    if (t.line >= lines) {
      throw EvaluationError("trace refers to line " + std::to_string(t.line) +
                            " beyond " + std::to_string(lines) + " lines");
    }
    if (!t.output.empty()) parts[t.line].push_back(t.output);
  }
  std::vector<std::string> out;
  out.reserve(lines);
  for (const auto& p : parts) out.push_back(text::Join(p, " "));
  return out;
}

CompareReport Compare(const std::vector<NormalizationTrace>& a,
                      const std::vector<NormalizationTrace>& b,
                      std::optional<WordMetrics> words_a,
                      std::optional<WordMetrics> words_b) {
  if (a.size() != b.size()) {
    throw EvaluationError("runs cover different corpora: " +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + " sentences");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].sentence != b[i].sentence || a[i].line != b[i].line) {
      throw EvaluationError("runs cover different corpora: sentence " +
                            std::to_string(i) + " differs");
    }
  }
  CompareReport r;
  r.a = Summarize(a, std::move(words_a));
  r.b = Summarize(b, std::move(words_b));
  return r;
}

namespace {

json SummaryJson(const RunSummary& s) {
  json j = {
      {"sentences", s.sentences},
      {"predictions_made", s.predictions_made},
      {"transport_failures", s.transport_failures},
      {"mean_latency_ms", OptionalNumber(s.mean_latency_ms)},
      {"words", s.words ? ToJson(*s.words) : json(nullptr)},
  };
  return j;
}

std::optional<double> Delta(std::optional<double> a, std::optional<double> b) {
  if (!a || !b) return std::nullopt;
  return *b - *a;
}

struct Row {
  std::string name;
  std::optional<double> a;
  std::optional<double> b;
};

std::vector<Row> Rows(const CompareReport& r) {
  auto acc = [](const RunSummary& s) -> std::optional<double> {
    if (!s.words) return std::nullopt;
    return s.words->word_acc;
  };
  auto changed = [](const RunSummary& s) -> std::optional<double> {
    if (!s.words) return std::nullopt;
    return s.words->changed_word_acc;
  };
  auto false_change = [](const RunSummary& s) -> std::optional<double> {
    if (!s.words) return std::nullopt;
    return s.words->unchanged_false_change;
  };
  return {
      {"sentences", double(r.a.sentences), double(r.b.sentences)},
      {"predictions_made", double(r.a.predictions_made),
       double(r.b.predictions_made)},
      {"transport_failures", double(r.a.transport_failures),
       double(r.b.transport_failures)},
      {"mean_latency_ms", r.a.mean_latency_ms, r.b.mean_latency_ms},
      {"word_acc", acc(r.a), acc(r.b)},
      {"changed_word_acc", changed(r.a), changed(r.b)},
      {"false_change", false_change(r.a), false_change(r.b)},
  };
}

std::string Cell(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[64];
  if (*v == std::floor(*v) && std::fabs(*v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", *v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.4f", *v);
  }
  return buf;
}

}  // namespace

json ToJson(const CompareReport& report) {
  json deltas = json::object();
  for (const Row& row : Rows(report)) {
    deltas[row.name] = OptionalNumber(Delta(row.a, row.b));
  }
  return {
      {"labels", {report.label_a, report.label_b}},
      {"a", SummaryJson(report.a)},
      {"b", SummaryJson(report.b)},
      {"delta", deltas},
  };
}

std::string FormatTable(const CompareReport& report) {
  std::vector<std::vector<std::string>> cells = {
      {"metric", report.label_a, report.label_b, "delta"}};
  for (const Row& row : Rows(report)) {
    cells.push_back(
        {row.name, Cell(row.a), Cell(row.b), Cell(Delta(row.a, row.b))});
  }
  std::vector<std::size_t> width(4, 0);
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (c == 0) {
        out << r[c] << std::string(width[c] - r[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - r[c].size(), ' ') << r[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

std::vector<NormalizationTrace> LoadTraces(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string());
  std::vector<NormalizationTrace> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::Trim(line).empty()) continue;
    try {
      out.push_back(TraceFromJson(json::parse(line)));
    } catch (const std::exception& e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  }
  return out;
}

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace normpipe
