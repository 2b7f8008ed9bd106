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

#include "normpipe/cli.h"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "normpipe/context_model.h"
#include "normpipe/errors.h"
#include "normpipe/eval.h"
#include "normpipe/lexicon.h"
#include "normpipe/ner.h"
#include "normpipe/noise.h"
#include "normpipe/phonetics.h"
#include "normpipe/pipeline.h"
#include "normpipe/scoring.h"
#include "normpipe/text.h"

namespace normpipe {
namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string CanonicalKey(std::string key) {
  for (char& c : key) {
    if (c == '-') c = '_';
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return key;
}

// Settings that were not given as flags come from NORMPIPE_* variables,
// then from the --config file.
class Layers {
 public:
  void LoadConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError(path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view row = text::Trim(line);
      if (row.empty() || row.front() == '#' || row.front() == '[') continue;
      const std::size_t eq = row.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError(path, line_no, "expected key = value");
      }
      std::string value(text::Trim(row.substr(eq + 1)));
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        value = value.substr(1, value.size() - 2);
      }
      config_[CanonicalKey(std::string(text::Trim(row.substr(0, eq))))] =
          value;
    }
  }

  std::optional<std::string> Lookup(const std::string& key) const {
    std::string env = "NORMPIPE_" + CanonicalKey(key);
    for (char& c : env) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (const char* v = std::getenv(env.c_str()); v != nullptr) {
      return std::string(v);
    }
    const auto it = config_.find(CanonicalKey(key));
    if (it != config_.end()) return it->second;
    return std::nullopt;
  }

  template <typename T>
  void Resolve(const CLI::Option* flag, const std::string& key,
               T* target) const {
    if (flag != nullptr && flag->count() > 0) return;
    const std::optional<std::string> raw = Lookup(key);
    if (!raw) return;
    if constexpr (std::is_same_v<T, bool>) {
      const std::string v = CanonicalKey(*raw);
      if (v == "1" || v == "true" || v == "yes" || v == "on") {
        *target = true;
      } else if (v == "0" || v == "false" || v == "no" || v == "off") {
        *target = false;
      } else {
        throw UsageError("bad boolean for " + key + ": '" + *raw + "'");
      }
    } else if (!CLI::detail::lexical_cast(*raw, *target)) {
      throw UsageError("bad value for " + key + ": '" + *raw + "'");
    }
  }

 private:
  std::map<std::string, std::string> config_;
};

struct DataFlags {
  std::string data_dir = NORMPIPE_DATA_DIR;
  std::string vocab, expansions, symbols, gazetteer;
  CLI::Option* data_dir_opt = nullptr;
  CLI::Option* vocab_opt = nullptr;
  CLI::Option* expansions_opt = nullptr;
  CLI::Option* symbols_opt = nullptr;
  CLI::Option* gazetteer_opt = nullptr;

  void Add(CLI::App* app) {
    data_dir_opt = app->add_option("--data-dir", data_dir,
                                   "Directory holding the lexicon files");
    vocab_opt = app->add_option("--vocab", vocab, "Vocabulary file");
    expansions_opt =
        app->add_option("--expansions", expansions, "Expansion table (TSV)");
    symbols_opt = app->add_option("--symbols", symbols, "Symbol map (TSV)");
    gazetteer_opt = app->add_option("--gazetteer", gazetteer, "Gazetteer");
  }

  void Resolve(const Layers& layers) {
    layers.Resolve(data_dir_opt, "data_dir", &data_dir);
    layers.Resolve(vocab_opt, "vocab", &vocab);
    layers.Resolve(expansions_opt, "expansions", &expansions);
    layers.Resolve(symbols_opt, "symbols", &symbols);
    layers.Resolve(gazetteer_opt, "gazetteer", &gazetteer);
  }

  LexiconPaths Paths() const {
    LexiconPaths p = LexiconPaths::FromDataDir(data_dir);
    if (!vocab.empty()) p.vocabulary = vocab;
    if (!expansions.empty()) p.expansions = expansions;
    if (!symbols.empty()) p.symbols = symbols;
    if (!gazetteer.empty()) p.gazetteer = gazetteer;
    return p;
  }
};

std::vector<std::string> ReadAll(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> ReadInput(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return ReadAll(in);
  std::ifstream file(path);
  if (!file) throw LoadError(path);
  return ReadAll(file);
}

// Writes to `path`, or to `fallback` when path is empty or "-".
void WriteOutput(const std::string& path, std::ostream& fallback,
                 const std::string& data) {
  if (path.empty() || path == "-") {
    fallback << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw LoadError(path, "cannot open for writing");
  file << data;
  if (!file) throw LoadError(path, "write failed");
}

int DefaultJobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// ---------------------------------------------------------------------------
// normalize

struct NormalizeFlags {
  std::string config;
  std::string strategy = "oov";
  std::string backend;
  std::string trace;
  double threshold = 0.25;
  std::size_t list_cap = 5000;
  std::string in, out;
  int jobs = DefaultJobs();
  std::string substitution = "both";
  bool progressive = false;
  std::string ner_url;
  bool strict = false;
  bool timing = false;
  int ngram_order = 3;
  std::size_t trace_top_n = 3;
  int remote_in_flight = 4;
  int remote_attempts = 3;
  int remote_timeout_ms = 10000;
  DataFlags data;
  std::map<std::string, CLI::Option*> opts;
};

void AddNormalize(CLI::App* app, NormalizeFlags* f) {
  auto& o = f->opts;
  o["strategy"] = app->add_option("--strategy", f->strategy,
                                  "oov (mask unnormalized words) or wbw "
                                  "(mask every word)");
  o["backend"] = app->add_option("--backend", f->backend,
                                 "fixture:<file>, ngram:<corpus> or "
                                 "remote:<url>");
  o["trace"] = app->add_option("--trace", f->trace,
                               "Write one JSON trace per sentence here");
  o["threshold"] = app->add_option("--threshold", f->threshold,
                                   "Minimum final score for a replacement");
  o["list_cap"] = app->add_option("--list-cap", f->list_cap,
                                  "Candidates considered per masked word");
  o["in"] = app->add_option("--in", f->in, "Input file (default stdin)");
  o["out"] = app->add_option("--out", f->out, "Output file (default stdout)");
  o["jobs"] = app->add_option("--jobs", f->jobs, "Worker threads");
  o["substitution"] = app->add_option(
      "--substitution", f->substitution,
      "Symbol substitution for string similarity too (both) or only for "
      "phonetic codes (phonetic)");
  o["progressive"] = app->add_flag("--progressive", f->progressive,
                                   "Use earlier replacements as context");
  o["ner_url"] = app->add_option("--ner-url", f->ner_url,
                                 "Remote NER service base URL");
  o["strict"] = app->add_flag("--strict", f->strict,
                              "Exit 4 if the remote backend failed");
  o["timing"] = app->add_flag("--timing", f->timing,
                              "Record per-sentence latency in traces");
  o["ngram_order"] = app->add_option("--ngram-order", f->ngram_order,
                                     "Order of the n-gram backend (2 or 3)");
  o["trace_top_n"] = app->add_option("--trace-top-n", f->trace_top_n,
                                     "Scored candidates kept per trace row");
  o["remote_in_flight"] = app->add_option(
      "--remote-in-flight", f->remote_in_flight,
      "Concurrent requests to the remote backend");
  o["remote_attempts"] = app->add_option("--remote-attempts",
                                         f->remote_attempts,
                                         "Attempts per remote request");
  o["remote_timeout_ms"] = app->add_option("--remote-timeout-ms",
                                           f->remote_timeout_ms,
                                           "Remote request timeout");
  app->add_option("--config", f->config, "key = value settings file");
  f->data.Add(app);
}

int RunNormalize(NormalizeFlags& f, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  Layers layers;
  if (f.config.empty()) {
    if (const char* c = std::getenv("NORMPIPE_CONFIG"); c != nullptr) {
      f.config = c;
    }
  }
  if (!f.config.empty()) layers.LoadConfig(f.config);
  auto& o = f.opts;
  layers.Resolve(o["strategy"], "strategy", &f.strategy);
  layers.Resolve(o["backend"], "backend", &f.backend);
  layers.Resolve(o["trace"], "trace", &f.trace);
  layers.Resolve(o["threshold"], "threshold", &f.threshold);
  layers.Resolve(o["list_cap"], "list_cap", &f.list_cap);
  layers.Resolve(o["jobs"], "jobs", &f.jobs);
  layers.Resolve(o["substitution"], "substitution", &f.substitution);
  layers.Resolve(o["progressive"], "progressive", &f.progressive);
  layers.Resolve(o["ner_url"], "ner_url", &f.ner_url);
  layers.Resolve(o["strict"], "strict", &f.strict);
  layers.Resolve(o["timing"], "timing", &f.timing);
  layers.Resolve(o["ngram_order"], "ngram_order", &f.ngram_order);
  layers.Resolve(o["trace_top_n"], "trace_top_n", &f.trace_top_n);
  layers.Resolve(o["remote_in_flight"], "remote_in_flight",
                 &f.remote_in_flight);
  layers.Resolve(o["remote_attempts"], "remote_attempts", &f.remote_attempts);
  layers.Resolve(o["remote_timeout_ms"], "remote_timeout_ms",
                 &f.remote_timeout_ms);
  f.data.Resolve(layers);

  NormalizationConfig cfg;
  cfg.strategy = ParseStrategy(f.strategy);
  cfg.substitution_scope = ParseSubstitutionScope(f.substitution);
  cfg.threshold = f.threshold;
  cfg.list_cap = f.list_cap;
  cfg.progressive_context = f.progressive;
  cfg.trace_top_n = f.trace_top_n;
  cfg.record_timing = f.timing;
  cfg.Validate();
  if (f.backend.empty()) throw UsageError("--backend is required");
  if (f.jobs < 1) throw UsageError("--jobs must be at least 1");

  BackendOptions backend;
  backend.ngram_order = f.ngram_order;
  backend.remote.max_in_flight = f.remote_in_flight;
  backend.remote.max_attempts = f.remote_attempts;
  backend.remote.timeout = std::chrono::milliseconds(f.remote_timeout_ms);
  if (f.ngram_order != 2 && f.ngram_order != 3) {
    throw UsageError("--ngram-order must be 2 or 3");
  }

  const Lexicon lexicon = Lexicon::Load(f.data.Paths());
  std::optional<RemoteNerOptions> ner;
  if (!f.ner_url.empty()) ner = RemoteNerOptions{f.ner_url};
  const EntityRecognizer recognizer(lexicon, ner);
  const std::unique_ptr<ContextModel> model =
      MakeContextModel(f.backend, backend);
  const Normalizer normalizer(lexicon, recognizer, *model, cfg);

  const std::vector<std::string> lines = ReadInput(f.in, in);
  const std::vector<TextResult> results =
      normalizer.NormalizeLines(lines, f.jobs);

  std::string text_out;
  std::string trace_out;
  std::size_t failures = 0;
  for (const TextResult& r : results) {
    text_out += r.output;
    text_out += '\n';
    for (const NormalizationTrace& t : r.traces) {
      failures += t.transport_failures;
      for (const std::string& w : t.warnings) {
        err << "warning: line " << t.line + 1 << ": " << w << '\n';
      }
      if (!f.trace.empty()) {
        trace_out += TraceToJson(t).dump();
        trace_out += '\n';
      }
    }
  }
  WriteOutput(f.out, out, text_out);
  if (!f.trace.empty()) WriteOutput(f.trace, out, trace_out);
  if (f.strict && failures > 0) {
    err << "error: " << failures
        << " context-model request(s) failed (--strict)\n";
    return kExitRemote;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// noise

struct NoiseFlags {
  double rate = 0.2;
  std::string ops = "insert,delete,swap,vowel,stretch,symbol";
  std::uint64_t seed = 42;
  std::string align;
  int count = 1;
  std::string in, out;
  DataFlags data;
};

void AddNoise(CLI::App* app, NoiseFlags* f) {
  app->add_option("--rate", f->rate, "Probability of perturbing each word");
  app->add_option("--ops", f->ops,
                  "Comma separated: insert,delete,swap,vowel,stretch,symbol");
  app->add_option("--seed", f->seed, "Random seed");
  app->add_option("--align", f->align, "Write the gold alignment TSV here");
  app->add_option("--count", f->count, "Operations per perturbed word");
  app->add_option("--in", f->in, "Clean input (default stdin)");
  app->add_option("--out", f->out, "Noisy output (default stdout)");
  f->data.Add(app);
}

int RunNoise(NoiseFlags& f, std::istream& in, std::ostream& out,
             std::ostream& err) {
  if (!(f.rate >= 0.0 && f.rate <= 1.0)) {
    throw UsageError("--rate must lie in [0, 1]");
  }
  if (f.count < 0) throw UsageError("--count must be >= 0");
  const NoiseOps ops = ParseNoiseOps(f.ops);
  SymbolMap symbols;
  if (ops.count(NoiseOp::kSymbolSub) > 0) {
    symbols = LoadSymbolMap(f.data.Paths().symbols);
  }
  const NoiseGenerator gen(std::move(symbols));
  const std::vector<std::string> lines = ReadInput(f.in, in);
  const NoisyCorpus corpus =
      gen.PerturbCorpus(lines, f.rate, ops, f.seed, f.count);

  std::string text_out;
  for (const std::string& l : corpus.lines) text_out += l + "\n";
  WriteOutput(f.out, out, text_out);
  if (!f.align.empty()) WriteAlignment(f.align, corpus.alignment);
  err << "informality ratio " << Fixed(corpus.informality_ratio, 4) << " ("
      << corpus.alignment.size() << "/" << corpus.words << " words changed)\n";
  if (corpus.exhausted_words > 0) {
    err << "warning: " << corpus.exhausted_words
        << " word(s) had no applicable operation\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval

struct EvalFlags {
  std::string ratings_file;
  std::string sys, gold, align, source, vocab_filter;
  std::string trace_a, trace_b, label_a = "a", label_b = "b";
  std::string out;
  bool as_json = false;
};

// Missing or unreadable evaluation inputs are usage errors.
template <typename F>
auto Input(F&& load) {
  try {
    return load();
  } catch (const LoadError& e) {
    throw UsageError(e.what());
  }
}

std::string WordMetricsText(const WordMetrics& m) {
  auto opt = [](const std::optional<double>& v) {
    return v ? Fixed(*v, 4) : std::string("n/a");
  };
  std::ostringstream s;
  s << "word_acc " << Fixed(m.word_acc, 4) << " (" << m.matched_words << "/"
    << m.gold_words << ")\n";
  s << "changed_word_acc " << opt(m.changed_word_acc) << " ("
    << m.changed_words << " changed)\n";
  s << "unchanged_false_change " << opt(m.unchanged_false_change) << " ("
    << m.false_changes << "/" << m.unchanged_words << ")\n";
  return s.str();
}

std::function<bool(std::string_view)> VocabularyFilter(const std::string& path) {
  if (path.empty()) return {};
  auto words = std::make_shared<std::unordered_set<std::string>>();
  for (const std::string& w : Input([&] { return ReadLines(path); })) {
    const std::string_view t = text::Trim(w);
    if (!t.empty() && t.front() != '#') words->insert(text::Lowercase(t));
  }
  return [words](std::string_view w) {
    return words->count(std::string(w)) > 0;
  };
}

WordMetrics EvaluateFiles(const std::vector<std::string>& sys,
                          const EvalFlags& f) {
  const auto gold = Input([&] { return ReadLines(f.gold); });
  std::vector<AlignmentEntry> alignment;
  std::vector<std::string> source;
  WordEvalOptions options;
  if (!f.align.empty()) {
    alignment = Input([&] { return LoadAlignment(f.align); });
    options.alignment = &alignment;
  }
  if (!f.source.empty()) {
    source = Input([&] { return ReadLines(f.source); });
    options.source = &source;
  }
  options.unchanged_filter = VocabularyFilter(f.vocab_filter);
  return EvaluateWords(sys, gold, options);
}

int RunEvalRatings(const EvalFlags& f, std::ostream& out) {
  const auto records = Input([&] { return LoadRatings(f.ratings_file); });
  const double acc = RatingAccuracy(records);
  std::string data;
  if (f.as_json) {
    data = json{{"accuracy", acc}, {"tuples", records.size()}}.dump() + "\n";
  } else {
    data = Fixed(acc, 2) + "\n";
  }
  WriteOutput(f.out, out, data);
  return kExitOk;
}

int RunEvalWords(const EvalFlags& f, std::ostream& out) {
  const auto sys = Input([&] { return ReadLines(f.sys); });
  const WordMetrics m = EvaluateFiles(sys, f);
  WriteOutput(f.out, out,
              f.as_json ? ToJson(m).dump(2) + "\n" : WordMetricsText(m));
  return kExitOk;
}

int RunEvalCompare(const EvalFlags& f, std::ostream& out) {
  const auto a = Input([&] { return LoadTraces(f.trace_a); });
  const auto b = Input([&] { return LoadTraces(f.trace_b); });
  std::optional<WordMetrics> wa, wb;
  if (!f.gold.empty()) {
    const std::size_t lines = Input([&] { return ReadLines(f.gold); }).size();
    wa = EvaluateFiles(OutputsByLine(a, lines), f);
    wb = EvaluateFiles(OutputsByLine(b, lines), f);
  }
  CompareReport report = Compare(a, b, wa, wb);
  report.label_a = f.label_a;
  report.label_b = f.label_b;
  WriteOutput(f.out, out,
              f.as_json ? ToJson(report).dump(2) + "\n" : FormatTable(report));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// encode / sim

int RunEncode(const std::string& alg, const std::string& word,
              std::ostream& out) {
  if (word.empty()) throw UsageError("word must not be empty");
  const PhoneticAlgorithm a = ParsePhoneticAlgorithm(alg);
  try {
    out << Encode(a, word).code << '\n';
  } catch (const EncodingError& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int RunSim(const std::string& x, const std::string& y,
           const std::string& substitution, const DataFlags& data,
           std::ostream& out) {
  if (x.empty() || y.empty()) throw UsageError("words must not be empty");
  const Lexicon symbols_only({}, {}, LoadSymbolMap(data.Paths().symbols), {});
  const std::string candidate = text::Lowercase(x);
  const std::string observed = text::Lowercase(y);
  WordForms forms;
  forms.phonetic_form = symbols_only.SubstituteSymbols(observed);
  if (forms.phonetic_form.empty()) forms.phonetic_form = observed;
  forms.string_form =
      ParseSubstitutionScope(substitution) == SubstitutionScope::kBoth
          ? forms.phonetic_form
          : observed;
  const SimilarityBreakdown b = ScoreSimilarity(candidate, forms);
  std::string branch(EndpointRuleName(b.rule));
  if (b.rule == EndpointRule::kBoost) branch += " (squared)";
  if (b.rule == EndpointRule::kDilute) branch += " (square root)";
  out << "candidate " << candidate << "\n"
      << "observed " << forms.phonetic_form << "\n"
      << "ssim " << Fixed(b.s_sim, 6) << "\n"
      << "  levenshtein " << Fixed(b.ssim.levenshtein, 6) << "\n"
      << "  jaro_winkler " << Fixed(b.ssim.jaro_winkler, 6) << "\n"
      << "  unigram_cosine " << Fixed(b.ssim.unigram_cosine, 6) << "\n"
      << "  bigram_cosine " << Fixed(b.ssim.bigram_cosine, 6) << "\n"
      << "psim " << Fixed(b.p_sim, 6)
      << (b.phonetic_error ? " (encoding failed)" : "") << "\n"
      << "base " << Fixed(b.base, 6) << "\n"
      << "branch " << branch << "\n"
      << "sim_score " << Fixed(b.sim_score, 6) << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"normpipe: normalize informal English text"};
  app.name("normpipe");
  app.require_subcommand(1);

  NormalizeFlags norm;
  CLI::App* normalize =
      app.add_subcommand("normalize", "Normalize text, one line at a time");
  AddNormalize(normalize, &norm);

  NoiseFlags noise;
  CLI::App* noise_cmd =
      app.add_subcommand("noise", "Perturb a clean corpus");
  AddNoise(noise_cmd, &noise);

  EvalFlags ev;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate outputs");
  eval->require_subcommand(1);
  CLI::App* ratings =
      eval->add_subcommand("ratings", "Rating-based accuracy from a CSV");
  ratings->add_option("--file", ev.ratings_file, "tuple_id,rating CSV")
      ->required();
  CLI::App* words =
      eval->add_subcommand("words", "Word accuracy against gold text");
  words->add_option("--sys", ev.sys, "System output")->required();
  words->add_option("--gold", ev.gold, "Gold text")->required();
  CLI::App* compare =
      eval->add_subcommand("compare", "Compare two normalization runs");
  compare->add_option("--trace-a", ev.trace_a, "Traces of run a")->required();
  compare->add_option("--trace-b", ev.trace_b, "Traces of run b")->required();
  compare->add_option("--label-a", ev.label_a, "Name of run a");
  compare->add_option("--label-b", ev.label_b, "Name of run b");
  compare->add_option("--gold", ev.gold, "Gold text for word metrics");
  for (CLI::App* sub : {words, compare}) {
    sub->add_option("--align", ev.align, "Noise alignment TSV");
    sub->add_option("--source", ev.source, "Lines the system was given");
    sub->add_option("--vocab-filter", ev.vocab_filter,
                    "Count false changes only on words in this list");
  }
  for (CLI::App* sub : {ratings, words, compare}) {
    sub->add_flag("--json", ev.as_json, "Print JSON");
    sub->add_option("--out", ev.out, "Write the report here");
  }

  std::string alg = "soundex";
  std::string word;
  CLI::App* encode = app.add_subcommand("encode", "Print a phonetic code");
  encode->add_option("--alg", alg, "soundex, metaphone or fuzzy");
  encode->add_option("word", word, "Word to encode")->required();

  std::string sim_x, sim_y, sim_scope = "both";
  DataFlags sim_data;
  CLI::App* sim = app.add_subcommand(
      "sim", "Similarity of candidate x to observed word y");
  sim->add_option("x", sim_x, "Candidate word")->required();
  sim->add_option("y", sim_y, "Observed word")->required();
  sim->add_option("--substitution", sim_scope, "both or phonetic");
  sim_data.Add(sim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*normalize) return RunNormalize(norm, in, out, err);
    if (*noise_cmd) return RunNoise(noise, in, out, err);
    if (*ratings) return RunEvalRatings(ev, out);
    if (*words) return RunEvalWords(ev, out);
    if (*compare) return RunEvalCompare(ev, out);
    if (*encode) return RunEncode(alg, word, out);
    if (*sim) return RunSim(sim_x, sim_y, sim_scope, sim_data, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TransportError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRemote;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace normpipe
