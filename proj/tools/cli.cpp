// Copyright 2026 The sentalign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>

#include "run_config.hpp"
#include "sentalign/errors.hpp"
#include "sentalign/lexicon.hpp"

namespace sentalign::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Raw flag values; applied on top of the config file only when given.
struct Flags {
  std::string config;
  std::string source, target, trans, gold, hyp, ref;
  std::string out_source, out_target, report, out, tuning_report;
  std::string provider, provider_file, url, response_field, cache;
  std::size_t max_concurrency = 4;
  std::size_t timeout_ms = 10000;
  unsigned retries = 2;
  std::string src_lang, tgt_lang;
  std::string chain;
  std::size_t window = 20, lookahead = 1, cap = kDefaultVariantCap;
  std::string stopwords, synonyms;
  std::string bp_form;
  std::size_t order = kDefaultBleuOrder;
  double smoothing = 0.0;
  double resolution = kDefaultTuningResolution;
  bool stats = false;
};

void add_path_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--source", f.source, "Source-language corpus, one sentence per line");
  sub->add_option("--target", f.target, "Target-language corpus");
  sub->add_option("--trans", f.trans, "Intermediate translation of the source corpus");
  sub->add_option("--gold", f.gold, "Gold target text, line i for source line i");
}

void add_provider_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--provider", f.provider, "Translation provider")
      ->check(CLI::IsMember({"file", "http"}));
  sub->add_option("--provider-file", f.provider_file, "Pre-translated file for --provider file");
  sub->add_option("--url", f.url, "URL template for --provider http ({text} {src} {tgt})");
  sub->add_option("--response-field", f.response_field, "Dotted JSON path of the translation");
  sub->add_option("--max-concurrency", f.max_concurrency, "Concurrent HTTP requests");
  sub->add_option("--timeout-ms", f.timeout_ms, "HTTP timeout per request");
  sub->add_option("--retries", f.retries, "Retries on transient HTTP failure");
  sub->add_option("--cache", f.cache, "Translation cache (TSV)");
  sub->add_option("--src-lang", f.src_lang, "Source language tag");
  sub->add_option("--tgt-lang", f.tgt_lang, "Target language tag");
  sub->add_flag("--stats", f.stats, "Print translation statistics");
}

void add_alignment_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--chain", f.chain, "Comparator chain kind:threshold[,kind:threshold...]");
  sub->add_option("--window", f.window, "Candidate half-width around the expected position (0 = all)");
  sub->add_option("--lookahead", f.lookahead, "Following lines that may contest a candidate");
  sub->add_option("--stopwords", f.stopwords, "Stop-word list");
  sub->add_option("--synonyms", f.synonyms, "Synonym lexicon (headword<TAB>syn,syn,...)");
  sub->add_option("--cap", f.cap, "Maximum synonym variants per sentence")->check(CLI::PositiveNumber);
}

RunConfig build_config(const CLI::App& sub, const Flags& f) {
  RunConfig c;
  if (sub.count("--config")) apply_config_file(f.config, c);
  auto given = [&](const char* name) {
    try {
      return sub.count(name) > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  auto path_flag = [&](const char* name, const std::string& value,
                       std::optional<fs::path>& slot) {
    if (given(name)) slot = fs::path(value);
  };
  path_flag("--source", f.source, c.paths.source);
  path_flag("--target", f.target, c.paths.target);
  path_flag("--trans", f.trans, c.paths.trans);
  path_flag("--gold", f.gold, c.paths.gold);
  path_flag("--hyp", f.hyp, c.paths.hyp);
  path_flag("--ref", f.ref, c.paths.ref);
  path_flag("--out-source", f.out_source, c.paths.out_source);
  path_flag("--out-target", f.out_target, c.paths.out_target);
  path_flag("--report", f.report, c.paths.report);
  path_flag("--out", f.out, c.paths.out);
  path_flag("--tuning-report", f.tuning_report, c.paths.tuning_report);
  path_flag("--cache", f.cache, c.cache);
  path_flag("--stopwords", f.stopwords, c.stopwords);
  path_flag("--synonyms", f.synonyms, c.synonyms);

  if (given("--provider")) {
    c.provider.kind = f.provider == "file" ? ProviderKind::kFile : ProviderKind::kHttp;
  }
  if (given("--provider-file")) {
    c.provider.file = f.provider_file;
    if (!given("--provider") && c.provider.kind == ProviderKind::kNone) c.provider.kind = ProviderKind::kFile;
  }
  if (given("--url")) c.provider.http.url_template = f.url;
  if (given("--response-field")) c.provider.http.response_field = f.response_field;
  if (given("--max-concurrency")) c.provider.http.max_concurrency = f.max_concurrency;
  if (given("--timeout-ms")) c.provider.http.timeout = std::chrono::milliseconds(f.timeout_ms);
  if (given("--retries")) c.provider.http.retries = f.retries;
  if (given("--src-lang")) c.languages.source = f.src_lang;
  if (given("--tgt-lang")) c.languages.target = f.tgt_lang;
  if (given("--chain")) c.chain = ComparatorChain::parse(f.chain);
  if (given("--window")) c.window = f.window;
  if (given("--lookahead")) c.lookahead = f.lookahead;
  if (given("--cap")) c.cap = f.cap;
  if (given("--bp-form")) c.brevity = parse_brevity_form(f.bp_form);
  if (given("--order")) c.bleu_order = f.order;
  if (given("--smoothing")) c.smoothing = f.smoothing;
  if (given("--resolution")) c.resolution = f.resolution;
  if (given("--stats")) c.stats = f.stats;

  if (c.bleu_order == 0) throw ConfigError("--order must be at least 1");
  if (c.smoothing < 0.0) throw ConfigError("--smoothing must be non-negative");
  if (!(c.resolution > 0.0)) throw ConfigError("--resolution must be positive");
  if (c.provider.kind == ProviderKind::kHttp && c.provider.http.max_concurrency == 0) {
    throw ConfigError("--max-concurrency must be at least 1");
  }
  return c;
}

std::optional<fs::path> provider_file_slot(const RunConfig& c) {
  if (c.provider.kind == ProviderKind::kFile) return c.provider.file;
  return std::nullopt;
}

std::unique_ptr<TranslationProvider> make_provider(const RunConfig& c) {
  switch (c.provider.kind) {
    case ProviderKind::kFile:
      if (c.provider.file.empty()) throw ConfigError("--provider file needs --provider-file");
      return std::make_unique<FileProvider>(c.provider.file);
    case ProviderKind::kHttp:
      return std::make_unique<HttpProvider>(c.provider.http);
    case ProviderKind::kNone:
      break;
  }
  throw ConfigError("no translation provider configured (use --provider or --trans)");
}

const fs::path& required(const std::optional<fs::path>& p, const char* flag) {
  if (!p) throw ConfigError(std::string("missing required ") + flag);
  return *p;
}

void warn_skipped(std::ostream& err, const fs::path& path, const SkipReport& skipped) {
  if (skipped.empty_lines.empty()) return;
  err << "warning: " << path.string() << ": skipped " << skipped.empty_lines.size()
      << " empty line(s), first at line " << skipped.empty_lines.front() << '\n';
}

Corpus load_reporting(const fs::path& path, const std::string& lang, std::ostream& err) {
  SkipReport skipped;
  Corpus c = load_corpus(path, lang, &skipped);
  warn_skipped(err, path, skipped);
  return c;
}

struct Resources {
  StopWordList stopwords;
  SynonymLexicon synonyms;
  ScoringContext context;
};

std::unique_ptr<Resources> load_resources(const RunConfig& c) {
  auto r = std::make_unique<Resources>();
  if (c.stopwords) r->stopwords = load_stopwords(*c.stopwords, c.languages.target);
  if (c.synonyms) r->synonyms = load_synonyms(*c.synonyms, c.languages.target);
  r->context.stopwords = &r->stopwords;
  r->context.lexicon = &r->synonyms;
  r->context.cap = c.cap;
  return r;
}

AlignmentConfig alignment_config(const RunConfig& c) {
  AlignmentConfig a;
  a.chain = c.chain;
  a.window = c.window;
  a.lookahead_depth = c.lookahead;
  a.cap = c.cap;
  return a;
}

Json stats_json(const TranslationStats& s) {
  Json j;
  j["lines"] = s.lines;
  j["provider_calls"] = s.provider_calls;
  j["cache_hits"] = s.cache_hits;
  return j;
}

// Translates `source` with the configured provider and cache.
Corpus translate_with_config(const Corpus& source, const RunConfig& c, std::ostream& out) {
  auto provider = make_provider(c);
  TranslationCache cache;
  if (c.cache) cache.load(*c.cache, c.languages);
  TranslationStats stats;
  Corpus trans = translate_corpus(source, *provider, cache, c.languages, &stats);
  if (c.cache) cache.save(*c.cache, c.languages);
  if (c.stats) out << Json{{"stats", stats_json(stats)}}.dump() << '\n';
  return trans;
}

Json chain_json(const ComparatorChain& chain) {
  Json arr = Json::array();
  for (const auto& comp : chain.comparators()) {
    arr.push_back(Json{{"kind", to_string(comp.kind)}, {"threshold", comp.threshold.value()}});
  }
  return arr;
}

int cmd_translate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const fs::path& source_path = required(c.paths.source, "--source");
  const fs::path& trans_path = required(c.paths.trans, "--trans (output path)");
  if (c.provider.kind == ProviderKind::kNone) throw ConfigError("translate needs --provider");
  const auto provider_file = provider_file_slot(c);
  require_existing({&c.paths.source, &provider_file});

  const Corpus source = load_reporting(source_path, c.languages.source, err);
  const Corpus trans = translate_with_config(source, c, out);
  save_corpus(trans, trans_path);
  return kExitOk;
}

int cmd_align(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const fs::path& source_path = required(c.paths.source, "--source");
  const fs::path& target_path = required(c.paths.target, "--target");
  const auto provider_file = provider_file_slot(c);
  require_existing({&c.paths.source, &c.paths.target, &c.paths.trans, &c.stopwords, &c.synonyms,
                    &provider_file});
  if (!c.paths.trans && c.provider.kind == ProviderKind::kNone) {
    throw ConfigError("align needs --trans or a translation provider");
  }

  const auto resources = load_resources(c);
  const Corpus source = load_reporting(source_path, c.languages.source, err);
  const Corpus target = load_reporting(target_path, c.languages.target, err);
  const Corpus trans = c.paths.trans ? load_reporting(*c.paths.trans, c.languages.target, err)
                                     : translate_with_config(source, c, out);

  const AlignmentResult result = align(source, target, trans, alignment_config(c), resources->context);

  const fs::path out_source = c.paths.out_source.value_or(fs::path(source_path.string() + ".aligned"));
  const fs::path out_target = c.paths.out_target.value_or(fs::path(target_path.string() + ".aligned"));
  const fs::path report = c.paths.report.value_or(fs::path(source_path.string() + ".report.jsonl"));
  write_alignment(result, out_source, out_target, report);

  Json summary;
  summary["A"] = result.counts.aligned;
  summary["T"] = result.counts.translated;
  summary["D"] = result.counts.disproportion;
  summary["L"] = result.counts.lines;
  summary["unmatched_targets"] = result.unmatched_target_indices.size();
  out << summary.dump() << '\n';
  return kExitOk;
}

Json score_json(const ScoreCard& card) {
  Json j;
  j["A"] = card.aligned;
  j["M"] = card.misaligned;
  j["T"] = card.translated;
  j["D"] = card.disproportion;
  j["L"] = card.lines;
  j["S"] = card.score;
  return j;
}

int cmd_score(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const fs::path& report_path = required(c.paths.report, "--report");
  const fs::path& gold_path = required(c.paths.gold, "--gold");
  require_existing({&c.paths.report, &c.paths.gold});

  const AlignmentResult result = read_report(report_path);
  const std::vector<std::string> gold = read_lines(gold_path);
  if (gold.size() < result.decisions.size()) {
    throw DataError("gold has " + std::to_string(gold.size()) + " lines but the report has " +
                    std::to_string(result.decisions.size()) + " records");
  }
  const ScoreCard card = evaluate_against_gold(result, gold);
  if (!card.in_nominal_range()) {
    err << "warning: score " << card.score << " is outside the nominal 1..100 range\n";
  }
  out << score_json(card).dump() << '\n';
  return kExitOk;
}

int cmd_evaluate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const fs::path& hyp_path = required(c.paths.hyp, "--hyp");
  const fs::path& ref_path = required(c.paths.ref, "--ref");
  require_existing({&c.paths.hyp, &c.paths.ref});

  const Corpus hyp = load_reporting(hyp_path, c.languages.target, err);
  const Corpus ref = load_reporting(ref_path, c.languages.target, err);
  EvaluationOptions options;
  options.order = c.bleu_order;
  options.bleu.brevity = c.brevity;
  options.bleu.smoothing = c.smoothing;
  const CorpusEvaluation e = evaluate_corpus(hyp, ref, options);

  Json j;
  j["bleu"] = e.bleu;
  j["ter"] = e.ter;
  j["cer"] = e.cer;
  j["c"] = e.candidate_length;
  j["r"] = e.reference_length;
  j["per_order_precisions"] = e.precisions;
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_tune(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const fs::path& source_path = required(c.paths.source, "--source");
  const fs::path& target_path = required(c.paths.target, "--target");
  const fs::path& gold_path = required(c.paths.gold, "--gold");
  const auto provider_file = provider_file_slot(c);
  require_existing({&c.paths.source, &c.paths.target, &c.paths.trans, &c.paths.gold, &c.stopwords,
                    &c.synonyms, &provider_file});
  if (!c.paths.trans && c.provider.kind == ProviderKind::kNone) {
    throw ConfigError("tune needs --trans or a translation provider");
  }

  const auto resources = load_resources(c);
  TuningJob job;
  job.dev_source = load_reporting(source_path, c.languages.source, err);
  job.dev_target = load_reporting(target_path, c.languages.target, err);
  job.dev_trans = c.paths.trans ? load_reporting(*c.paths.trans, c.languages.target, err)
                                : translate_with_config(job.dev_source, c, out);
  job.gold = read_lines(gold_path);
  job.chain_template = c.chain;
  job.bounds = c.bounds;
  job.resolution = c.resolution;
  job.alignment = alignment_config(c);
  job.resources = resources->context;

  const std::size_t n = job.dev_source.size();
  if (n < kRecommendedDevMin || n > kRecommendedDevMax) {
    err << "warning: development set has " << n << " lines; " << kRecommendedDevMin << " to "
        << kRecommendedDevMax << " lines tune best\n";
  }

  const TuningReport report = tune_chain(job);

  Json fragment;
  fragment["chain"] = chain_json(report.chain);
  if (c.paths.out) {
    std::ofstream f(*c.paths.out, std::ios::binary | std::ios::trunc);
    if (!f) throw DataError("cannot write " + c.paths.out->string());
    f << fragment.dump(2) << '\n';
  }

  Json j;
  j["thresholds"] = report.thresholds;
  j["chain"] = chain_json(report.chain);
  j["achieved_S"] = report.achieved_score;
  j["evaluation_count"] = report.evaluation_count;
  Json trace = Json::array();
  for (const auto& t : report.trace) {
    trace.push_back(Json{{"comparator", t.comparator}, {"threshold", t.threshold}, {"S", t.score}});
  }
  j["trace"] = std::move(trace);
  if (c.paths.tuning_report) {
    std::ofstream f(*c.paths.tuning_report, std::ios::binary | std::ios::trunc);
    if (!f) throw DataError("cannot write " + c.paths.tuning_report->string());
    f << j.dump(2) << '\n';
  }
  out << j.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sentalign: sentence alignment for parallel corpora"};
  app.require_subcommand(1);
  Flags f;

  auto* translate = app.add_subcommand("translate", "Write the intermediate translation of --source to --trans");
  auto* align_cmd = app.add_subcommand("align", "Align --source and --target via the intermediate translation");
  auto* score = app.add_subcommand("score", "Score an alignment report against a gold file");
  auto* evaluate = app.add_subcommand("evaluate", "BLEU, TER and CER of --hyp against --ref");
  auto* tune = app.add_subcommand("tune", "Binary-search comparator thresholds on a development set");

  for (auto* sub : {translate, align_cmd, score, evaluate, tune}) {
    sub->add_option("--config", f.config, "JSON configuration file")->check(CLI::ExistingFile);
  }
  add_path_flags(translate, f);
  add_provider_flags(translate, f);

  add_path_flags(align_cmd, f);
  add_provider_flags(align_cmd, f);
  add_alignment_flags(align_cmd, f);
  align_cmd->add_option("--out-source", f.out_source, "Aligned source output");
  align_cmd->add_option("--out-target", f.out_target, "Aligned target output");
  align_cmd->add_option("--report", f.report, "JSON-lines alignment report output");

  score->add_option("--report", f.report, "Alignment report written by align");
  score->add_option("--gold", f.gold, "Gold target text");

  evaluate->add_option("--hyp", f.hyp, "Hypothesis file");
  evaluate->add_option("--ref", f.ref, "Reference file");
  evaluate->add_option("--bp-form", f.bp_form, "Brevity penalty form")
      ->check(CLI::IsMember({"standard", "paper"}));
  evaluate->add_option("--order", f.order, "Maximum n-gram order");
  evaluate->add_option("--smoothing", f.smoothing, "Add-epsilon smoothing of precisions (0 = off)");

  add_path_flags(tune, f);
  add_provider_flags(tune, f);
  add_alignment_flags(tune, f);
  tune->add_option("--out", f.out, "Write the tuned chain as a config fragment");
  tune->add_option("--tuning-report", f.tuning_report, "Write the tuning report JSON");
  tune->add_option("--resolution", f.resolution, "Stop when the search interval is this narrow");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto* sub : app.get_subcommands()) {
      const RunConfig config = build_config(*sub, f);
      if (sub == translate) return cmd_translate(config, out, err);
      if (sub == align_cmd) return cmd_align(config, out, err);
      if (sub == score) return cmd_score(config, out, err);
      if (sub == evaluate) return cmd_evaluate(config, out, err);
      if (sub == tune) return cmd_tune(config, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ProviderError& e) {
    err << "error: translation provider: " << e.what() << '\n';
    return kExitProvider;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace sentalign::cli
