// Copyright 2026 The Acroforge Authors.
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

// acroforge: build acronym dictionaries and disambiguation benchmarks, and
// score/evaluate disambiguation systems.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "acroforge/benchgen.hpp"
#include "acroforge/corpusgen.hpp"
#include "acroforge/dict.hpp"
#include "acroforge/error.hpp"
#include "acroforge/eval.hpp"
#include "acroforge/extract.hpp"
#include "acroforge/pipeline.hpp"
#include "acroforge/rank.hpp"
#include "acroforge/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace acroforge;

namespace {

std::vector<ExtractionRecord> read_records(const std::vector<std::string> &paths) {
  std::vector<ExtractionRecord> records;
  for (const std::string &p : paths) {
    auto part = read_ndjson_file<ExtractionRecord>(p);
    std::move(part.begin(), part.end(), std::back_inserter(records));
  }
  return records;
}

SplitRatios parse_ratios(const std::string &text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception &) {
      throw Error(ErrorCode::kConfig, "bad ratio '" + item + "'");
    }
  }
  if (values.size() != 3) throw Error(ErrorCode::kConfig, "--ratios needs three values");
  return {values[0], values[1], values[2]};
}

void write_json_or_stdout(const std::string &path, const json &j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(1) << "\n";
  } else {
    write_text_file(path, j.dump(1) + "\n");
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"acroforge - acronym dictionaries, disambiguation benchmarks and evaluation"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  std::uint64_t seed = 13;
  app.add_option("--jobs", jobs, "worker threads / in-flight scorer requests")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "split seed");

  // extract
  auto *extract = app.add_subcommand("extract", "find (acronym, long form) pairs in documents");
  std::vector<std::string> ex_inputs;
  std::string ex_format = "ndjson";
  std::string ex_tag;
  std::string ex_out = "-";
  std::string ex_diag;
  extract->add_option("inputs", ex_inputs, "document files")->required()->check(CLI::ExistingFile);
  extract->add_option("--format", ex_format, "ndjson or text")->check(CLI::IsMember({"ndjson", "text"}));
  extract->add_option("--source-tag", ex_tag, "source tag for documents without one");
  extract->add_option("-o,--out", ex_out, "records NDJSON ('-' for stdout)");
  extract->add_option("--diagnostics", ex_diag, "write run diagnostics JSON here");

  // dict
  auto *dict_cmd = app.add_subcommand("dict", "build, merge, inspect dictionaries");
  dict_cmd->require_subcommand(1);
  auto *dict_build = dict_cmd->add_subcommand("build", "aggregate extraction records");
  std::vector<std::string> db_records;
  std::string db_out;
  dict_build->add_option("records", db_records, "records NDJSON")->required()->check(CLI::ExistingFile);
  dict_build->add_option("-o,--out", db_out, "dictionary JSON")->required();
  auto *dict_merge = dict_cmd->add_subcommand("merge", "merge dictionary shards");
  std::vector<std::string> dm_inputs;
  std::string dm_out;
  dict_merge->add_option("inputs", dm_inputs, "dictionary files")->required()->check(CLI::ExistingFile);
  dict_merge->add_option("-o,--out", dm_out, "merged dictionary JSON")->required();
  auto *dict_stats = dict_cmd->add_subcommand("stats", "print dictionary statistics");
  std::string ds_path;
  dict_stats->add_option("dictionary", ds_path)->required()->check(CLI::ExistingFile);
  auto *dict_lookup = dict_cmd->add_subcommand("lookup", "list long forms for an acronym");
  std::string dl_path;
  std::string dl_acronym;
  std::size_t dl_k = 0;
  dict_lookup->add_option("dictionary", dl_path)->required()->check(CLI::ExistingFile);
  dict_lookup->add_option("acronym", dl_acronym)->required();
  dict_lookup->add_option("-k,--truncate-k", dl_k, "show at most k clusters");

  // corpus
  auto *corpus = app.add_subcommand("corpus", "emit the pre-training corpus");
  std::vector<std::string> co_records;
  std::string co_dict;
  std::string co_out = "-";
  std::string co_stats;
  corpus->add_option("records", co_records)->required()->check(CLI::ExistingFile);
  corpus->add_option("--dict", co_dict)->required()->check(CLI::ExistingFile);
  corpus->add_option("-o,--out", co_out, "samples NDJSON ('-' for stdout)");
  corpus->add_option("--stats", co_stats, "write corpus statistics JSON here");

  // bench
  auto *bench = app.add_subcommand("bench", "build an acronym disambiguation benchmark");
  std::string be_mentions;
  std::string be_aliases;
  std::string be_dict;
  std::string be_out;
  std::string be_dict_out;
  std::string be_stats;
  std::string be_ratios = "6,2,2";
  bench->add_option("--mentions", be_mentions, "ED mentions NDJSON")->required()->check(CLI::ExistingFile);
  bench->add_option("--aliases", be_aliases, "kb_id<TAB>alias table")->required()->check(CLI::ExistingFile);
  bench->add_option("--dict", be_dict)->required()->check(CLI::ExistingFile);
  bench->add_option("-o,--out", be_out, "benchmark NDJSON")->required();
  bench->add_option("--dict-out", be_dict_out, "dictionary with injected pairs");
  bench->add_option("--stats", be_stats, "dataset statistics JSON ('-' for stdout)");
  bench->add_option("--ratios", be_ratios, "train,valid,test");

  // score
  auto *score = app.add_subcommand("score", "predict long forms for benchmark samples");
  std::string sc_bench;
  std::string sc_dict;
  std::string sc_out = "-";
  std::string sc_method = "popularity";
  std::string sc_split = "test";
  std::string sc_fallback = "abort";
  std::size_t sc_k = 0;
  long sc_timeout = 10000;
  score->add_option("--bench", sc_bench)->required()->check(CLI::ExistingFile);
  score->add_option("--dict", sc_dict)->required()->check(CLI::ExistingFile);
  score->add_option("-o,--out", sc_out, "predictions NDJSON");
  score->add_option("--method", sc_method, "popularity | bm25 | remote");
  score->add_option("--scorer", sc_method, "tcp:host:port | stdio:command (implies remote)");
  score->add_option("--split", sc_split, "train | valid | test | all");
  score->add_option("--truncate-k", sc_k, "keep the k most frequent candidates");
  score->add_option("--scorer-fallback", sc_fallback, "abort | popularity")
      ->check(CLI::IsMember({"abort", "popularity"}));
  score->add_option("--timeout-ms", sc_timeout, "per-reply scorer timeout");

  // eval
  auto *eval_cmd = app.add_subcommand("eval", "evaluate predictions");
  std::string ev_gold;
  std::string ev_pred;
  std::string ev_report = "-";
  std::string ev_text;
  std::string ev_csv;
  std::size_t ev_chunks = 10;
  bool ev_f1oa = false;
  eval_cmd->add_option("--gold", ev_gold, "benchmark NDJSON")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--pred", ev_pred, "predictions NDJSON")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--report", ev_report, "report JSON ('-' for stdout)");
  eval_cmd->add_option("--text", ev_text, "plain-text table");
  eval_cmd->add_option("--chunks-csv", ev_csv, "per-chunk CSV");
  eval_cmd->add_option("--chunks", ev_chunks, "robustness chunks");
  eval_cmd->add_flag("--f1-of-averages", ev_f1oa, "also report the F1-of-averages variant");

  // pipeline
  auto *pipeline = app.add_subcommand("pipeline", "run every stage from a config file");
  std::string pl_config;
  std::string pl_out;
  pipeline->add_option("config", pl_config)->required()->check(CLI::ExistingFile);
  pipeline->add_option("--output-dir", pl_out, "override output_dir");

  CLI11_PARSE(app, argc, argv);

  try {
    if (extract->parsed()) {
      std::vector<Document> docs;
      for (const std::string &p : ex_inputs) {
        auto part = read_documents(p, ex_format == "ndjson", ex_tag);
        std::move(part.begin(), part.end(), std::back_inserter(docs));
      }
      ExtractionDiagnostics diag;
      auto records = extract_documents(docs, jobs, &diag);
      if (ex_out == "-") {
        write_ndjson(std::cout, records);
      } else {
        write_ndjson_file(ex_out, records);
      }
      if (!ex_diag.empty()) write_json_or_stdout(ex_diag, diag);
      std::cerr << "extract: " << diag.documents << " documents, " << diag.sentences
                << " sentences, " << diag.records << " records, " << diag.unbalanced
                << " unbalanced parentheses\n";
    } else if (dict_build->parsed()) {
      Dictionary dict = build_dictionary(read_records(db_records));
      save_dictionary(dict, db_out);
      std::cerr << "dict build: " << dict.stats().acronyms << " acronyms, "
                << dict.stats().long_forms << " long forms\n";
    } else if (dict_merge->parsed()) {
      Dictionary merged = load_dictionary(dm_inputs.front());
      for (std::size_t i = 1; i < dm_inputs.size(); ++i) {
        merged = merge_dictionaries(merged, load_dictionary(dm_inputs[i]));
      }
      save_dictionary(merged, dm_out);
    } else if (dict_stats->parsed()) {
      Dictionary dict = load_dictionary(ds_path);
      const DictStats &st = dict.stats();
      double avg = st.acronyms > 0 ? static_cast<double>(st.long_forms) / st.acronyms : 0.0;
      write_json_or_stdout("-", {{"acronyms", st.acronyms},
                                 {"long_forms", st.long_forms},
                                 {"long_forms_per_acronym", avg},
                                 {"records", st.records},
                                 {"dropped_degenerate", st.dropped_degenerate}});
    } else if (dict_lookup->parsed()) {
      Dictionary dict = load_dictionary(dl_path);
      auto clusters = dict.lookup(dl_acronym);
      std::size_t n = dl_k > 0 ? std::min(dl_k, clusters.size()) : clusters.size();
      for (std::size_t i = 0; i < n; ++i) {
        std::cout << clusters[i].frequency << "\t" << clusters[i].canonical << "\n";
      }
      if (clusters.empty()) return 1;
    } else if (corpus->parsed()) {
      Dictionary dict = load_dictionary(co_dict);
      auto records = read_records(co_records);
      CorpusStats stats;
      if (co_out == "-") {
        stats = emit_corpus(records, dict, std::cout);
      } else {
        std::ofstream sink(co_out, std::ios::binary);
        if (!sink) throw Error(ErrorCode::kIo, "cannot write " + co_out);
        stats = emit_corpus(records, dict, sink);
      }
      if (!co_stats.empty()) write_json_or_stdout(co_stats, stats);
      std::cerr << "corpus: " << stats.emitted << " emitted, " << stats.errored() << " errored\n";
      if (stats.aborted) {
        std::cerr << "corpus: " << stats.abort_reason << "\n";
        return 1;
      }
    } else if (bench->parsed()) {
      Dictionary dict = load_dictionary(be_dict);
      auto mentions = read_ndjson_file<EdMention>(be_mentions);
      std::ifstream alias_in(be_aliases);
      AliasTable aliases = read_alias_table(alias_in);
      BenchmarkBuild build = build_benchmark(mentions, aliases, dict);
      apply_split(build.samples, split_by_acronym(build.samples, parse_ratios(be_ratios), seed));
      write_ndjson_file(be_out, build.samples);
      if (!be_dict_out.empty()) save_dictionary(dict, be_dict_out);
      json stats = dataset_stats(build.samples);
      stats["build"] = {{"mentions", build.mentions},
                        {"no_acronym", build.no_acronym},
                        {"verification_failed", build.verification_failed},
                        {"degenerate", build.degenerate},
                        {"injected_clusters", build.injected_clusters}};
      if (!be_stats.empty()) write_json_or_stdout(be_stats, stats);
      std::cerr << "bench: " << build.samples.size() << " samples from " << build.mentions
                << " mentions\n";
    } else if (score->parsed()) {
      Dictionary dict = load_dictionary(sc_dict);
      auto samples = read_ndjson_file<AdSample>(sc_bench);
      if (sc_split != "all") {
        auto wanted = parse_split(sc_split);
        if (!wanted) throw Error(ErrorCode::kConfig, "unknown split " + sc_split);
        std::erase_if(samples, [&](const AdSample &s) { return s.split != *wanted; });
      }
      ScoreOptions opts;
      opts.method = sc_method == "remote" ? "" : sc_method;
      if (opts.method.empty()) throw Error(ErrorCode::kConfig, "--method remote needs --scorer");
      if (sc_k > 0) opts.truncate_k = sc_k;
      opts.fallback = sc_fallback;
      opts.remote.timeout = std::chrono::milliseconds(sc_timeout);
      opts.remote.max_in_flight = jobs;
      ScoreSummary summary;
      auto preds = score_benchmark(samples, dict, opts, &summary);
      if (sc_out == "-") {
        write_ndjson(std::cout, preds);
      } else {
        write_ndjson_file(sc_out, preds);
      }
      std::cerr << "score: " << summary.samples << " samples, " << summary.no_candidates
                << " without candidates";
      if (opts.truncate_k && !samples.empty()) {
        std::cerr << ", truncation recall@" << *opts.truncate_k << " = "
                  << truncation_recall(samples, dict, *opts.truncate_k);
      }
      std::cerr << "\n";
      if (summary.fell_back) {
        std::cerr << "score: fell back to popularity: " << summary.fallback_reason << "\n";
      }
    } else if (eval_cmd->parsed()) {
      auto samples = read_ndjson_file<AdSample>(ev_gold);
      auto preds = read_ndjson_file<Prediction>(ev_pred);
      // Evaluate only the samples that were scored.
      std::set<std::string> scored;
      for (const Prediction &p : preds) scored.insert(p.sample_id);
      std::erase_if(samples, [&](const AdSample &s) { return !scored.count(s.id); });
      auto aligned = align_predictions(samples, preds);
      EvalOptions opts;
      opts.chunks = ev_chunks;
      opts.f1_of_averages = ev_f1oa;
      EvalReport report = evaluate(samples, aligned, opts);
      write_json_or_stdout(ev_report, report);
      if (!ev_text.empty()) write_text_file(ev_text, render_text(report));
      if (!ev_csv.empty()) write_text_file(ev_csv, render_chunks_csv(report));
      if (ev_report != "-") std::cerr << render_text(report);
    } else if (pipeline->parsed()) {
      RunConfig config = load_run_config(pl_config);
      if (!pl_out.empty()) config.output_dir = pl_out;
      if (app.get_option("--jobs")->count() > 0) {
        config.jobs = jobs;
        config.scoring.remote.max_in_flight = jobs;
      }
      if (app.get_option("--seed")->count() > 0) config.seed = seed;
      RunManifest manifest = run_pipeline(config);
      for (const StageResult &s : manifest.stages) {
        std::cerr << s.name << ": " << s.status;
        if (!s.error.empty()) std::cerr << " (" << s.error << ")";
        std::cerr << "\n";
      }
      return manifest.ok() ? 0 : 1;
    }
  } catch (const Error &e) {
    std::cerr << "acroforge: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "acroforge: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
