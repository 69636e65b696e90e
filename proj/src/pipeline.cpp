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

#include "acroforge/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>

#include "acroforge/corpusgen.hpp"
#include "acroforge/error.hpp"
#include "acroforge/eval.hpp"
#include "acroforge/extract.hpp"
#include "acroforge/hash.hpp"
#include "acroforge/serialize.hpp"

namespace acroforge {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<Prediction> score_benchmark(std::span<const AdSample> samples, const Dictionary &dict,
                                        const ScoreOptions &options, ScoreSummary *summary) {
  ScoreSummary local;
  ScoreSummary &sum = summary != nullptr ? *summary : local;
  sum = {};
  sum.samples = samples.size();

  std::vector<ScoringItem> items;
  items.reserve(samples.size());
  for (const AdSample &s : samples) {
    ScoringItem item;
    item.sample = &s;
    try {
      item.candidates = generate_candidates(s.acronym, dict, options.truncate_k);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kNoCandidates) throw;
      ++sum.no_candidates;
    }
    items.push_back(std::move(item));
  }

  auto local_scores = [&](bool bm25) {
    std::vector<Prediction> out;
    out.reserve(items.size());
    for (const ScoringItem &item : items) {
      if (item.candidates.candidates.empty()) {
        out.push_back(no_prediction(item.sample->id));
      } else if (bm25) {
        out.push_back(bm25_score(item.candidates, item.sample->context, item.sample->id));
      } else {
        out.push_back(popularity_score(item.candidates, item.sample->id));
      }
    }
    return out;
  };

  if (options.method == "popularity") return local_scores(false);
  if (options.method == "bm25") return local_scores(true);

  try {
    RemoteScorer scorer(open_scorer(options.method), options.remote);
    return scorer.score_all(items);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kScorerUnavailable || options.fallback != "popularity") throw;
    sum.fell_back = true;
    sum.fallback_reason = e.what();
    return local_scores(false);
  }
}

std::vector<std::optional<std::string>> align_predictions(std::span<const AdSample> samples,
                                                          std::span<const Prediction> preds) {
  std::map<std::string, const Prediction *> by_id;
  for (const Prediction &p : preds) {
    if (!by_id.emplace(p.sample_id, &p).second) {
      throw Error(ErrorCode::kInputMismatch, "duplicate prediction id " + p.sample_id);
    }
  }
  std::vector<std::optional<std::string>> out;
  out.reserve(samples.size());
  std::size_t used = 0;
  for (const AdSample &s : samples) {
    auto it = by_id.find(s.id);
    if (it == by_id.end()) {
      out.emplace_back();
      continue;
    }
    ++used;
    out.push_back(it->second->predicted);
  }
  if (used != by_id.size()) {
    throw Error(ErrorCode::kInputMismatch, "predictions reference unknown sample ids");
  }
  return out;
}

namespace {

const std::vector<std::string> kStageOrder{"extract", "dict", "corpus", "bench", "score", "eval"};

const std::map<std::string, std::vector<std::string>> kPrerequisites{
    {"extract", {}},          {"dict", {"extract"}}, {"corpus", {"extract", "dict"}},
    {"bench", {"dict"}},      {"score", {"bench"}},  {"eval", {"score"}}};

fs::path resolve(const fs::path &base, const std::string &p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::string file_digest(const fs::path &path) { return sha256_hex(read_text_file(path)); }

}  // namespace

RunConfig parse_run_config(const json &j, const fs::path &base_dir) {
  try {
    RunConfig c;
    for (const json &d : j.at("documents")) {
      DocumentInput in;
      in.path = resolve(base_dir, d.at("path").get<std::string>());
      std::string format = d.value("format", std::string("ndjson"));
      if (format != "ndjson" && format != "text") {
        throw Error(ErrorCode::kConfig, "document format must be ndjson or text");
      }
      in.ndjson = format == "ndjson";
      in.source_tag = d.value("source_tag", std::string());
      c.documents.push_back(std::move(in));
    }
    if (j.contains("mentions")) c.mentions = resolve(base_dir, j.at("mentions").get<std::string>());
    if (j.contains("aliases")) c.aliases = resolve(base_dir, j.at("aliases").get<std::string>());
    if (j.contains("normalization")) c.normalization = j.at("normalization").get<NormalizationConfig>();
    if (j.contains("split")) {
      const json &s = j.at("split");
      c.seed = s.value("seed", c.seed);
      if (s.contains("ratios")) {
        auto r = s.at("ratios").get<std::vector<double>>();
        if (r.size() != 3) throw Error(ErrorCode::kConfig, "split.ratios needs three values");
        c.ratios = {r[0], r[1], r[2]};
      }
    }
    if (j.contains("truncate_k") && !j.at("truncate_k").is_null()) {
      c.scoring.truncate_k = j.at("truncate_k").get<std::size_t>();
    }
    c.scoring.method = j.value("scorer", c.scoring.method);
    c.scoring.fallback = j.value("scorer_fallback", c.scoring.fallback);
    c.scoring.remote.timeout = std::chrono::milliseconds(
        j.value("scorer_timeout_ms", static_cast<std::int64_t>(c.scoring.remote.timeout.count())));
    c.eval_split = j.value("eval_split", c.eval_split);
    c.chunks = j.value("chunks", c.chunks);
    c.jobs = j.value("jobs", c.jobs);
    c.scoring.remote.max_in_flight = std::max<std::size_t>(1, c.jobs);
    c.output_dir = resolve(base_dir, j.value("output_dir", c.output_dir.string()));
    if (j.contains("stages")) c.stages = j.at("stages").get<std::vector<std::string>>();
    return c;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kConfig, std::string("bad run config: ") + e.what());
  }
}

RunConfig load_run_config(const fs::path &path) {
  std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
  return parse_run_config(j, path.parent_path());
}

void validate_run_config(const RunConfig &config) {
  for (double r : config.ratios) {
    if (!(r > 0.0)) throw Error(ErrorCode::kConfig, "split ratios must be positive");
  }
  if (config.scoring.truncate_k && *config.scoring.truncate_k == 0) {
    throw Error(ErrorCode::kConfig, "truncate_k must be >= 1");
  }
  if (config.scoring.fallback != "abort" && config.scoring.fallback != "popularity") {
    throw Error(ErrorCode::kConfig, "scorer_fallback must be abort or popularity");
  }
  const std::string &m = config.scoring.method;
  if (m != "popularity" && m != "bm25" && !m.starts_with("tcp:") && !m.starts_with("stdio:")) {
    throw Error(ErrorCode::kConfig, "unknown scorer '" + m + "'");
  }
  if (config.eval_split != "all" && !parse_split(config.eval_split)) {
    throw Error(ErrorCode::kConfig, "eval_split must be train, valid, test or all");
  }
  std::set<std::string> requested(config.stages.begin(), config.stages.end());
  for (const std::string &s : config.stages) {
    auto it = kPrerequisites.find(s);
    if (it == kPrerequisites.end()) throw Error(ErrorCode::kConfig, "unknown stage '" + s + "'");
    for (const std::string &pre : it->second) {
      if (!requested.count(pre)) {
        throw Error(ErrorCode::kConfig, "stage '" + s + "' needs stage '" + pre + "'");
      }
    }
  }
  if (requested.count("extract") && config.documents.empty()) {
    throw Error(ErrorCode::kConfig, "no document inputs");
  }
  for (const DocumentInput &d : config.documents) {
    if (!fs::is_regular_file(d.path)) {
      throw Error(ErrorCode::kConfig, "missing input " + d.path.string());
    }
  }
  if (requested.count("bench")) {
    if (!config.mentions || !config.aliases) {
      throw Error(ErrorCode::kConfig, "stage 'bench' needs mentions and aliases");
    }
    for (const fs::path &p : {*config.mentions, *config.aliases}) {
      if (!fs::is_regular_file(p)) throw Error(ErrorCode::kConfig, "missing input " + p.string());
    }
  }
}

bool RunManifest::ok() const {
  return std::all_of(stages.begin(), stages.end(),
                     [](const StageResult &s) { return s.status == "ok"; });
}

json RunManifest::to_json() const {
  json stages_json = json::array();
  for (const StageResult &s : stages) {
    json st = {{"name", s.name},
               {"status", s.status},
               {"outputs", s.outputs},
               {"counts", s.counts},
               {"seconds", s.seconds}};
    if (!s.error.empty()) st["error"] = s.error;
    stages_json.push_back(std::move(st));
  }
  return {{"config_digest", config_digest}, {"seed", seed}, {"stages", stages_json}};
}

RunManifest run_pipeline(const RunConfig &config) {
  validate_run_config(config);
  fs::create_directories(config.output_dir);
  const fs::path &out = config.output_dir;

  RunManifest manifest;
  manifest.seed = config.seed;
  {
    json digest_input = {{"normalization", config.normalization},
                         {"seed", config.seed},
                         {"ratios", config.ratios},
                         {"scorer", config.scoring.method},
                         {"truncate_k", config.scoring.truncate_k
                                            ? json(*config.scoring.truncate_k)
                                            : json(nullptr)},
                         {"eval_split", config.eval_split},
                         {"chunks", config.chunks},
                         {"stages", config.stages}};
    json inputs = json::array();
    for (const DocumentInput &d : config.documents) {
      inputs.push_back({d.source_tag, d.ndjson, file_digest(d.path)});
    }
    if (config.mentions) inputs.push_back(file_digest(*config.mentions));
    if (config.aliases) inputs.push_back(file_digest(*config.aliases));
    digest_input["inputs"] = inputs;
    manifest.config_digest = sha256_hex(digest_input.dump());
  }

  std::vector<ExtractionRecord> records;
  Dictionary dict(config.normalization);
  Dictionary bench_dict(config.normalization);
  std::vector<AdSample> eval_samples;
  std::vector<Prediction> predictions;

  auto emit = [&](StageResult &r, const std::string &name) {
    r.outputs[name] = file_digest(out / name);
  };

  bool failed = false;
  for (const std::string &stage : kStageOrder) {
    if (std::find(config.stages.begin(), config.stages.end(), stage) == config.stages.end()) {
      continue;
    }
    StageResult result;
    result.name = stage;
    if (failed) {
      result.status = "skipped";
      manifest.stages.push_back(std::move(result));
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    try {
      if (stage == "extract") {
        std::vector<Document> docs;
        for (const DocumentInput &in : config.documents) {
          std::vector<Document> part = read_documents(in.path, in.ndjson, in.source_tag);
          std::move(part.begin(), part.end(), std::back_inserter(docs));
        }
        ExtractionDiagnostics diag;
        records = extract_documents(docs, config.jobs, &diag);
        write_ndjson_file(out / "records.ndjson", records);
        emit(result, "records.ndjson");
        result.counts = diag;
      } else if (stage == "dict") {
        dict = build_dictionary(records, config.normalization);
        save_dictionary(dict, out / "dictionary.json");
        emit(result, "dictionary.json");
        result.counts = {{"acronyms", dict.stats().acronyms},
                         {"long_forms", dict.stats().long_forms},
                         {"records", dict.stats().records},
                         {"dropped_degenerate", dict.stats().dropped_degenerate}};
      } else if (stage == "corpus") {
        CorpusStats stats;
        {
          std::ofstream sink(out / "pretrain.ndjson", std::ios::binary);
          if (!sink) throw Error(ErrorCode::kIo, "cannot write pretrain.ndjson");
          stats = emit_corpus(records, dict, sink);
        }
        write_text_file(out / "corpus_stats.json", json(stats).dump(1) + "\n");
        emit(result, "pretrain.ndjson");
        emit(result, "corpus_stats.json");
        result.counts = stats;
        if (stats.aborted) throw Error(ErrorCode::kSinkFailure, stats.abort_reason);
      } else if (stage == "bench") {
        std::vector<EdMention> mentions = read_ndjson_file<EdMention>(*config.mentions);
        std::ifstream alias_in(*config.aliases);
        AliasTable aliases = read_alias_table(alias_in);
        bench_dict = dict;
        BenchmarkBuild build = build_benchmark(mentions, aliases, bench_dict);
        auto assignment = split_by_acronym(build.samples, config.ratios, config.seed);
        apply_split(build.samples, assignment);
        write_ndjson_file(out / "benchmark.ndjson", build.samples);
        save_dictionary(bench_dict, out / "benchmark_dictionary.json");
        json stats = dataset_stats(build.samples);
        stats["build"] = {{"mentions", build.mentions},
                          {"no_acronym", build.no_acronym},
                          {"verification_failed", build.verification_failed},
                          {"degenerate", build.degenerate},
                          {"injected_clusters", build.injected_clusters}};
        write_text_file(out / "benchmark_stats.json", stats.dump(1) + "\n");
        emit(result, "benchmark.ndjson");
        emit(result, "benchmark_dictionary.json");
        emit(result, "benchmark_stats.json");
        result.counts = stats["build"];
        eval_samples.clear();
        for (const AdSample &s : build.samples) {
          if (config.eval_split == "all" || split_name(s.split) == config.eval_split) {
            eval_samples.push_back(s);
          }
        }
        result.counts["eval_samples"] = eval_samples.size();
      } else if (stage == "score") {
        ScoreSummary summary;
        predictions = score_benchmark(eval_samples, bench_dict, config.scoring, &summary);
        write_ndjson_file(out / "predictions.ndjson", predictions);
        emit(result, "predictions.ndjson");
        result.counts = {{"samples", summary.samples},
                         {"no_candidates", summary.no_candidates},
                         {"fell_back", summary.fell_back}};
        if (config.scoring.truncate_k && !eval_samples.empty()) {
          result.counts["truncation_recall"] =
              truncation_recall(eval_samples, bench_dict, *config.scoring.truncate_k);
        }
      } else if (stage == "eval") {
        if (eval_samples.empty()) throw Error(ErrorCode::kInputMismatch, "no samples to evaluate");
        auto aligned = align_predictions(eval_samples, predictions);
        EvalOptions opts;
        opts.chunks = config.chunks;
        EvalReport report = evaluate(eval_samples, aligned, opts);
        write_text_file(out / "report.json", json(report).dump(1) + "\n");
        write_text_file(out / "report.txt", render_text(report));
        write_text_file(out / "chunks.csv", render_chunks_csv(report));
        emit(result, "report.json");
        emit(result, "report.txt");
        emit(result, "chunks.csv");
        result.counts = {{"accuracy", report.accuracy}, {"macro_f1", report.macro_f1}};
      }
      result.status = "ok";
    } catch (const std::exception &e) {
      result.status = "failed";
      result.error = e.what();
      failed = true;
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    manifest.stages.push_back(std::move(result));
  }

  write_text_file(out / "manifest.json", manifest.to_json().dump(1) + "\n");
  return manifest;
}

}  // namespace acroforge
