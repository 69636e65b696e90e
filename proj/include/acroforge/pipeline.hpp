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

#ifndef ACROFORGE_PIPELINE_HPP_
#define ACROFORGE_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acroforge/benchgen.hpp"
#include "acroforge/dict.hpp"
#include "acroforge/rank.hpp"
#include "acroforge/scorer.hpp"
#include "json.hpp"

namespace acroforge {

struct ScoreOptions {
  // "popularity", "bm25", "tcp:host:port" or "stdio:command".
  std::string method = "popularity";
  std::optional<std::size_t> truncate_k;
  // "abort" or "popularity".
  std::string fallback = "abort";
  RemoteScorerOptions remote;
};

struct ScoreSummary {
  std::size_t samples = 0;
  std::size_t no_candidates = 0;
  bool fell_back = false;
  std::string fallback_reason;
};

// Scores every sample; the output is aligned with `samples`. Samples without
// candidates get an empty prediction.
std::vector<Prediction> score_benchmark(std::span<const AdSample> samples, const Dictionary &dict,
                                        const ScoreOptions &options,
                                        ScoreSummary *summary = nullptr);

// Aligns predictions to samples by id. Missing ids count as no prediction;
// unknown or duplicate ids raise Error(kInputMismatch).
std::vector<std::optional<std::string>> align_predictions(std::span<const AdSample> samples,
                                                          std::span<const Prediction> preds);

struct DocumentInput {
  std::filesystem::path path;
  bool ndjson = true;
  std::string source_tag;
};

struct RunConfig {
  std::vector<DocumentInput> documents;
  std::optional<std::filesystem::path> mentions;
  std::optional<std::filesystem::path> aliases;
  NormalizationConfig normalization;
  std::uint64_t seed = 13;
  SplitRatios ratios{6.0, 2.0, 2.0};
  ScoreOptions scoring;
  // "test", "valid", "train" or "all".
  std::string eval_split = "test";
  std::size_t chunks = 10;
  unsigned jobs = 1;
  std::filesystem::path output_dir = "acroforge-out";
  std::vector<std::string> stages{"extract", "dict", "corpus", "bench", "score", "eval"};
};

// Relative paths resolve against `base_dir`. Throws Error(kConfig).
RunConfig parse_run_config(const nlohmann::json &j, const std::filesystem::path &base_dir);
RunConfig load_run_config(const std::filesystem::path &path);

// Checks ratios, k, stage names and that every input exists.
void validate_run_config(const RunConfig &config);

struct StageResult {
  std::string name;
  std::string status;  // "ok", "failed" or "skipped"
  std::map<std::string, std::string> outputs;  // file name -> sha256
  nlohmann::json counts = nlohmann::json::object();
  double seconds = 0.0;
  std::string error;
};

struct RunManifest {
  std::string config_digest;
  std::uint64_t seed = 0;
  std::vector<StageResult> stages;

  bool ok() const;
  nlohmann::json to_json() const;
};

// Runs the requested stages in order and writes manifest.json into the
// output directory. A failing stage marks every later stage skipped.
RunManifest run_pipeline(const RunConfig &config);

}  // namespace acroforge

#endif  // ACROFORGE_PIPELINE_HPP_
