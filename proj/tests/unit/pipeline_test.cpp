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

#include <gtest/gtest.h>

#include "acroforge/error.hpp"
#include "acroforge/hash.hpp"
#include "acroforge/serialize.hpp"
#include "support/fixtures.hpp"

namespace acroforge {
namespace {

namespace fs = std::filesystem;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("acroforge-pipeline-" +
             std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  RunConfig config(const std::string &out) {
    RunConfig c = load_run_config(fixtures::data_path("pipeline/config.json"));
    c.output_dir = root_ / out;
    return c;
  }

  fs::path root_;
};

std::vector<std::string> statuses(const RunManifest &m) {
  std::vector<std::string> out;
  for (const auto &s : m.stages) out.push_back(s.status);
  return out;
}

TEST_F(PipelineTest, FullRunIsGreen) {
  RunConfig c = config("a");
  RunManifest m = run_pipeline(c);
  EXPECT_TRUE(m.ok());
  ASSERT_EQ(m.stages.size(), 6u);
  EXPECT_EQ(statuses(m), std::vector<std::string>(6, "ok"));
  EXPECT_EQ(m.seed, 13u);
  for (const auto &stage : m.stages) {
    EXPECT_FALSE(stage.outputs.empty()) << stage.name;
    for (const auto &[name, digest] : stage.outputs) {
      EXPECT_EQ(sha256_hex(read_text_file(c.output_dir / name)), digest) << name;
    }
  }
  EXPECT_TRUE(fs::exists(c.output_dir / "manifest.json"));
  auto bench = read_ndjson_file<AdSample>(c.output_dir / "benchmark.ndjson");
  EXPECT_EQ(bench.size(), 37u);
  Dictionary bd = load_dictionary(c.output_dir / "benchmark_dictionary.json");
  EXPECT_NE(bd.find_entry("HDL"), nullptr);
  auto preds = read_ndjson_file<Prediction>(c.output_dir / "predictions.ndjson");
  EXPECT_FALSE(preds.empty());
}

TEST_F(PipelineTest, RerunGivesIdenticalDigests) {
  RunConfig c1 = config("a");
  RunConfig c2 = config("b");
  c2.jobs = 4;
  RunManifest m1 = run_pipeline(c1);
  RunManifest m2 = run_pipeline(c2);
  RunManifest m3 = run_pipeline(c1);
  EXPECT_EQ(m1.config_digest, m2.config_digest);
  ASSERT_EQ(m1.stages.size(), m2.stages.size());
  for (std::size_t i = 0; i < m1.stages.size(); ++i) {
    EXPECT_EQ(m1.stages[i].outputs, m2.stages[i].outputs) << m1.stages[i].name;
    EXPECT_EQ(m1.stages[i].outputs, m3.stages[i].outputs) << m1.stages[i].name;
    EXPECT_EQ(m1.stages[i].counts, m2.stages[i].counts);
  }

  RunConfig c4 = config("c");
  c4.seed = 14;
  EXPECT_NE(run_pipeline(c4).config_digest, m1.config_digest);
}

TEST_F(PipelineTest, MissingInputFailsBeforeAnyStage) {
  RunConfig c = config("a");
  c.documents[0].path = root_ / "nope.ndjson";
  try {
    run_pipeline(c);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
  EXPECT_FALSE(fs::exists(c.output_dir));
}

TEST_F(PipelineTest, ConfigValidation) {
  RunConfig c = config("a");
  c.stages = {"corpus"};
  EXPECT_THROW(validate_run_config(c), Error);
  c = config("a");
  c.ratios = {6, 0, 2};
  EXPECT_THROW(validate_run_config(c), Error);
  c = config("a");
  c.scoring.truncate_k = 0;
  EXPECT_THROW(validate_run_config(c), Error);
  c = config("a");
  c.scoring.method = "magic";
  EXPECT_THROW(validate_run_config(c), Error);
  c = config("a");
  c.eval_split = "dev";
  EXPECT_THROW(validate_run_config(c), Error);
  EXPECT_THROW(parse_run_config(nlohmann::json::object(), root_), Error);
  EXPECT_THROW(parse_run_config(nlohmann::json::parse(R"({"documents":[{"path":"x","format":"pdf"}]})"), root_),
               Error);
}

TEST_F(PipelineTest, PartialStages) {
  RunConfig c = config("a");
  c.stages = {"extract", "dict"};
  RunManifest m = run_pipeline(c);
  EXPECT_TRUE(m.ok());
  ASSERT_EQ(m.stages.size(), 2u);
  EXPECT_TRUE(fs::exists(c.output_dir / "dictionary.json"));
  EXPECT_FALSE(fs::exists(c.output_dir / "benchmark.ndjson"));
}

TEST_F(PipelineTest, EchoScorerEndToEnd) {
  RunConfig c = config("a");
  c.scoring.method = "stdio:" + fixtures::echo_scorer_path();
  RunManifest m = run_pipeline(c);
  EXPECT_TRUE(m.ok());
  auto bench = read_ndjson_file<AdSample>(c.output_dir / "benchmark.ndjson");
  Dictionary bd = load_dictionary(c.output_dir / "benchmark_dictionary.json");
  auto preds = read_ndjson_file<Prediction>(c.output_dir / "predictions.ndjson");
  ASSERT_EQ(preds.size(), bench.size());
  for (std::size_t i = 0; i < preds.size(); ++i) {
    EXPECT_EQ(preds[i].sample_id, bench[i].id);
    EXPECT_EQ(preds[i].predicted, bd.lookup(bench[i].acronym).back().id);
  }
}

TEST_F(PipelineTest, BrokenScorerFailsAndSkipsEval) {
  RunConfig c = config("a");
  c.scoring.method = "stdio:" + fixtures::echo_scorer_path() + " --mode garbage";
  RunManifest m = run_pipeline(c);
  EXPECT_FALSE(m.ok());
  EXPECT_EQ(statuses(m), (std::vector<std::string>{"ok", "ok", "ok", "ok", "failed", "skipped"}));
  EXPECT_NE(m.stages[4].error.find("ScorerUnavailable"), std::string::npos) << m.stages[4].error;

  RunConfig fb = config("b");
  fb.scoring.method = "stdio:" + fixtures::echo_scorer_path() + " --mode short";
  fb.scoring.fallback = "popularity";
  RunManifest ok = run_pipeline(fb);
  EXPECT_TRUE(ok.ok());
}

TEST_F(PipelineTest, ScoreBenchmarkAndAlign) {
  fixtures::StatsFixture f = fixtures::stats_fixture();
  ScoreOptions opts;
  opts.method = "bm25";
  ScoreSummary summary;
  std::vector<AdSample> samples = f.samples;
  samples[0].acronym = "ZZQ";
  std::vector<Prediction> preds = score_benchmark(samples, f.dict, opts, &summary);
  ASSERT_EQ(preds.size(), samples.size());
  EXPECT_EQ(summary.no_candidates, 1u);
  EXPECT_FALSE(preds[0].predicted.has_value());

  std::vector<Prediction> shuffled(preds.rbegin(), preds.rend());
  shuffled.pop_back();
  auto aligned = align_predictions(samples, shuffled);
  ASSERT_EQ(aligned.size(), samples.size());
  EXPECT_FALSE(aligned[0].has_value());
  EXPECT_EQ(aligned[5], preds[5].predicted);
  shuffled.push_back(shuffled.front());
  EXPECT_THROW(align_predictions(samples, shuffled), Error);
  Prediction stranger;
  stranger.sample_id = "nobody";
  std::vector<Prediction> unknown{stranger};
  EXPECT_THROW(align_predictions(samples, unknown), Error);
}

}  // namespace
}  // namespace acroforge
