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


#include "acroforge/rank.hpp"

#include <gtest/gtest.h>

#include <random>

#include "acroforge/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace acroforge {
namespace {

Dictionary ai_dict() {
  Dictionary d;
  d.add("AI", "Artificial Intelligence", 100);
  d.add("AI", "Adequate Intake", 10);
  d.add("AI", "Aromatase Inhibitor", 5);
  return d;
}

std::vector<std::string> canonicals(const CandidateSet &c) {
  std::vector<std::string> out;
  for (const auto &x : c.candidates) out.push_back(x.canonical);
  return out;
}

std::vector<oracle::Cluster> oracle_cands(const CandidateSet &c) {
  std::vector<oracle::Cluster> out;
  for (const auto &x : c.candidates) out.push_back({x.cluster_id, x.canonical, "", x.frequency});
  return out;
}

TEST(CandidatesTest, TopK) {
  Dictionary d = ai_dict();
  EXPECT_EQ(canonicals(generate_candidates("AI", d, 2)),
            (std::vector<std::string>{"Artificial Intelligence", "Adequate Intake"}));
  EXPECT_EQ(canonicals(generate_candidates("AI", d)),
            (std::vector<std::string>{"Artificial Intelligence", "Adequate Intake",
                                      "Aromatase Inhibitor"}));
  EXPECT_EQ(generate_candidates("AI", d, 2).truncated_at, 2u);
  EXPECT_EQ(generate_candidates("AI", d, 10).candidates.size(), 3u);
  EXPECT_EQ(generate_candidates("ai", d).candidates.size(), 3u);
}

TEST(CandidatesTest, Errors) {
  Dictionary d = ai_dict();
  try {
    generate_candidates("ZZZZQ", d);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoCandidates);
  }
  EXPECT_THROW(generate_candidates("AI", d, 0), Error);
}

TEST(PopularityTest, Examples) {
  Dictionary d = ai_dict();
  Prediction p = popularity_score(generate_candidates("AI", d), "s1");
  EXPECT_EQ(p.sample_id, "s1");
  EXPECT_EQ(p.predicted, d.find_entry("AI")->clusters[0].id);
  EXPECT_EQ(p.scores.size(), 3u);

  CandidateSet equal;
  equal.candidates = {{"X:b", "beta", 3}, {"X:a", "alpha", 3}, {"X:c", "gamma", 3}};
  EXPECT_EQ(popularity_score(equal).predicted, "X:a");

  CandidateSet single;
  single.candidates = {{"X:only", "only one", 1}};
  EXPECT_EQ(popularity_score(single).predicted, "X:only");
}

TEST(ArgmaxTest, TieRuleAndScaling) {
  CandidateSet c;
  c.candidates = {{"X:1", "zeta", 5}, {"X:2", "alpha", 5}, {"X:3", "beta", 9}};
  std::vector<double> tied{1.0, 1.0, 1.0};
  EXPECT_EQ(argmax_candidate(c, tied), 2u);
  std::vector<double> freq_tie{1.0, 1.0, 0.5};
  EXPECT_EQ(argmax_candidate(c, freq_tie), 1u);
  std::vector<double> wrong{1.0};
  EXPECT_THROW(argmax_candidate(c, wrong), Error);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_int_distribution<int> f(1, 4);
  std::uniform_real_distribution<double> scale(0.001, 1000.0);
  for (int trial = 0; trial < 2000; ++trial) {
    CandidateSet cs;
    std::vector<double> s;
    int n = 1 + trial % 6;
    for (int i = 0; i < n; ++i) {
      cs.candidates.push_back({"X:" + std::to_string(i), std::string(1, static_cast<char>('a' + f(rng))),
                               static_cast<std::uint64_t>(f(rng))});
      s.push_back(std::round(u(rng)));
    }
    std::size_t base = argmax_candidate(cs, s);
    EXPECT_EQ(static_cast<long>(base), oracle::argmax(s, oracle_cands(cs)));
    double k = scale(rng);
    std::vector<double> scaled = s;
    for (double &x : scaled) x *= k;
    EXPECT_EQ(make_prediction("", cs, scaled).predicted, make_prediction("", cs, s).predicted);
  }
}

TEST(Bm25Test, OverlapDecides) {
  CandidateSet c;
  c.candidates = {{"AI:a", "artificial intelligence", 1},
                  {"AI:b", "adequate intake", 5},
                  {"AI:c", "aromatase inhibitor", 2}};
  Prediction p = bm25_score(c, "the daily intake of potassium", "s");
  EXPECT_EQ(p.predicted, "AI:b");
  std::vector<double> zero = bm25_scores(c, "no shared words here");
  EXPECT_EQ(zero, (std::vector<double>{0.0, 0.0, 0.0}));
  EXPECT_EQ(bm25_score(c, "no shared words here").predicted, "AI:b");
  std::vector<double> s = bm25_scores(c, "aromatase inhibitor inhibitor therapy");
  EXPECT_GT(s[2], 0.0);
  EXPECT_EQ(s[0], 0.0);
}

TEST(Bm25Test, MatchesOracleOnThreeCandidates) {
  CandidateSet c;
  c.candidates = {{"ER:a", "emergency room", 3},
                  {"ER:b", "estrogen receptor positive", 3},
                  {"ER:c", "endoplasmic reticulum stress response", 1}};
  std::string ctx = "Estrogen receptor status and ER stress in the emergency setting; receptor receptor.";
  std::vector<double> got = bm25_scores(c, ctx);
  std::vector<double> want = oracle::bm25({"emergency room", "estrogen receptor positive",
                                           "endoplasmic reticulum stress response"},
                                          ctx);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-9);
}

TEST(Bm25Test, MatchesOracleOnRandomSets) {
  static const std::vector<std::string> kWords = {"neural", "network", "cable", "news", "care",
                                                  "record", "chain", "reaction", "room", "x1",
                                                  "Network", "NEWS"};
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> w(0, kWords.size() - 1);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> n(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    CandidateSet c;
    std::vector<std::string> docs;
    int nd = n(rng);
    for (int d = 0; d < nd; ++d) {
      std::string doc;
      int l = len(rng);
      for (int i = 0; i < l; ++i) doc += (i ? " " : "") + kWords[w(rng)];
      docs.push_back(doc);
      c.candidates.push_back({"Q:" + std::to_string(d), doc, 1});
    }
    std::string ctx;
    for (int i = 0, l = len(rng) * 3; i < l; ++i) ctx += kWords[w(rng)] + ", ";
    std::vector<double> got = bm25_scores(c, ctx);
    std::vector<double> want = oracle::bm25(docs, ctx);
    for (std::size_t i = 0; i < got.size(); ++i) ASSERT_NEAR(got[i], want[i], 1e-9);
  }
}

TEST(TruncationTest, MonotoneAndBounds) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    fixtures::RandomBench b = fixtures::random_bench(rng);
    double prev = 0.0;
    for (std::size_t k = 1; k <= b.max_entry; ++k) {
      double r = truncation_recall(b.samples, b.dict, k);
      EXPECT_GE(r, prev);
      prev = r;
    }
    EXPECT_DOUBLE_EQ(prev, 1.0);
  }
  fixtures::StatsFixture f = fixtures::stats_fixture();
  std::vector<AdSample> shadowed;
  for (const auto &s : f.samples) {
    if (s.overshadowed) shadowed.push_back(s);
  }
  EXPECT_DOUBLE_EQ(truncation_recall(shadowed, f.dict, 1), 0.0);
  EXPECT_THROW(truncation_recall(shadowed, f.dict, 0), Error);
}

}  // namespace
}  // namespace acroforge
