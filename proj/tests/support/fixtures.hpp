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


#ifndef ACROFORGE_TESTS_SUPPORT_FIXTURES_HPP_
#define ACROFORGE_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "acroforge/benchgen.hpp"
#include "acroforge/dict.hpp"
#include "acroforge/extract.hpp"

namespace fixtures {

using Pair = std::pair<std::string, std::string>;

std::filesystem::path data_path(const std::string &name);
std::string echo_scorer_path();

struct LabeledSentence {
  std::string text;
  std::vector<Pair> pairs;
};

// tests/data/extraction_fixture.tsv
std::vector<LabeledSentence> labeled_sentences();

// The six reference sentences lead the labeled fixture.
const std::vector<Pair> &reference_pairs();

acroforge::Sentence as_sentence(const std::string &text, std::size_t index = 0);

// Extraction records for every labeled sentence.
std::vector<acroforge::ExtractionRecord> fixture_records();

// Random (acronym, long form) records drawn from a small vocabulary with
// plural, hyphen and case variants so that clusters collide.
std::vector<Pair> random_pairs(std::mt19937_64 &rng, std::size_t n);

// A random (window, short form) pair over a tiny alphabet so that partial
// matches are common.
std::pair<std::string, std::string> fuzz_window(std::mt19937_64 &rng);

acroforge::Dictionary dictionary_from_pairs(const std::vector<Pair> &pairs);

// Four acronyms, twenty samples, with tallies worked out by hand:
//   AI  artificial intelligence 5, adequate intake 2, aromatase inhibitor 1
//   CBF cerebral blood flow 4
//   PCR polymerase chain reaction 6, patient care record 3
//   ER  emergency room 3, estrogen receptor 3
struct StatsFixture {
  acroforge::Dictionary dict;
  std::vector<acroforge::AdSample> samples;
};
StatsFixture stats_fixture();

// n samples per acronym, named by the map keys.
std::vector<acroforge::AdSample> samples_with_masses(const std::map<std::string, int> &masses);

// Random dictionary plus samples whose gold clusters are drawn from it.
struct RandomBench {
  acroforge::Dictionary dict;
  std::vector<acroforge::AdSample> samples;
  std::size_t max_entry = 0;
};
RandomBench random_bench(std::mt19937_64 &rng);

}  // namespace fixtures

#endif  // ACROFORGE_TESTS_SUPPORT_FIXTURES_HPP_
