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

#ifndef ACROFORGE_BENCHGEN_HPP_
#define ACROFORGE_BENCHGEN_HPP_

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acroforge/dict.hpp"
#include "acroforge/error.hpp"
#include "acroforge/text.hpp"

namespace acroforge {

// An entity-disambiguation mention: a long form in context with a KB id.
struct EdMention {
  std::string id;
  std::string context;
  Span mention_span;
  std::string kb_id;
  std::string kb_name;
  std::string source_tag;
};

enum class Split { kTrain, kValid, kTest };

std::string_view split_name(Split split);
std::optional<Split> parse_split(std::string_view name);

struct AdSample {
  std::string id;
  std::string context;
  std::string acronym;
  Span acronym_span;
  std::string gold_cluster_id;
  std::size_t candidate_count = 0;
  bool overshadowed = false;
  Split split = Split::kTrain;
  std::string source_tag;

  friend bool operator==(const AdSample &, const AdSample &) = default;
};

// kb_id -> aliases, in file order.
using AliasTable = std::map<std::string, std::vector<std::string>>;

// Tab-separated "kb_id<TAB>alias" lines; blank lines and '#' comments skipped.
AliasTable read_alias_table(std::istream &in);

// Picks the alias that is a valid short form, shorter than the mention text
// and matched by it.
// Among several, prefers the one whose (alias, mention) cluster is most
// frequent in `dict`, then the shortest, then the lexicographically first.
std::optional<std::string> kb_acronym_for(std::string_view kb_id, std::string_view mention_text,
                                          const AliasTable &aliases, const Dictionary &dict);

// Verifies "mention (acronym)" with the extractor, then swaps the mention
// for the acronym. Unseen pairs enter `dict` with frequency 1. Throws
// Error(kVerificationFailed) or Error(kDegenerateForm).
AdSample replace_and_verify(const EdMention &mention, std::string_view acronym,
                            Dictionary &dict);

// Recomputes candidate_count and overshadowed against the final dictionary.
void freeze(std::span<AdSample> samples, const Dictionary &dict);

struct BenchmarkBuild {
  std::vector<AdSample> samples;
  std::uint64_t mentions = 0;
  std::uint64_t no_acronym = 0;
  std::uint64_t verification_failed = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t injected_clusters = 0;
};

// kb_acronym_for + replace_and_verify over all mentions, then freeze.
BenchmarkBuild build_benchmark(std::span<const EdMention> mentions, const AliasTable &aliases,
                               Dictionary &dict);

// Recasts an existing AD sample (context holding the acronym) as an ED
// mention whose KB id is the long form itself, plus its alias row.
std::pair<EdMention, std::pair<std::string, std::string>> ad_sample_as_mention(
    std::string id, std::string_view context, Span acronym_span, std::string_view long_form);

using SplitRatios = std::array<double, 3>;

// Greedy largest-first assignment of whole acronyms to splits, each to the
// split whose mass/ratio is currently lowest. Equal masses are ordered by a
// seeded hash. Throws Error(kSplitInfeasible) with fewer than 3 acronyms.
std::map<std::string, Split> split_by_acronym(std::span<const AdSample> samples,
                                              const SplitRatios &ratios, std::uint64_t seed);

void apply_split(std::span<AdSample> samples, const std::map<std::string, Split> &assignment);

struct SplitStats {
  std::uint64_t samples = 0;
  std::uint64_t unique_acronyms = 0;
  // Mean candidate_count over distinct acronyms (long forms per acronym).
  double candidates_per_acronym = 0.0;
  // Mean candidate_count over samples.
  double candidates_per_sample = 0.0;
  std::uint64_t overshadowed = 0;
  double overshadowed_ratio = 0.0;
};

struct DatasetStats {
  SplitStats overall;
  std::map<Split, SplitStats> per_split;
};

DatasetStats dataset_stats(std::span<const AdSample> samples);

}  // namespace acroforge

#endif  // ACROFORGE_BENCHGEN_HPP_
