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

#ifndef ACROFORGE_RANK_HPP_
#define ACROFORGE_RANK_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acroforge/benchgen.hpp"
#include "acroforge/dict.hpp"

namespace acroforge {

struct Candidate {
  std::string cluster_id;
  std::string canonical;
  std::uint64_t frequency = 0;
};

struct CandidateSet {
  std::vector<Candidate> candidates;
  std::optional<std::size_t> truncated_at;
};

struct Prediction {
  std::string sample_id;
  // Aligned with the candidate set that produced it.
  std::vector<std::pair<std::string, double>> scores;
  // nullopt when there were no candidates.
  std::optional<std::string> predicted;

  friend bool operator==(const Prediction &, const Prediction &) = default;
};

// Dictionary lookup, then keeps the k most frequent clusters when k is set.
// Throws Error(kNoCandidates) for unknown acronyms.
CandidateSet generate_candidates(std::string_view acronym, const Dictionary &dict,
                                 std::optional<std::size_t> k = std::nullopt);

// Index of the winning candidate: highest score, then higher frequency, then
// lexicographically smaller canonical form.
std::size_t argmax_candidate(const CandidateSet &cset, std::span<const double> scores);

Prediction make_prediction(std::string sample_id, const CandidateSet &cset,
                           std::span<const double> scores);

// Prediction for a sample with no candidates.
Prediction no_prediction(std::string sample_id);

Prediction popularity_score(const CandidateSet &cset, std::string sample_id = {});

struct Bm25Params {
  double k1 = 1.5;
  double b = 0.75;
};

// Okapi BM25 with the candidates as the document collection and the context
// as the query. IDF is ln(1 + (N - n + 0.5) / (n + 0.5)).
std::vector<double> bm25_scores(const CandidateSet &cset, std::string_view context,
                                const Bm25Params &params = {});

Prediction bm25_score(const CandidateSet &cset, std::string_view context,
                      std::string sample_id = {}, const Bm25Params &params = {});

// Fraction of samples whose gold cluster is among the top-k candidates.
double truncation_recall(std::span<const AdSample> samples, const Dictionary &dict,
                         std::size_t k);

}  // namespace acroforge

#endif  // ACROFORGE_RANK_HPP_
