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

#include <cmath>
#include <map>

#include "acroforge/error.hpp"
#include "acroforge/text.hpp"

namespace acroforge {

CandidateSet generate_candidates(std::string_view acronym, const Dictionary &dict,
                                 std::optional<std::size_t> k) {
  if (k.has_value() && *k == 0) throw Error(ErrorCode::kConfig, "truncation k must be >= 1");
  std::span<const LongFormCluster> clusters = dict.lookup(acronym);
  if (clusters.empty()) {
    throw Error(ErrorCode::kNoCandidates, "no dictionary entry for '" + std::string(acronym) + "'");
  }
  CandidateSet cset;
  cset.truncated_at = k;
  std::size_t keep = k.has_value() ? std::min(*k, clusters.size()) : clusters.size();
  cset.candidates.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    cset.candidates.push_back({clusters[i].id, clusters[i].canonical, clusters[i].frequency});
  }
  return cset;
}

std::size_t argmax_candidate(const CandidateSet &cset, std::span<const double> scores) {
  if (scores.size() != cset.candidates.size() || scores.empty()) {
    throw Error(ErrorCode::kInputMismatch, "score count does not match candidate count");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    const Candidate &a = cset.candidates[i];
    const Candidate &b = cset.candidates[best];
    if (scores[i] != scores[best]) {
      if (scores[i] > scores[best]) best = i;
      continue;
    }
    if (a.frequency != b.frequency) {
      if (a.frequency > b.frequency) best = i;
      continue;
    }
    if (a.canonical < b.canonical || (a.canonical == b.canonical && a.cluster_id < b.cluster_id)) {
      best = i;
    }
  }
  return best;
}

Prediction make_prediction(std::string sample_id, const CandidateSet &cset,
                           std::span<const double> scores) {
  Prediction p;
  p.sample_id = std::move(sample_id);
  std::size_t best = argmax_candidate(cset, scores);
  p.scores.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    p.scores.emplace_back(cset.candidates[i].cluster_id, scores[i]);
  }
  p.predicted = cset.candidates[best].cluster_id;
  return p;
}

Prediction no_prediction(std::string sample_id) {
  Prediction p;
  p.sample_id = std::move(sample_id);
  return p;
}

Prediction popularity_score(const CandidateSet &cset, std::string sample_id) {
  std::vector<double> scores;
  scores.reserve(cset.candidates.size());
  for (const Candidate &c : cset.candidates) scores.push_back(static_cast<double>(c.frequency));
  return make_prediction(std::move(sample_id), cset, scores);
}

std::vector<double> bm25_scores(const CandidateSet &cset, std::string_view context,
                                const Bm25Params &params) {
  const std::size_t n_docs = cset.candidates.size();
  std::vector<std::map<std::string, std::size_t>> term_freqs(n_docs);
  std::vector<double> lengths(n_docs);
  std::map<std::string, std::size_t> doc_freq;
  double total_length = 0.0;
  for (std::size_t d = 0; d < n_docs; ++d) {
    std::vector<std::string> tokens = alnum_tokens(cset.candidates[d].canonical);
    lengths[d] = static_cast<double>(tokens.size());
    total_length += lengths[d];
    for (const std::string &t : tokens) ++term_freqs[d][t];
    for (const auto &[term, tf] : term_freqs[d]) ++doc_freq[term];
  }
  const double avgdl = n_docs > 0 ? total_length / static_cast<double>(n_docs) : 0.0;

  std::vector<double> scores(n_docs, 0.0);
  for (const std::string &q : alnum_tokens(context)) {
    auto df = doc_freq.find(q);
    if (df == doc_freq.end()) continue;
    const double n_q = static_cast<double>(df->second);
    const double idf =
        std::log(1.0 + (static_cast<double>(n_docs) - n_q + 0.5) / (n_q + 0.5));
    for (std::size_t d = 0; d < n_docs; ++d) {
      auto tf_it = term_freqs[d].find(q);
      if (tf_it == term_freqs[d].end()) continue;
      const double tf = static_cast<double>(tf_it->second);
      const double norm = avgdl > 0.0 ? lengths[d] / avgdl : 0.0;
      scores[d] += idf * tf * (params.k1 + 1.0) /
                   (tf + params.k1 * (1.0 - params.b + params.b * norm));
    }
  }
  return scores;
}

Prediction bm25_score(const CandidateSet &cset, std::string_view context, std::string sample_id,
                      const Bm25Params &params) {
  std::vector<double> scores = bm25_scores(cset, context, params);
  return make_prediction(std::move(sample_id), cset, scores);
}

double truncation_recall(std::span<const AdSample> samples, const Dictionary &dict,
                         std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kConfig, "truncation k must be >= 1");
  if (samples.empty()) return 0.0;
  std::size_t kept = 0;
  for (const AdSample &s : samples) {
    const DictEntry *entry = dict.find_entry(s.acronym);
    if (entry == nullptr) continue;
    std::optional<std::size_t> rank = entry->rank_of(s.gold_cluster_id);
    if (rank.has_value() && *rank < k) ++kept;
  }
  return static_cast<double>(kept) / static_cast<double>(samples.size());
}

}  // namespace acroforge
