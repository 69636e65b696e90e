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

#ifndef ACROFORGE_EVAL_HPP_
#define ACROFORGE_EVAL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acroforge/benchgen.hpp"

namespace acroforge {

// A missing prediction (no candidates) is always wrong.
using PredictedLabel = std::optional<std::string>;

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t support = 0;
  std::uint64_t predicted = 0;
  std::uint64_t true_positives = 0;
};

struct F1Result {
  double macro_f1 = 0.0;
  std::map<std::string, ClassMetrics> per_class;
};

// Averaged F1: per-class F1 averaged with equal weight over every class that
// occurs in gold or in the predictions. Zero denominators give 0.
// Throws Error(kInputMismatch) on length mismatch or empty input.
F1Result averaged_f1(std::span<const std::string> gold, std::span<const PredictedLabel> pred);

// The "F1 of averages" variant: harmonic mean of macro precision and macro
// recall. Only for comparison; never the headline number.
double f1_of_averages(std::span<const std::string> gold, std::span<const PredictedLabel> pred);

double accuracy(std::span<const std::string> gold, std::span<const PredictedLabel> pred);

struct ChunkRow {
  std::size_t size = 0;
  double mean_candidates = 0.0;
  std::size_t min_candidates = 0;
  std::size_t max_candidates = 0;
  double f1 = 0.0;
  double accuracy = 0.0;
};

// Sorts by candidate_count, largest first (stable), and cuts n near-equal
// chunks; the first (size % n) chunks get one extra sample.
// Throws Error(kChunkInfeasible) when there are fewer samples than chunks.
std::vector<ChunkRow> robustness_chunks(std::span<const AdSample> samples,
                                        std::span<const PredictedLabel> pred,
                                        std::size_t n = 10);

struct OvershadowBreakdown {
  std::optional<double> popular;
  std::optional<double> overshadowed;
  std::size_t popular_count = 0;
  std::size_t overshadowed_count = 0;
};

OvershadowBreakdown overshadow_breakdown(std::span<const AdSample> samples,
                                         std::span<const PredictedLabel> pred);

struct EvalReport {
  std::size_t samples = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::optional<double> f1_of_averages;
  std::map<std::string, ClassMetrics> per_class;
  // Empty when there are fewer samples than chunks.
  std::vector<ChunkRow> chunks;
  OvershadowBreakdown breakdown;
};

struct EvalOptions {
  std::size_t chunks = 10;
  bool f1_of_averages = false;
};

EvalReport evaluate(std::span<const AdSample> samples, std::span<const PredictedLabel> pred,
                    const EvalOptions &options = {});

std::string render_text(const EvalReport &report);
std::string render_chunks_csv(const EvalReport &report);

}  // namespace acroforge

#endif  // ACROFORGE_EVAL_HPP_
