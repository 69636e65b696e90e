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

#include "acroforge/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "acroforge/error.hpp"

namespace acroforge {
namespace {

void check_lengths(std::size_t gold, std::size_t pred) {
  if (gold != pred) {
    throw Error(ErrorCode::kInputMismatch, "gold has " + std::to_string(gold) +
                                               " labels, predictions " + std::to_string(pred));
  }
  if (gold == 0) throw Error(ErrorCode::kInputMismatch, "empty input");
}

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::map<std::string, ClassMetrics> tally(std::span<const std::string> gold,
                                          std::span<const PredictedLabel> pred) {
  std::map<std::string, ClassMetrics> classes;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ClassMetrics &g = classes[gold[i]];
    ++g.support;
    if (!pred[i].has_value()) continue;
    ClassMetrics &p = classes[*pred[i]];
    ++p.predicted;
    if (*pred[i] == gold[i]) ++p.true_positives;
  }
  for (auto &[label, m] : classes) {
    m.precision = ratio(m.true_positives, m.predicted);
    m.recall = ratio(m.true_positives, m.support);
    double denom = m.precision + m.recall;
    m.f1 = denom > 0.0 ? 2.0 * m.precision * m.recall / denom : 0.0;
  }
  return classes;
}

}  // namespace

F1Result averaged_f1(std::span<const std::string> gold, std::span<const PredictedLabel> pred) {
  check_lengths(gold.size(), pred.size());
  F1Result out;
  out.per_class = tally(gold, pred);
  double sum = 0.0;
  for (const auto &[label, m] : out.per_class) sum += m.f1;
  out.macro_f1 = sum / static_cast<double>(out.per_class.size());
  return out;
}

double f1_of_averages(std::span<const std::string> gold, std::span<const PredictedLabel> pred) {
  check_lengths(gold.size(), pred.size());
  auto classes = tally(gold, pred);
  double p = 0.0;
  double r = 0.0;
  for (const auto &[label, m] : classes) {
    p += m.precision;
    r += m.recall;
  }
  p /= static_cast<double>(classes.size());
  r /= static_cast<double>(classes.size());
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

double accuracy(std::span<const std::string> gold, std::span<const PredictedLabel> pred) {
  check_lengths(gold.size(), pred.size());
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (pred[i].has_value() && *pred[i] == gold[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

std::vector<ChunkRow> robustness_chunks(std::span<const AdSample> samples,
                                        std::span<const PredictedLabel> pred, std::size_t n) {
  if (samples.size() != pred.size()) {
    throw Error(ErrorCode::kInputMismatch, "samples and predictions differ in length");
  }
  if (n == 0 || samples.size() < n) {
    throw Error(ErrorCode::kChunkInfeasible, std::to_string(samples.size()) +
                                                 " samples cannot fill " + std::to_string(n) +
                                                 " chunks");
  }
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].candidate_count > samples[b].candidate_count;
  });

  std::vector<ChunkRow> rows;
  const std::size_t base = samples.size() / n;
  const std::size_t extra = samples.size() % n;
  std::size_t pos = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t len = base + (c < extra ? 1 : 0);
    std::vector<std::string> gold;
    std::vector<PredictedLabel> got;
    ChunkRow row;
    row.size = len;
    row.min_candidates = samples[order[pos]].candidate_count;
    double sum = 0.0;
    for (std::size_t k = pos; k < pos + len; ++k) {
      const AdSample &s = samples[order[k]];
      gold.push_back(s.gold_cluster_id);
      got.push_back(pred[order[k]]);
      sum += static_cast<double>(s.candidate_count);
      row.min_candidates = std::min(row.min_candidates, s.candidate_count);
      row.max_candidates = std::max(row.max_candidates, s.candidate_count);
    }
    row.mean_candidates = sum / static_cast<double>(len);
    row.f1 = averaged_f1(gold, got).macro_f1;
    row.accuracy = accuracy(gold, got);
    rows.push_back(row);
    pos += len;
  }
  return rows;
}

OvershadowBreakdown overshadow_breakdown(std::span<const AdSample> samples,
                                         std::span<const PredictedLabel> pred) {
  if (samples.size() != pred.size()) {
    throw Error(ErrorCode::kInputMismatch, "samples and predictions differ in length");
  }
  OvershadowBreakdown out;
  std::size_t popular_ok = 0;
  std::size_t shadow_ok = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    bool ok = pred[i].has_value() && *pred[i] == samples[i].gold_cluster_id;
    if (samples[i].overshadowed) {
      ++out.overshadowed_count;
      shadow_ok += ok ? 1 : 0;
    } else {
      ++out.popular_count;
      popular_ok += ok ? 1 : 0;
    }
  }
  if (out.popular_count > 0) out.popular = ratio(popular_ok, out.popular_count);
  if (out.overshadowed_count > 0) out.overshadowed = ratio(shadow_ok, out.overshadowed_count);
  return out;
}

EvalReport evaluate(std::span<const AdSample> samples, std::span<const PredictedLabel> pred,
                    const EvalOptions &options) {
  std::vector<std::string> gold;
  gold.reserve(samples.size());
  for (const AdSample &s : samples) gold.push_back(s.gold_cluster_id);

  EvalReport report;
  report.samples = samples.size();
  F1Result f1 = averaged_f1(gold, pred);
  report.macro_f1 = f1.macro_f1;
  report.per_class = std::move(f1.per_class);
  report.accuracy = accuracy(gold, pred);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (pred[i].has_value() && *pred[i] == gold[i]) ++report.correct;
  }
  if (options.f1_of_averages) report.f1_of_averages = f1_of_averages(gold, pred);
  if (options.chunks > 0 && samples.size() >= options.chunks) {
    report.chunks = robustness_chunks(samples, pred, options.chunks);
  }
  report.breakdown = overshadow_breakdown(samples, pred);
  return report;
}

std::string render_text(const EvalReport &report) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "samples       %zu\ncorrect       %zu\naccuracy      %.4f\n",
                report.samples, report.correct, report.accuracy);
  out << buf;
  std::snprintf(buf, sizeof(buf), "averaged F1   %.4f\n", report.macro_f1);
  out << buf;
  if (report.f1_of_averages) {
    std::snprintf(buf, sizeof(buf), "F1 of avgs    %.4f  (comparison only)\n",
                  *report.f1_of_averages);
    out << buf;
  }
  auto opt = [](const std::optional<double> &v) {
    if (!v) return std::string("n/a");
    char b[32];
    std::snprintf(b, sizeof(b), "%.4f", *v);
    return std::string(b);
  };
  out << "popular       " << opt(report.breakdown.popular) << "  (n="
      << report.breakdown.popular_count << ")\n";
  out << "overshadowed  " << opt(report.breakdown.overshadowed) << "  (n="
      << report.breakdown.overshadowed_count << ")\n";
  if (!report.chunks.empty()) {
    out << "\nchunk  size  mean_cand  min  max     f1      acc\n";
    for (std::size_t i = 0; i < report.chunks.size(); ++i) {
      const ChunkRow &r = report.chunks[i];
      std::snprintf(buf, sizeof(buf), "%5zu %5zu %10.2f %4zu %4zu %7.4f %7.4f\n", i + 1, r.size,
                    r.mean_candidates, r.min_candidates, r.max_candidates, r.f1, r.accuracy);
      out << buf;
    }
  }
  return out.str();
}

std::string render_chunks_csv(const EvalReport &report) {
  std::ostringstream out;
  out << "chunk,size,mean_candidates,min_candidates,max_candidates,f1,accuracy\n";
  char buf[160];
  for (std::size_t i = 0; i < report.chunks.size(); ++i) {
    const ChunkRow &r = report.chunks[i];
    std::snprintf(buf, sizeof(buf), "%zu,%zu,%.6f,%zu,%zu,%.6f,%.6f\n", i + 1, r.size,
                  r.mean_candidates, r.min_candidates, r.max_candidates, r.f1, r.accuracy);
    out << buf;
  }
  return out.str();
}

}  // namespace acroforge
