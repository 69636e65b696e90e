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

#include "acroforge/benchgen.hpp"

#include <algorithm>
#include <tuple>

#include "acroforge/extract.hpp"
#include "acroforge/hash.hpp"

namespace acroforge {

std::string_view split_name(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kValid:
      return "valid";
    case Split::kTest:
      return "test";
  }
  return "?";
}

std::optional<Split> parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "valid") return Split::kValid;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

AliasTable read_alias_table(std::istream &in) {
  AliasTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kParse, "alias table line without a tab: '" + line + "'");
    }
    std::string kb_id(trim(std::string_view(line).substr(0, tab)));
    std::string alias(trim(std::string_view(line).substr(tab + 1)));
    if (kb_id.empty() || alias.empty()) continue;
    table[kb_id].push_back(std::move(alias));
  }
  return table;
}

std::optional<std::string> kb_acronym_for(std::string_view kb_id, std::string_view mention_text,
                                          const AliasTable &aliases, const Dictionary &dict) {
  auto it = aliases.find(std::string(kb_id));
  if (it == aliases.end()) return std::nullopt;

  std::optional<std::string> best;
  std::uint64_t best_freq = 0;
  for (const std::string &alias : it->second) {
    if (!valid_short_form(alias)) continue;
    if (alias.size() >= mention_text.size()) continue;
    if (!find_best_long_form(mention_text, alias)) continue;
    const LongFormCluster *c = dict.resolve(alias, mention_text);
    std::uint64_t freq = c != nullptr ? c->frequency : 0;
    bool better = !best.has_value() || freq > best_freq ||
                  (freq == best_freq && (alias.size() < best->size() ||
                                         (alias.size() == best->size() && alias < *best)));
    if (better) {
      best = alias;
      best_freq = freq;
    }
  }
  return best;
}

AdSample replace_and_verify(const EdMention &mention, std::string_view acronym,
                            Dictionary &dict) {
  if (mention.mention_span.empty() || mention.mention_span.end > mention.context.size()) {
    throw Error(ErrorCode::kParse, "mention " + mention.id + " has an invalid span");
  }
  std::string_view long_form = mention.mention_span.slice(mention.context);

  Sentence probe;
  probe.text = std::string(long_form) + " (" + std::string(acronym) + ")";
  std::vector<ExtractionRecord> recs = find_pairs(probe);
  bool verified = std::any_of(recs.begin(), recs.end(), [&](const ExtractionRecord &r) {
    return r.short_form == acronym && r.long_form == long_form;
  });
  if (!verified) {
    throw Error(ErrorCode::kVerificationFailed,
                "extractor rejects (" + std::string(acronym) + ", " + std::string(long_form) + ")");
  }

  const LongFormCluster *cluster = dict.resolve(acronym, long_form);
  if (cluster == nullptr) cluster = &dict.add(acronym, long_form, 1);
  std::string gold = cluster->id;

  AdSample sample;
  sample.id = mention.id;
  sample.context = mention.context.substr(0, mention.mention_span.begin);
  sample.acronym_span.begin = sample.context.size();
  sample.context.append(acronym);
  sample.acronym_span.end = sample.context.size();
  sample.context.append(mention.context, mention.mention_span.end);
  sample.acronym = std::string(acronym);
  sample.gold_cluster_id = std::move(gold);
  sample.source_tag = mention.source_tag;
  freeze(std::span<AdSample>(&sample, 1), dict);
  return sample;
}

void freeze(std::span<AdSample> samples, const Dictionary &dict) {
  for (AdSample &s : samples) {
    const DictEntry *entry = dict.find_entry(s.acronym);
    if (entry == nullptr) {
      s.candidate_count = 0;
      s.overshadowed = false;
      continue;
    }
    s.candidate_count = entry->clusters.size();
    std::optional<std::size_t> rank = entry->rank_of(s.gold_cluster_id);
    s.overshadowed = rank.has_value() && *rank > 0;
  }
}

BenchmarkBuild build_benchmark(std::span<const EdMention> mentions, const AliasTable &aliases,
                               Dictionary &dict) {
  BenchmarkBuild out;
  for (const EdMention &m : mentions) {
    ++out.mentions;
    if (m.mention_span.empty() || m.mention_span.end > m.context.size()) {
      ++out.degenerate;
      continue;
    }
    std::string_view text = m.mention_span.slice(m.context);
    std::optional<std::string> acronym = kb_acronym_for(m.kb_id, text, aliases, dict);
    if (!acronym) {
      ++out.no_acronym;
      continue;
    }
    std::uint64_t before = dict.stats().long_forms;
    try {
      out.samples.push_back(replace_and_verify(m, *acronym, dict));
    } catch (const Error &e) {
      if (e.code() == ErrorCode::kVerificationFailed) {
        ++out.verification_failed;
      } else if (e.code() == ErrorCode::kDegenerateForm) {
        ++out.degenerate;
      } else {
        throw;
      }
      continue;
    }
    out.injected_clusters += dict.stats().long_forms - before;
  }
  freeze(out.samples, dict);
  return out;
}

std::pair<EdMention, std::pair<std::string, std::string>> ad_sample_as_mention(
    std::string id, std::string_view context, Span acronym_span, std::string_view long_form) {
  EdMention m;
  m.id = std::move(id);
  m.context = std::string(context.substr(0, acronym_span.begin));
  m.mention_span.begin = m.context.size();
  m.context.append(long_form);
  m.mention_span.end = m.context.size();
  m.context.append(context.substr(acronym_span.end));
  m.kb_id = std::string(long_form);
  m.kb_name = "self";
  return {std::move(m), {std::string(long_form), std::string(acronym_span.slice(context))}};
}

std::map<std::string, Split> split_by_acronym(std::span<const AdSample> samples,
                                              const SplitRatios &ratios, std::uint64_t seed) {
  for (double r : ratios) {
    if (!(r > 0.0)) throw Error(ErrorCode::kConfig, "split ratios must be positive");
  }
  std::map<std::string, std::uint64_t> mass;
  for (const AdSample &s : samples) ++mass[acronym_key(s.acronym)];
  if (mass.size() < 3) {
    throw Error(ErrorCode::kSplitInfeasible,
                std::to_string(mass.size()) + " distinct acronyms, need at least 3");
  }

  struct Item {
    std::string acronym;
    std::uint64_t mass;
    std::uint64_t order;
  };
  std::vector<Item> items;
  items.reserve(mass.size());
  for (const auto &[acr, m] : mass) {
    items.push_back({acr, m, splitmix64(seed ^ fnv1a64(acr))});
  }
  std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
    if (a.mass != b.mass) return a.mass > b.mass;
    return std::tie(a.order, a.acronym) < std::tie(b.order, b.acronym);
  });

  std::array<double, 3> filled{0.0, 0.0, 0.0};
  std::map<std::string, Split> assignment;
  for (const Item &item : items) {
    std::size_t target = 0;
    for (std::size_t k = 1; k < 3; ++k) {
      if (filled[k] / ratios[k] < filled[target] / ratios[target]) target = k;
    }
    filled[target] += static_cast<double>(item.mass);
    assignment[item.acronym] = static_cast<Split>(target);
  }
  return assignment;
}

void apply_split(std::span<AdSample> samples, const std::map<std::string, Split> &assignment) {
  for (AdSample &s : samples) {
    auto it = assignment.find(acronym_key(s.acronym));
    if (it != assignment.end()) s.split = it->second;
  }
}

namespace {

SplitStats summarize(const std::vector<const AdSample *> &group) {
  SplitStats st;
  std::map<std::string, std::size_t> per_acronym;
  double candidate_sum = 0.0;
  for (const AdSample *s : group) {
    ++st.samples;
    candidate_sum += static_cast<double>(s->candidate_count);
    if (s->overshadowed) ++st.overshadowed;
    per_acronym.try_emplace(acronym_key(s->acronym), s->candidate_count);
  }
  st.unique_acronyms = per_acronym.size();
  if (st.samples > 0) {
    st.candidates_per_sample = candidate_sum / static_cast<double>(st.samples);
    st.overshadowed_ratio =
        static_cast<double>(st.overshadowed) / static_cast<double>(st.samples);
  }
  if (!per_acronym.empty()) {
    double sum = 0.0;
    for (const auto &[acr, n] : per_acronym) sum += static_cast<double>(n);
    st.candidates_per_acronym = sum / static_cast<double>(per_acronym.size());
  }
  return st;
}

}  // namespace

DatasetStats dataset_stats(std::span<const AdSample> samples) {
  std::vector<const AdSample *> all;
  std::map<Split, std::vector<const AdSample *>> by_split{
      {Split::kTrain, {}}, {Split::kValid, {}}, {Split::kTest, {}}};
  for (const AdSample &s : samples) {
    all.push_back(&s);
    by_split[s.split].push_back(&s);
  }
  DatasetStats out;
  out.overall = summarize(all);
  for (const auto &[split, group] : by_split) out.per_split[split] = summarize(group);
  return out;
}

}  // namespace acroforge
