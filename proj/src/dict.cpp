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

#include "acroforge/dict.hpp"

#include <algorithm>
#include <tuple>

#include "acroforge/error.hpp"
#include "acroforge/stemmer.hpp"
#include "acroforge/text.hpp"

namespace acroforge {
namespace {

void select_canonical(LongFormCluster &cluster) {
  const std::string *best = nullptr;
  std::uint64_t best_count = 0;
  // std::map iterates in lexicographic order, so the first maximum wins ties.
  for (const auto &[form, count] : cluster.variants) {
    if (best == nullptr || count > best_count) {
      best = &form;
      best_count = count;
    }
  }
  cluster.canonical = best != nullptr ? *best : std::string();
}

bool cluster_before(const LongFormCluster &a, const LongFormCluster &b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return std::tie(a.canonical, a.norm_key) < std::tie(b.canonical, b.norm_key);
}

}  // namespace

std::string normalize_long_form(std::string_view text, const NormalizationConfig &config) {
  std::string composed = nfc(text);
  std::string cleaned;
  cleaned.reserve(composed.size());
  for (char c : composed) {
    auto u = static_cast<unsigned char>(c);
    bool punct = u < 0x80 && !is_ascii_alnum(c) && !is_ascii_space(c);
    if (punct && config.strip_punctuation) {
      cleaned.push_back(' ');
    } else {
      cleaned.push_back(config.lowercase ? to_ascii_lower(c) : c);
    }
  }
  std::string key;
  for (const Word &w : split_words(cleaned)) {
    if (!key.empty()) key.push_back(' ');
    if (config.stemmer == "porter") {
      key += porter_stem(w.text);
    } else {
      key += w.text;
    }
  }
  if (key.empty()) {
    throw Error(ErrorCode::kDegenerateForm, "long form '" + std::string(text) +
                                                "' normalizes to nothing");
  }
  return key;
}

std::string acronym_key(std::string_view surface) { return nfc(surface); }

std::string make_cluster_id(std::string_view acronym, std::string_view norm_key) {
  std::string id(acronym);
  id.push_back(':');
  id.append(norm_key);
  return id;
}

std::optional<std::size_t> DictEntry::rank_of(std::string_view cluster_id) const {
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].id == cluster_id) return i;
  }
  return std::nullopt;
}

std::uint64_t DictEntry::total_frequency() const {
  std::uint64_t total = 0;
  for (const LongFormCluster &c : clusters) total += c.frequency;
  return total;
}

void Dictionary::reorder(DictEntry &entry) {
  std::sort(entry.clusters.begin(), entry.clusters.end(), cluster_before);
}

void Dictionary::rebuild_fold_index() {
  fold_index_.clear();
  for (const auto &[key, entry] : entries_) fold_index_[ascii_lower(key)].push_back(key);
}

const LongFormCluster &Dictionary::add(std::string_view acronym,
                                       std::string_view long_form,
                                       std::uint64_t count) {
  std::string norm = normalize_long_form(long_form, config_);
  std::string key = acronym_key(acronym);
  auto [it, inserted] = entries_.try_emplace(key);
  DictEntry &entry = it->second;
  if (inserted) {
    entry.acronym = key;
    fold_index_[ascii_lower(key)].push_back(key);
    ++stats_.acronyms;
  }
  std::string id = make_cluster_id(key, norm);
  auto cluster = std::find_if(entry.clusters.begin(), entry.clusters.end(),
                              [&](const LongFormCluster &c) { return c.id == id; });
  if (cluster == entry.clusters.end()) {
    LongFormCluster fresh;
    fresh.id = id;
    fresh.norm_key = norm;
    entry.clusters.push_back(std::move(fresh));
    cluster = std::prev(entry.clusters.end());
    ++stats_.long_forms;
  }
  cluster->variants[std::string(long_form)] += count;
  cluster->frequency += count;
  select_canonical(*cluster);
  stats_.records += count;

  // Only this cluster moved; bubble it into place.
  auto pos = static_cast<std::size_t>(cluster - entry.clusters.begin());
  auto &cs = entry.clusters;
  while (pos > 0 && cluster_before(cs[pos], cs[pos - 1])) {
    std::swap(cs[pos], cs[pos - 1]);
    --pos;
  }
  while (pos + 1 < cs.size() && cluster_before(cs[pos + 1], cs[pos])) {
    std::swap(cs[pos], cs[pos + 1]);
    ++pos;
  }
  return cs[pos];
}

void Dictionary::add_record(const ExtractionRecord &rec) {
  try {
    add(rec.short_form, rec.long_form);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kDegenerateForm) throw;
    ++stats_.dropped_degenerate;
  }
}

const DictEntry *Dictionary::find_entry(std::string_view acronym_surface) const {
  std::string key = acronym_key(acronym_surface);
  if (auto it = entries_.find(key); it != entries_.end()) return &it->second;

  auto fold = fold_index_.find(ascii_lower(key));
  if (fold == fold_index_.end()) return nullptr;
  const DictEntry *best = nullptr;
  std::uint64_t best_total = 0;
  for (const std::string &k : fold->second) {
    const DictEntry &candidate = entries_.at(k);
    std::uint64_t total = candidate.total_frequency();
    if (best == nullptr || total > best_total ||
        (total == best_total && candidate.acronym < best->acronym)) {
      best = &candidate;
      best_total = total;
    }
  }
  return best;
}

std::span<const LongFormCluster> Dictionary::lookup(std::string_view acronym_surface) const {
  const DictEntry *entry = find_entry(acronym_surface);
  if (entry == nullptr) return {};
  return entry->clusters;
}

const LongFormCluster *Dictionary::resolve(std::string_view acronym,
                                           std::string_view long_form) const {
  std::string norm;
  try {
    norm = normalize_long_form(long_form, config_);
  } catch (const Error &) {
    return nullptr;
  }
  return find_cluster(make_cluster_id(acronym_key(acronym), norm));
}

const LongFormCluster *Dictionary::find_cluster(std::string_view cluster_id) const {
  std::size_t colon = cluster_id.rfind(':');
  if (colon == std::string_view::npos) return nullptr;
  auto it = entries_.find(std::string(cluster_id.substr(0, colon)));
  if (it == entries_.end()) return nullptr;
  for (const LongFormCluster &c : it->second.clusters) {
    if (c.id == cluster_id) return &c;
  }
  return nullptr;
}

void Dictionary::merge_from(const Dictionary &other) {
  if (!(config_ == other.config_)) {
    throw Error(ErrorCode::kConfigMismatch, "normalization configurations differ");
  }
  for (const auto &[key, theirs] : other.entries_) {
    auto [it, inserted] = entries_.try_emplace(key);
    DictEntry &mine = it->second;
    if (inserted) mine.acronym = key;
    for (const LongFormCluster &c : theirs.clusters) {
      auto match = std::find_if(mine.clusters.begin(), mine.clusters.end(),
                                [&](const LongFormCluster &x) { return x.id == c.id; });
      if (match == mine.clusters.end()) {
        mine.clusters.push_back(c);
        continue;
      }
      for (const auto &[form, count] : c.variants) match->variants[form] += count;
      match->frequency += c.frequency;
      select_canonical(*match);
    }
    reorder(mine);
  }
  stats_.records += other.stats_.records;
  stats_.dropped_degenerate += other.stats_.dropped_degenerate;
  stats_.acronyms = entries_.size();
  stats_.long_forms = 0;
  for (const auto &[key, entry] : entries_) stats_.long_forms += entry.clusters.size();
  rebuild_fold_index();
}

std::vector<std::pair<std::string, std::string>> Dictionary::to_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto &[key, entry] : entries_) {
    for (const LongFormCluster &c : entry.clusters) {
      for (const auto &[form, count] : c.variants) {
        for (std::uint64_t i = 0; i < count; ++i) out.emplace_back(key, form);
      }
    }
  }
  return out;
}

Dictionary build_dictionary(std::span<const ExtractionRecord> records,
                            const NormalizationConfig &config) {
  Dictionary dict(config);
  for (const ExtractionRecord &rec : records) dict.add_record(rec);
  return dict;
}

Dictionary merge_dictionaries(const Dictionary &a, const Dictionary &b) {
  Dictionary out = a;
  out.merge_from(b);
  return out;
}

}  // namespace acroforge
