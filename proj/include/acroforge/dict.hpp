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

#ifndef ACROFORGE_DICT_HPP_
#define ACROFORGE_DICT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acroforge/extract.hpp"

namespace acroforge {

struct NormalizationConfig {
  std::string stemmer = "porter";
  bool lowercase = true;
  bool strip_punctuation = true;

  friend bool operator==(const NormalizationConfig &, const NormalizationConfig &) = default;
};

// Lowercase, punctuation to space, whitespace collapsed, Porter-stem every
// token. Throws Error(kDegenerateForm) when nothing remains.
std::string normalize_long_form(std::string_view text,
                                const NormalizationConfig &config = {});

// Acronym dictionary key: NFC, case preserved.
std::string acronym_key(std::string_view surface);

// "<acronym_key>:<normalized long form>". The normalized part never holds a
// colon, so the last colon separates the two.
std::string make_cluster_id(std::string_view acronym, std::string_view norm_key);

struct LongFormCluster {
  std::string id;
  std::string norm_key;
  std::string canonical;
  // Raw surface form -> record count.
  std::map<std::string, std::uint64_t> variants;
  std::uint64_t frequency = 0;

  friend bool operator==(const LongFormCluster &, const LongFormCluster &) = default;
};

struct DictEntry {
  std::string acronym;
  // Descending frequency; ties by canonical, then normalized key.
  std::vector<LongFormCluster> clusters;

  // 0-based position of the cluster, or nullopt.
  std::optional<std::size_t> rank_of(std::string_view cluster_id) const;
  std::uint64_t total_frequency() const;

  friend bool operator==(const DictEntry &, const DictEntry &) = default;
};

struct DictStats {
  std::uint64_t acronyms = 0;
  std::uint64_t long_forms = 0;
  std::uint64_t records = 0;
  std::uint64_t dropped_degenerate = 0;

  friend bool operator==(const DictStats &, const DictStats &) = default;
};

class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(NormalizationConfig config) : config_(std::move(config)) {}

  const NormalizationConfig &config() const { return config_; }
  const std::map<std::string, DictEntry> &entries() const { return entries_; }
  const DictStats &stats() const { return stats_; }

  // Adds `count` occurrences of (acronym, raw long form). Throws
  // Error(kDegenerateForm) for punctuation-only long forms; the dictionary
  // is left unchanged in that case.
  const LongFormCluster &add(std::string_view acronym, std::string_view long_form,
                             std::uint64_t count = 1);

  // Like add() but counts degenerate forms instead of throwing.
  void add_record(const ExtractionRecord &rec);

  const DictEntry *find_entry(std::string_view acronym_surface) const;

  // Exact key first, then case-insensitive fallback; empty when absent.
  std::span<const LongFormCluster> lookup(std::string_view acronym_surface) const;

  // Resolves (acronym, long form) to its cluster via the exact key.
  const LongFormCluster *resolve(std::string_view acronym,
                                 std::string_view long_form) const;
  const LongFormCluster *find_cluster(std::string_view cluster_id) const;

  // Frequencies add; canonical forms are re-selected.
  void merge_from(const Dictionary &other);

  // Every variant repeated `count` times, as (acronym, long form) pairs.
  std::vector<std::pair<std::string, std::string>> to_pairs() const;

  void note_dropped(std::uint64_t n) { stats_.dropped_degenerate += n; }

  friend bool operator==(const Dictionary &a, const Dictionary &b) {
    return a.config_ == b.config_ && a.entries_ == b.entries_ && a.stats_ == b.stats_;
  }

 private:
  void reorder(DictEntry &entry);
  void rebuild_fold_index();

  NormalizationConfig config_;
  std::map<std::string, DictEntry> entries_;
  // ascii-lowercased key -> keys sharing that fold
  std::map<std::string, std::vector<std::string>> fold_index_;
  DictStats stats_;
};

Dictionary build_dictionary(std::span<const ExtractionRecord> records,
                            const NormalizationConfig &config = {});

// Throws Error(kConfigMismatch) when normalization configs differ.
Dictionary merge_dictionaries(const Dictionary &a, const Dictionary &b);

}  // namespace acroforge

#endif  // ACROFORGE_DICT_HPP_
