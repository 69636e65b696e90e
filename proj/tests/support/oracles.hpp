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


// Deliberately naive reference implementations. Nothing here calls into the
// library except for plain data types.

#ifndef ACROFORGE_TESTS_SUPPORT_ORACLES_HPP_
#define ACROFORGE_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

inline bool alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// [begin, end) of every maximal run of non-blank characters.
inline std::vector<std::pair<std::size_t, std::size_t>> words(const std::string &text) {
  static const std::regex kRun("[^ \t\n\r\f\v]+");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kRun);
       it != std::sregex_iterator(); ++it) {
    auto begin = static_cast<std::size_t>(it->position());
    out.emplace_back(begin, begin + static_cast<std::size_t>(it->length()));
  }
  return out;
}

inline std::string sf_chars(const std::string &short_form) {
  std::string out;
  for (char c : short_form) {
    if (alnum(c)) out.push_back(lower(c));
  }
  return out;
}

inline bool is_subsequence(const std::string &needle, const std::string &hay) {
  std::size_t i = 0;
  for (char c : hay) {
    if (i < needle.size() && lower(c) == needle[i]) ++i;
  }
  return i == needle.size();
}

// The matching rule stated directly: first character of the candidate is
// the first short-form character, the rest follow in order.
inline bool satisfies(const std::string &candidate, const std::string &short_form) {
  std::string chars = sf_chars(short_form);
  if (chars.empty() || candidate.empty()) return false;
  if (lower(candidate[0]) != chars[0]) return false;
  return is_subsequence(chars.substr(1), candidate.substr(1));
}

// Tries every word-aligned suffix, shortest first.
inline std::optional<std::pair<std::size_t, std::size_t>> best_long_form(
    const std::string &window, const std::string &short_form) {
  auto ws = words(window);
  if (ws.empty()) return std::nullopt;
  std::size_t end = ws.back().second;
  for (std::size_t i = ws.size(); i-- > 0;) {
    if (satisfies(window.substr(ws[i].first, end - ws[i].first), short_form)) {
      return std::make_pair(ws[i].first, end);
    }
  }
  return std::nullopt;
}

inline std::vector<std::string> tokens(const std::string &text) {
  static const std::regex kTok("[A-Za-z0-9]+");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kTok);
       it != std::sregex_iterator(); ++it) {
    std::string t = it->str();
    for (char &c : t) c = lower(c);
    out.push_back(t);
  }
  return out;
}

// Okapi BM25, candidates as documents, every query token occurrence counted.
inline std::vector<double> bm25(const std::vector<std::string> &docs, const std::string &query,
                                double k1 = 1.5, double b = 0.75) {
  std::vector<std::vector<std::string>> d;
  for (const auto &doc : docs) d.push_back(tokens(doc));
  double n_docs = static_cast<double>(d.size());
  double avgdl = 0.0;
  for (const auto &t : d) avgdl += static_cast<double>(t.size());
  avgdl /= n_docs;
  std::vector<double> out(d.size(), 0.0);
  for (const std::string &q : tokens(query)) {
    double n = 0.0;
    for (const auto &t : d) {
      if (std::find(t.begin(), t.end(), q) != t.end()) n += 1.0;
    }
    double idf = std::log(1.0 + (n_docs - n + 0.5) / (n + 0.5));
    for (std::size_t i = 0; i < d.size(); ++i) {
      double tf = static_cast<double>(std::count(d[i].begin(), d[i].end(), q));
      double len = static_cast<double>(d[i].size());
      double norm = avgdl > 0.0 ? len / avgdl : 0.0;
      out[i] += idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * norm));
    }
  }
  return out;
}

inline double accuracy(const std::vector<std::string> &gold,
                       const std::vector<std::optional<std::string>> &pred) {
  double hit = 0.0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (pred[i] && *pred[i] == gold[i]) hit += 1.0;
  }
  return hit / static_cast<double>(gold.size());
}

inline double macro_f1(const std::vector<std::string> &gold,
                       const std::vector<std::optional<std::string>> &pred) {
  std::set<std::string> classes(gold.begin(), gold.end());
  for (const auto &p : pred) {
    if (p) classes.insert(*p);
  }
  double total = 0.0;
  for (const std::string &c : classes) {
    double tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      bool g = gold[i] == c;
      bool p = pred[i] && *pred[i] == c;
      if (g && p) tp += 1;
      if (!g && p) fp += 1;
      if (g && !p) fn += 1;
    }
    double prec = tp + fp > 0 ? tp / (tp + fp) : 0.0;
    double rec = tp + fn > 0 ? tp / (tp + fn) : 0.0;
    total += prec + rec > 0 ? 2 * prec * rec / (prec + rec) : 0.0;
  }
  return total / static_cast<double>(classes.size());
}

struct Cluster {
  std::string id;
  std::string canonical;
  std::string norm_key;
  unsigned long long frequency;
};

// Number of clusters that beat `id` under (frequency desc, canonical asc,
// norm_key asc).
inline std::size_t rank_of(const std::vector<Cluster> &clusters, const std::string &id) {
  const Cluster *gold = nullptr;
  for (const auto &c : clusters) {
    if (c.id == id) gold = &c;
  }
  if (gold == nullptr) return clusters.size();
  std::size_t better = 0;
  for (const auto &c : clusters) {
    if (c.id == id) continue;
    if (c.frequency != gold->frequency) {
      better += c.frequency > gold->frequency;
    } else if (c.canonical != gold->canonical) {
      better += c.canonical < gold->canonical;
    } else {
      better += c.norm_key < gold->norm_key;
    }
  }
  return better;
}

// Winner by score, then frequency, then canonical; -1 for an empty set.
inline long argmax(const std::vector<double> &scores, const std::vector<Cluster> &cands) {
  long best = -1;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (best < 0) {
      best = static_cast<long>(i);
      continue;
    }
    const auto &b = cands[static_cast<std::size_t>(best)];
    double sb = scores[static_cast<std::size_t>(best)];
    bool wins = scores[i] > sb ||
                (scores[i] == sb && (cands[i].frequency > b.frequency ||
                                     (cands[i].frequency == b.frequency &&
                                      (cands[i].canonical < b.canonical ||
                                       (cands[i].canonical == b.canonical &&
                                        cands[i].id < b.id)))));
    if (wins) best = static_cast<long>(i);
  }
  return best;
}

}  // namespace oracle

#endif  // ACROFORGE_TESTS_SUPPORT_ORACLES_HPP_
