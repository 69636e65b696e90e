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

#include "acroforge/corpusgen.hpp"

#include <algorithm>

#include "acroforge/serialize.hpp"
#include "acroforge/text.hpp"

namespace acroforge {
namespace {

bool is_trailing_punct(char c) {
  return c == ',' || c == '.' || c == ';' || c == ':' || c == '!' || c == '?' || c == ')';
}

// Collapses whitespace, drops spaces before punctuation and doubled commas,
// leaving [protect.begin, protect.end) verbatim. Returns the new position of
// the protected range.
Span tidy(std::string &text, Span protect) {
  std::string out;
  out.reserve(text.size());
  Span moved;
  auto next_non_space = [&](std::size_t i) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    return i;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == protect.begin) {
      moved.begin = out.size();
      out.append(text, protect.begin, protect.size());
      moved.end = out.size();
      i = protect.end - 1;
      continue;
    }
    char c = text[i];
    if (is_ascii_space(c)) {
      std::size_t j = next_non_space(i);
      if (out.empty() || is_ascii_space(out.back()) || j == text.size()) continue;
      if (j != protect.begin && is_trailing_punct(text[j])) continue;
      out.push_back(' ');
      continue;
    }
    if (c == ',') {
      std::size_t j = next_non_space(i + 1);
      bool before_stop = j < text.size() && j != protect.begin &&
                         (text[j] == ',' || text[j] == '.' || text[j] == ';' || text[j] == ':');
      if (before_stop || (!out.empty() && out.back() == ',') || out.empty()) continue;
    }
    out.push_back(c);
  }
  if (protect.begin == text.size()) {
    moved.begin = moved.end = out.size();
  }
  text = std::move(out);
  return moved;
}

bool contains_token_run(const std::vector<Word> &hay, const std::vector<Word> &needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool all = true;
    for (std::size_t k = 0; k < needle.size() && all; ++k) {
      all = hay[i + k].text == needle[k].text;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::uint64_t CorpusStats::errored() const {
  std::uint64_t n = 0;
  for (const auto &[code, count] : errors) n += count;
  return n;
}

bool mentions_long_form(std::string_view text, std::string_view long_form,
                        const NormalizationConfig &config) {
  if (ascii_lower(text).find(ascii_lower(long_form)) != std::string::npos) return true;
  std::string norm_text;
  std::string norm_lf;
  try {
    norm_text = normalize_long_form(text, config);
    norm_lf = normalize_long_form(long_form, config);
  } catch (const Error &) {
    return false;
  }
  return contains_token_run(split_words(norm_text), split_words(norm_lf));
}

PretrainSample make_pretrain_sample(const ExtractionRecord &rec, const Dictionary &dict) {
  const LongFormCluster *gold = dict.resolve(rec.short_form, rec.long_form);
  if (gold == nullptr) {
    throw Error(ErrorCode::kUnresolvedPair,
                "(" + rec.short_form + ", " + rec.long_form + ") not in dictionary");
  }

  std::string_view text = rec.sentence.text;
  std::string_view acronym = rec.short_span.slice(text);
  std::string context;
  Span acr;
  if (rec.pattern == Pattern::kLongParenShort) {
    context.append(text.substr(0, rec.long_span.begin));
    acr.begin = context.size();
    context.append(acronym);
    acr.end = context.size();
    context.append(text.substr(rec.paren_span.end));
  } else {
    context.append(text.substr(0, rec.short_span.end));
    acr = rec.short_span;
    context.append(text.substr(rec.paren_span.end));
  }
  acr = tidy(context, acr);

  if (split_words(context).size() < kMinContextWords) {
    throw Error(ErrorCode::kContextTooShort, "context '" + context + "' too short");
  }
  if (mentions_long_form(context, gold->canonical, dict.config()) ||
      mentions_long_form(context, rec.long_form, dict.config())) {
    throw Error(ErrorCode::kLeakedLongForm, "context still contains the long form");
  }

  PretrainSample sample;
  sample.context = std::move(context);
  sample.acronym = std::string(acronym);
  sample.acronym_span = acr;
  sample.gold_cluster_id = gold->id;
  sample.source_tag = rec.sentence.source_tag;
  return sample;
}

CorpusStats emit_corpus(std::span<const ExtractionRecord> records, const Dictionary &dict,
                        std::ostream &sink) {
  CorpusStats stats;
  for (const ExtractionRecord &rec : records) {
    ++stats.input;
    PretrainSample sample;
    try {
      sample = make_pretrain_sample(rec, dict);
    } catch (const Error &e) {
      ++stats.errors[e.code()];
      continue;
    }
    sink << nlohmann::json(sample).dump() << '\n';
    if (!sink) {
      stats.aborted = true;
      stats.abort_reason = "sink write failed after " + std::to_string(stats.emitted) +
                           " samples";
      ++stats.errors[ErrorCode::kSinkFailure];
      return stats;
    }
    ++stats.emitted;
    ++stats.per_source_tag[sample.source_tag];
  }
  return stats;
}

}  // namespace acroforge
