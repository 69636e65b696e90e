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

#include "acroforge/extract.hpp"

#include <algorithm>
#include <thread>

namespace acroforge {
namespace {

constexpr std::string_view kAbbreviations[] = {
    "mr",   "mrs",  "ms",   "dr",    "prof", "sr",   "jr",   "st",
    "vs",   "etc",  "e.g",  "i.e",   "cf",   "fig",  "figs", "eq",
    "eqs",  "al",   "nos",  "vol",  "pp",   "inc",
    "ltd",  "co",   "corp", "approx", "dept", "univ", "gen",  "gov",
    "rev",  "ref",  "refs", "sec",   "ch",   "ed",   "eds",  "est",
    "jan",  "feb",  "mar",  "apr",   "aug",  "sep",  "oct",  "nov"};

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool is_abbreviation(std::string_view token) {
  // token excludes the final period
  std::size_t b = 0;
  while (b < token.size() && !is_ascii_alnum(token[b])) ++b;
  token.remove_prefix(b);
  if (token.size() == 1 && token[0] >= 'A' && token[0] <= 'Z') return true;
  std::string lower = ascii_lower(token);
  return std::find(std::begin(kAbbreviations), std::end(kAbbreviations), lower) !=
         std::end(kAbbreviations);
}

std::size_t code_points(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

// Strips non-alphanumeric bytes from both ends of a word.
Span core_of(const Word &word) {
  std::size_t b = 0;
  std::size_t e = word.text.size();
  while (b < e && !is_ascii_alnum(word.text[b])) ++b;
  while (e > b && !is_ascii_alnum(word.text[e - 1])) --e;
  return {word.span.begin + b, word.span.begin + e};
}

bool acceptable_pair(std::string_view short_form, std::string_view long_form) {
  if (code_points(long_form) < code_points(short_form)) return false;
  if (split_words(long_form).size() > long_form_window_cap(short_form)) return false;
  std::string with_space = std::string(short_form) + " ";
  if (long_form.find(with_space) != std::string_view::npos) return false;
  if (long_form.size() >= short_form.size() &&
      long_form.substr(long_form.size() - short_form.size()) == short_form) {
    return false;
  }
  return true;
}

std::vector<Word> shift_words(std::vector<Word> words, std::string_view base,
                              std::size_t offset) {
  for (Word &w : words) {
    w.span.begin += offset;
    w.span.end += offset;
    w.text = w.span.slice(base);
  }
  return words;
}

std::optional<ExtractionRecord> try_group(const Sentence &sent, std::size_t open,
                                          std::size_t close) {
  std::string_view text = sent.text;
  std::string_view inner = text.substr(open + 1, close - open - 1);
  std::size_t lead = 0;
  while (lead < inner.size() && is_ascii_space(inner[lead])) ++lead;
  std::string_view content = trim(inner);
  if (content.empty()) return std::nullopt;
  const std::size_t content_begin = open + 1 + lead;
  const Span paren{open, close + 1};

  std::vector<Word> prefix = split_words(text.substr(0, open));

  // long form ( acronym )
  std::size_t cut = content.find_first_of(",;");
  std::string_view sf_text = trim(content.substr(0, cut));
  if (valid_short_form(sf_text)) {
    std::size_t cap = long_form_window_cap(sf_text);
    std::size_t take = std::min(cap, prefix.size());
    std::span<const Word> window(prefix.data() + (prefix.size() - take), take);
    if (auto best = find_best_long_form(window, sf_text)) {
      std::string_view lf = best->slice(text);
      if (acceptable_pair(sf_text, lf)) {
        ExtractionRecord rec;
        rec.short_form = std::string(sf_text);
        rec.long_form = std::string(lf);
        rec.sentence = sent;
        rec.short_span = {content_begin, content_begin + sf_text.size()};
        rec.long_span = *best;
        rec.paren_span = paren;
        rec.pattern = Pattern::kLongParenShort;
        return rec;
      }
    }
  }

  // acronym ( long form )
  if (prefix.empty()) return std::nullopt;
  Span sf_span = core_of(prefix.back());
  if (sf_span.empty()) return std::nullopt;
  // The acronym must sit right before the parenthesis, modulo punctuation.
  std::string_view sf = sf_span.slice(text);
  if (!valid_short_form(sf)) return std::nullopt;
  std::vector<Word> content_words =
      shift_words(split_words(content), text, content_begin);
  if (auto best = find_best_long_form(content_words, sf)) {
    std::string_view lf = best->slice(text);
    if (acceptable_pair(sf, lf)) {
      ExtractionRecord rec;
      rec.short_form = std::string(sf);
      rec.long_form = std::string(lf);
      rec.sentence = sent;
      rec.short_span = sf_span;
      rec.long_span = *best;
      rec.paren_span = paren;
      rec.pattern = Pattern::kShortParenLong;
      return rec;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view pattern_name(Pattern pattern) {
  switch (pattern) {
    case Pattern::kLongParenShort:
      return "LF_PAREN_SF";
    case Pattern::kShortParenLong:
      return "SF_PAREN_LF";
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  if (name == "LF_PAREN_SF") return Pattern::kLongParenShort;
  if (name == "SF_PAREN_LF") return Pattern::kShortParenLong;
  return std::nullopt;
}

ExtractionDiagnostics &ExtractionDiagnostics::operator+=(
    const ExtractionDiagnostics &other) {
  documents += other.documents;
  sentences += other.sentences;
  paren_groups += other.paren_groups;
  unbalanced += other.unbalanced;
  records += other.records;
  return *this;
}

std::vector<Sentence> split_sentences(const Document &doc) {
  std::vector<Sentence> out;
  std::string_view text = doc.text;
  const std::size_t n = text.size();

  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string_view piece = text.substr(begin, end - begin);
    std::string_view trimmed = trim(piece);
    if (trimmed.empty()) return;
    Sentence s;
    s.doc_id = doc.doc_id;
    s.sent_index = out.size();
    s.text = std::string(trimmed);
    s.char_offset = begin + static_cast<std::size_t>(trimmed.data() - piece.data());
    s.source_tag = doc.source_tag;
    out.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      // Blank line: paragraph break.
      std::size_t j = i + 1;
      while (j < n && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
      if (j < n && text[j] == '\n') {
        emit(start, i);
        start = j + 1;
        i = j + 1;
        continue;
      }
      ++i;
      continue;
    }
    if (!is_terminator(c)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n && (is_terminator(text[j]) || is_closer(text[j]))) ++j;
    if (j < n && !is_ascii_space(text[j])) {
      i = j;
      continue;
    }
    bool boundary = true;
    if (c == '.' && j == i + 1) {
      std::size_t t = i;
      while (t > start && !is_ascii_space(text[t - 1])) --t;
      if (is_abbreviation(text.substr(t, i - t))) boundary = false;
    }
    if (boundary) {
      std::size_t k = j;
      while (k < n && is_ascii_space(text[k])) ++k;
      if (k < n && text[k] >= 'a' && text[k] <= 'z') boundary = false;
    }
    if (boundary) {
      emit(start, j);
      start = j;
    }
    i = j;
  }
  emit(start, n);
  return out;
}

bool valid_short_form(std::string_view token_text) {
  std::size_t len = code_points(token_text);
  if (len < 2 || len > 10) return false;
  if (!is_ascii_alnum(token_text.front())) return false;
  if (split_words(token_text).size() > 2) return false;
  return std::any_of(token_text.begin(), token_text.end(), is_ascii_alpha);
}

std::size_t long_form_window_cap(std::string_view short_form) {
  std::size_t len = code_points(short_form);
  return std::min(len + 5, 2 * len);
}

std::optional<Span> find_best_long_form(std::span<const Word> window,
                                        std::string_view short_form) {
  std::vector<char> chars;
  for (char c : short_form) {
    if (is_ascii_alnum(c)) chars.push_back(to_ascii_lower(c));
  }
  if (chars.empty() || window.empty()) return std::nullopt;

  // Greedy right-to-left placement of all but the first character gives the
  // rightmost feasible position for the second one.
  std::size_t word = window.size();  // one past the current word
  std::size_t pos = 0;               // one past the current char in `word`
  bool at_end = true;
  for (std::size_t k = chars.size(); k-- > 1;) {
    bool matched = false;
    while (!matched) {
      if (at_end || pos == 0) {
        if (word == 0) return std::nullopt;
        --word;
        pos = window[word].text.size();
        at_end = false;
        continue;
      }
      --pos;
      matched = to_ascii_lower(window[word].text[pos]) == chars[k];
    }
  }

  // Rightmost word starting strictly before the leftmost placed character.
  std::size_t limit;
  if (at_end) {
    limit = window.size();
  } else {
    limit = pos > 0 ? word + 1 : word;
  }
  for (std::size_t w = limit; w-- > 0;) {
    if (to_ascii_lower(window[w].text.front()) == chars[0]) {
      return Span{window[w].span.begin, window.back().span.end};
    }
  }
  return std::nullopt;
}

std::optional<Span> find_best_long_form(std::string_view window_text,
                                        std::string_view short_form) {
  std::vector<Word> words = split_words(window_text);
  return find_best_long_form(std::span<const Word>(words), short_form);
}

std::vector<ExtractionRecord> find_pairs(const Sentence &sent,
                                         ExtractionDiagnostics *diag) {
  std::vector<ExtractionRecord> out;
  std::string_view text = sent.text;
  std::vector<std::size_t> opens;
  std::vector<bool> has_child;
  std::size_t groups = 0;
  std::size_t unbalanced = 0;

  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      opens.push_back(i);
      has_child.push_back(false);
    } else if (text[i] == ')') {
      if (opens.empty()) {
        ++unbalanced;
        continue;
      }
      std::size_t open = opens.back();
      bool nested = has_child.back();
      opens.pop_back();
      has_child.pop_back();
      if (!has_child.empty()) has_child.back() = true;
      ++groups;
      if (nested) continue;
      if (auto rec = try_group(sent, open, i)) out.push_back(std::move(*rec));
    }
  }
  unbalanced += opens.size();

  if (diag != nullptr) {
    diag->paren_groups += groups;
    diag->unbalanced += unbalanced;
    diag->records += out.size();
  }
  return out;
}

std::optional<ExtractionRecord> kb_alias_pair(std::string_view canonical,
                                              std::string_view alias) {
  Sentence sent;
  sent.text = std::string(canonical) + " (" + std::string(alias) + ")";
  std::vector<ExtractionRecord> recs = find_pairs(sent);
  if (recs.empty()) return std::nullopt;
  return std::move(recs.front());
}

std::vector<ExtractionRecord> extract_document(const Document &doc,
                                               ExtractionDiagnostics *diag) {
  std::vector<ExtractionRecord> out;
  std::vector<Sentence> sentences = split_sentences(doc);
  if (diag != nullptr) {
    diag->documents += 1;
    diag->sentences += sentences.size();
  }
  for (const Sentence &s : sentences) {
    std::vector<ExtractionRecord> recs = find_pairs(s, diag);
    std::move(recs.begin(), recs.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<ExtractionRecord> extract_documents(std::span<const Document> docs,
                                                unsigned jobs,
                                                ExtractionDiagnostics *diag) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(docs.size())));
  if (jobs <= 1) {
    std::vector<ExtractionRecord> out;
    for (const Document &d : docs) {
      std::vector<ExtractionRecord> recs = extract_document(d, diag);
      std::move(recs.begin(), recs.end(), std::back_inserter(out));
    }
    return out;
  }

  std::vector<std::vector<ExtractionRecord>> parts(jobs);
  std::vector<ExtractionDiagnostics> diags(jobs);
  std::vector<std::thread> workers;
  const std::size_t per = (docs.size() + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      std::size_t b = t * per;
      std::size_t e = std::min(docs.size(), b + per);
      for (std::size_t i = b; i < e; ++i) {
        std::vector<ExtractionRecord> recs = extract_document(docs[i], &diags[t]);
        std::move(recs.begin(), recs.end(), std::back_inserter(parts[t]));
      }
    });
  }
  for (std::thread &w : workers) w.join();

  std::vector<ExtractionRecord> out;
  for (unsigned t = 0; t < jobs; ++t) {
    std::move(parts[t].begin(), parts[t].end(), std::back_inserter(out));
    if (diag != nullptr) *diag += diags[t];
  }
  return out;
}

}  // namespace acroforge
