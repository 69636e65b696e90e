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

#ifndef ACROFORGE_EXTRACT_HPP_
#define ACROFORGE_EXTRACT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acroforge/text.hpp"

namespace acroforge {

struct Document {
  std::string doc_id;
  std::string text;
  std::string source_tag;
};

struct Sentence {
  std::string doc_id;
  std::size_t sent_index = 0;
  std::string text;
  // Byte offset of the sentence start in the document text.
  std::size_t char_offset = 0;
  std::string source_tag;
};

enum class Pattern {
  kLongParenShort,  // long form ( acronym )
  kShortParenLong,  // acronym ( long form )
};

std::string_view pattern_name(Pattern pattern);
std::optional<Pattern> parse_pattern(std::string_view name);

// One (acronym, long form) hit. All spans index into sentence.text.
struct ExtractionRecord {
  std::string short_form;
  std::string long_form;
  Sentence sentence;
  Span short_span;
  Span long_span;
  // From the opening to the closing parenthesis, inclusive.
  Span paren_span;
  Pattern pattern = Pattern::kLongParenShort;
};

struct ExtractionDiagnostics {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t paren_groups = 0;
  std::size_t unbalanced = 0;
  std::size_t records = 0;

  ExtractionDiagnostics &operator+=(const ExtractionDiagnostics &other);
};

// Regex-free rule segmenter: a sentence ends at [.!?] (plus closing quotes
// or brackets) followed by whitespace, unless the terminated token is a
// known abbreviation or a single capital initial, or the next word starts
// lowercase. Blank lines always end a sentence.
std::vector<Sentence> split_sentences(const Document &doc);

// Length 2..10 characters, at most two words, at least one letter, and an
// alphanumeric first character.
bool valid_short_form(std::string_view token_text);

// min(|A| + 5, 2 |A|), |A| counted in code points.
std::size_t long_form_window_cap(std::string_view short_form);

// Shortest word-aligned suffix of `window` in which the alphanumeric
// characters of `short_form` occur in order (case-insensitive) with the
// first one on the first character of the suffix. Returned span indexes the
// text the words were cut from.
std::optional<Span> find_best_long_form(std::span<const Word> window,
                                        std::string_view short_form);

// Convenience overload: the span indexes `window_text`.
std::optional<Span> find_best_long_form(std::string_view window_text,
                                        std::string_view short_form);

std::vector<ExtractionRecord> find_pairs(const Sentence &sent,
                                         ExtractionDiagnostics *diag = nullptr);

// Runs the extractor on the synthesized text "canonical (alias)".
std::optional<ExtractionRecord> kb_alias_pair(std::string_view canonical,
                                              std::string_view alias);

std::vector<ExtractionRecord> extract_document(const Document &doc,
                                               ExtractionDiagnostics *diag = nullptr);

// Splits the documents over `jobs` worker threads; output order equals the
// sequential order.
std::vector<ExtractionRecord> extract_documents(std::span<const Document> docs,
                                                unsigned jobs,
                                                ExtractionDiagnostics *diag = nullptr);

}  // namespace acroforge

#endif  // ACROFORGE_EXTRACT_HPP_
