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

#ifndef ACROFORGE_TEXT_HPP_
#define ACROFORGE_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace acroforge {

// Half-open byte range [begin, end) into a UTF-8 string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin >= end; }
  std::string_view slice(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
  bool overlaps(const Span &other) const {
    return begin < other.end && other.begin < end;
  }

  friend bool operator==(const Span &, const Span &) = default;
};

// A whitespace-delimited word and where it sits in its source text.
struct Word {
  std::string_view text;
  Span span;
};

// ASCII-only classification. Bytes of multi-byte UTF-8 sequences are
// neither letters, digits nor whitespace.
inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_alnum(char c) { return is_ascii_alpha(c) || is_ascii_digit(c); }
inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
inline char to_ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string ascii_lower(std::string_view text);

// Splits on ASCII whitespace, keeping byte offsets.
std::vector<Word> split_words(std::string_view text);

// Trims leading and trailing ASCII whitespace.
std::string_view trim(std::string_view text);

// Lowercases and splits on every non-alphanumeric byte.
std::vector<std::string> alnum_tokens(std::string_view text);

// Unicode NFC. Invalid UTF-8 is passed through unchanged.
std::string nfc(std::string_view text);

bool is_valid_utf8(std::string_view text);

}  // namespace acroforge

#endif  // ACROFORGE_TEXT_HPP_
