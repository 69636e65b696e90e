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

#ifndef ACROFORGE_CORPUSGEN_HPP_
#define ACROFORGE_CORPUSGEN_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>

#include "acroforge/dict.hpp"
#include "acroforge/error.hpp"
#include "acroforge/extract.hpp"

namespace acroforge {

// A sentence whose defining long form was cut out, leaving only the
// acronym. The model is asked to recover gold_cluster_id.
struct PretrainSample {
  std::string context;
  std::string acronym;
  Span acronym_span;
  std::string gold_cluster_id;
  std::string source_tag;

  friend bool operator==(const PretrainSample &, const PretrainSample &) = default;
};

inline constexpr std::size_t kMinContextWords = 5;

// Throws Error with kUnresolvedPair, kLeakedLongForm or kContextTooShort.
PretrainSample make_pretrain_sample(const ExtractionRecord &rec, const Dictionary &dict);

// True when `text` still mentions `long_form`, either as a case-insensitive
// substring or as a run of normalized tokens.
bool mentions_long_form(std::string_view text, std::string_view long_form,
                        const NormalizationConfig &config = {});

struct CorpusStats {
  std::uint64_t input = 0;
  std::uint64_t emitted = 0;
  std::map<std::string, std::uint64_t> per_source_tag;
  std::map<ErrorCode, std::uint64_t> errors;
  bool aborted = false;
  std::string abort_reason;

  std::uint64_t errored() const;
};

// Writes one NDJSON line per sample to `sink`. A failing sink stops the run
// and the returned stats describe what was written so far.
CorpusStats emit_corpus(std::span<const ExtractionRecord> records, const Dictionary &dict,
                        std::ostream &sink);

}  // namespace acroforge

#endif  // ACROFORGE_CORPUSGEN_HPP_
