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

#ifndef ACROFORGE_SERIALIZE_HPP_
#define ACROFORGE_SERIALIZE_HPP_

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "acroforge/benchgen.hpp"
#include "acroforge/corpusgen.hpp"
#include "acroforge/dict.hpp"
#include "acroforge/error.hpp"
#include "acroforge/eval.hpp"
#include "acroforge/extract.hpp"
#include "acroforge/rank.hpp"
#include "json.hpp"

namespace acroforge {

inline constexpr int kDictionaryFormatVersion = 1;

void to_json(nlohmann::json &j, const Span &s);
void from_json(const nlohmann::json &j, Span &s);
void to_json(nlohmann::json &j, const Document &d);
void from_json(const nlohmann::json &j, Document &d);
void to_json(nlohmann::json &j, const ExtractionRecord &r);
void from_json(const nlohmann::json &j, ExtractionRecord &r);
void to_json(nlohmann::json &j, const ExtractionDiagnostics &d);
void to_json(nlohmann::json &j, const NormalizationConfig &c);
void from_json(const nlohmann::json &j, NormalizationConfig &c);
void to_json(nlohmann::json &j, const PretrainSample &s);
void from_json(const nlohmann::json &j, PretrainSample &s);
void to_json(nlohmann::json &j, const CorpusStats &s);
void to_json(nlohmann::json &j, const EdMention &m);
void from_json(const nlohmann::json &j, EdMention &m);
void to_json(nlohmann::json &j, const AdSample &s);
void from_json(const nlohmann::json &j, AdSample &s);
void to_json(nlohmann::json &j, const SplitStats &s);
void to_json(nlohmann::json &j, const DatasetStats &s);
void to_json(nlohmann::json &j, const Prediction &p);
void from_json(const nlohmann::json &j, Prediction &p);
void to_json(nlohmann::json &j, const EvalReport &r);

// {version, normalization_config, integrity, entries:[{acronym, clusters:
// [{canonical, variants:[{form, count}], frequency}]}]}
nlohmann::json dictionary_to_json(const Dictionary &dict);
// Rebuilds the dictionary and checks the integrity header against it.
Dictionary dictionary_from_json(const nlohmann::json &j);

Dictionary load_dictionary(const std::filesystem::path &path);
void save_dictionary(const Dictionary &dict, const std::filesystem::path &path);

// Reads one JSON value per non-blank line; errors carry the line number.
template <typename T>
std::vector<T> read_ndjson(std::istream &in, const std::string &what = "input") {
  std::vector<T> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(nlohmann::json::parse(line).get<T>());
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kParse, what + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

template <typename T>
std::vector<T> read_ndjson_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return read_ndjson<T>(in, path.string());
}

template <typename T>
void write_ndjson(std::ostream &out, const std::vector<T> &items) {
  for (const T &item : items) out << nlohmann::json(item).dump() << '\n';
}

template <typename T>
void write_ndjson_file(const std::filesystem::path &path, const std::vector<T> &items) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  write_ndjson(out, items);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

void write_text_file(const std::filesystem::path &path, const std::string &text);
std::string read_text_file(const std::filesystem::path &path);

// Documents from an NDJSON file ({doc_id, text, source_tag}) or a plain text
// file (one document; doc_id = file name).
std::vector<Document> read_documents(const std::filesystem::path &path, bool ndjson,
                                     const std::string &source_tag);

}  // namespace acroforge

#endif  // ACROFORGE_SERIALIZE_HPP_
