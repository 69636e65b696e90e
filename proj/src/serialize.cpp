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

#include "acroforge/serialize.hpp"

#include <sstream>

namespace acroforge {

using nlohmann::json;

void to_json(json &j, const Span &s) { j = json::array({s.begin, s.end}); }

void from_json(const json &j, Span &s) {
  if (!j.is_array() || j.size() != 2) {
    throw json::type_error::create(302, "span must be [begin, end]", &j);
  }
  s.begin = j[0].get<std::size_t>();
  s.end = j[1].get<std::size_t>();
  if (s.end < s.begin) throw json::other_error::create(501, "span end before begin", &j);
}

void to_json(json &j, const Document &d) {
  j = {{"doc_id", d.doc_id}, {"text", d.text}, {"source_tag", d.source_tag}};
}

void from_json(const json &j, Document &d) {
  d.doc_id = j.at("doc_id").get<std::string>();
  d.text = j.at("text").get<std::string>();
  d.source_tag = j.value("source_tag", std::string());
}

void to_json(json &j, const ExtractionRecord &r) {
  j = {{"doc_id", r.sentence.doc_id},
       {"sent_index", r.sentence.sent_index},
       {"sentence", r.sentence.text},
       {"sentence_offset", r.sentence.char_offset},
       {"source_tag", r.sentence.source_tag},
       {"short_form", r.short_form},
       {"long_form", r.long_form},
       {"short_span", r.short_span},
       {"long_span", r.long_span},
       {"paren_span", r.paren_span},
       {"pattern", pattern_name(r.pattern)}};
}

void from_json(const json &j, ExtractionRecord &r) {
  r.sentence.doc_id = j.at("doc_id").get<std::string>();
  r.sentence.sent_index = j.at("sent_index").get<std::size_t>();
  r.sentence.text = j.at("sentence").get<std::string>();
  r.sentence.char_offset = j.at("sentence_offset").get<std::size_t>();
  r.sentence.source_tag = j.value("source_tag", std::string());
  r.short_form = j.at("short_form").get<std::string>();
  r.long_form = j.at("long_form").get<std::string>();
  r.short_span = j.at("short_span").get<Span>();
  r.long_span = j.at("long_span").get<Span>();
  r.paren_span = j.at("paren_span").get<Span>();
  auto pattern = parse_pattern(j.at("pattern").get<std::string>());
  if (!pattern) throw json::other_error::create(501, "unknown pattern", &j);
  r.pattern = *pattern;
  const std::size_t n = r.sentence.text.size();
  if (r.short_span.end > n || r.long_span.end > n || r.paren_span.end > n) {
    throw json::other_error::create(501, "span outside sentence", &j);
  }
}

void to_json(json &j, const ExtractionDiagnostics &d) {
  j = {{"documents", d.documents},
       {"sentences", d.sentences},
       {"paren_groups", d.paren_groups},
       {"unbalanced", d.unbalanced},
       {"records", d.records}};
}

void to_json(json &j, const NormalizationConfig &c) {
  j = {{"stemmer", c.stemmer},
       {"lowercase", c.lowercase},
       {"strip_punctuation", c.strip_punctuation}};
}

void from_json(const json &j, NormalizationConfig &c) {
  c.stemmer = j.at("stemmer").get<std::string>();
  c.lowercase = j.at("lowercase").get<bool>();
  c.strip_punctuation = j.at("strip_punctuation").get<bool>();
}

void to_json(json &j, const PretrainSample &s) {
  j = {{"context", s.context},
       {"acronym", s.acronym},
       {"span", s.acronym_span},
       {"gold_cluster", s.gold_cluster_id},
       {"source_tag", s.source_tag}};
}

void from_json(const json &j, PretrainSample &s) {
  s.context = j.at("context").get<std::string>();
  s.acronym = j.at("acronym").get<std::string>();
  s.acronym_span = j.at("span").get<Span>();
  s.gold_cluster_id = j.at("gold_cluster").get<std::string>();
  s.source_tag = j.value("source_tag", std::string());
}

void to_json(json &j, const CorpusStats &s) {
  json errors = json::object();
  for (const auto &[code, n] : s.errors) errors[std::string(error_code_name(code))] = n;
  j = {{"input", s.input},
       {"emitted", s.emitted},
       {"errored", s.errored()},
       {"errors", errors},
       {"per_source_tag", s.per_source_tag},
       {"aborted", s.aborted}};
  if (s.aborted) j["abort_reason"] = s.abort_reason;
}

void to_json(json &j, const EdMention &m) {
  j = {{"id", m.id},           {"context", m.context}, {"span", m.mention_span},
       {"kb_id", m.kb_id},     {"kb_name", m.kb_name}, {"source_tag", m.source_tag}};
}

void from_json(const json &j, EdMention &m) {
  m.id = j.at("id").get<std::string>();
  m.context = j.at("context").get<std::string>();
  m.mention_span = j.at("span").get<Span>();
  m.kb_id = j.at("kb_id").get<std::string>();
  m.kb_name = j.value("kb_name", std::string());
  m.source_tag = j.value("source_tag", std::string());
}

void to_json(json &j, const AdSample &s) {
  j = {{"id", s.id},
       {"context", s.context},
       {"acronym", s.acronym},
       {"span", s.acronym_span},
       {"gold_cluster", s.gold_cluster_id},
       {"candidate_count", s.candidate_count},
       {"overshadowed", s.overshadowed},
       {"split", split_name(s.split)},
       {"source_tag", s.source_tag}};
}

void from_json(const json &j, AdSample &s) {
  s.id = j.at("id").get<std::string>();
  s.context = j.at("context").get<std::string>();
  s.acronym = j.at("acronym").get<std::string>();
  s.acronym_span = j.at("span").get<Span>();
  s.gold_cluster_id = j.at("gold_cluster").get<std::string>();
  s.candidate_count = j.value("candidate_count", std::size_t{0});
  s.overshadowed = j.value("overshadowed", false);
  auto split = parse_split(j.value("split", std::string("train")));
  if (!split) throw json::other_error::create(501, "unknown split", &j);
  s.split = *split;
  s.source_tag = j.value("source_tag", std::string());
}

void to_json(json &j, const SplitStats &s) {
  j = {{"samples", s.samples},
       {"unique_acronyms", s.unique_acronyms},
       {"candidates_per_acronym", s.candidates_per_acronym},
       {"candidates_per_sample", s.candidates_per_sample},
       {"overshadowed", s.overshadowed},
       {"overshadowed_ratio", s.overshadowed_ratio}};
}

void to_json(json &j, const DatasetStats &s) {
  j = {{"overall", s.overall}};
  for (const auto &[split, st] : s.per_split) j[std::string(split_name(split))] = st;
}

void to_json(json &j, const Prediction &p) {
  json scores = json::array();
  for (const auto &[cluster, score] : p.scores) {
    scores.push_back({{"cluster", cluster}, {"score", score}});
  }
  j = {{"id", p.sample_id}, {"predicted", nullptr}, {"scores", scores}};
  if (p.predicted) j["predicted"] = *p.predicted;
}

void from_json(const json &j, Prediction &p) {
  p.sample_id = j.at("id").get<std::string>();
  const json &pred = j.at("predicted");
  if (pred.is_null()) {
    p.predicted.reset();
  } else {
    p.predicted = pred.get<std::string>();
  }
  p.scores.clear();
  if (j.contains("scores")) {
    for (const json &s : j.at("scores")) {
      p.scores.emplace_back(s.at("cluster").get<std::string>(), s.at("score").get<double>());
    }
  }
}

void to_json(json &j, const EvalReport &r) {
  json per_class = json::object();
  for (const auto &[label, m] : r.per_class) {
    per_class[label] = {{"precision", m.precision},
                        {"recall", m.recall},
                        {"f1", m.f1},
                        {"support", m.support},
                        {"predicted", m.predicted}};
  }
  json chunks = json::array();
  for (const ChunkRow &c : r.chunks) {
    chunks.push_back({{"size", c.size},
                      {"mean_candidates", c.mean_candidates},
                      {"min_candidates", c.min_candidates},
                      {"max_candidates", c.max_candidates},
                      {"f1", c.f1},
                      {"accuracy", c.accuracy}});
  }
  auto opt = [](const std::optional<double> &v) { return v ? json(*v) : json(nullptr); };
  j = {{"samples", r.samples},
       {"correct", r.correct},
       {"accuracy", r.accuracy},
       {"macro_f1", r.macro_f1},
       {"per_class", per_class},
       {"chunks", chunks},
       {"breakdown",
        {{"popular", opt(r.breakdown.popular)},
         {"overshadowed", opt(r.breakdown.overshadowed)},
         {"popular_count", r.breakdown.popular_count},
         {"overshadowed_count", r.breakdown.overshadowed_count}}}};
  if (r.f1_of_averages) j["f1_of_averages"] = *r.f1_of_averages;
}

json dictionary_to_json(const Dictionary &dict) {
  json entries = json::array();
  for (const auto &[key, entry] : dict.entries()) {
    json clusters = json::array();
    for (const LongFormCluster &c : entry.clusters) {
      json variants = json::array();
      for (const auto &[form, count] : c.variants) {
        variants.push_back({{"form", form}, {"count", count}});
      }
      clusters.push_back(
          {{"canonical", c.canonical}, {"variants", variants}, {"frequency", c.frequency}});
    }
    entries.push_back({{"acronym", key}, {"clusters", clusters}});
  }
  const DictStats &st = dict.stats();
  return {{"version", kDictionaryFormatVersion},
          {"normalization_config", dict.config()},
          {"integrity",
           {{"acronyms", st.acronyms},
            {"long_forms", st.long_forms},
            {"records", st.records},
            {"dropped_degenerate", st.dropped_degenerate}}},
          {"entries", entries}};
}

Dictionary dictionary_from_json(const json &j) {
  try {
    int version = j.at("version").get<int>();
    if (version != kDictionaryFormatVersion) {
      throw Error(ErrorCode::kParse, "unsupported dictionary version " + std::to_string(version));
    }
    Dictionary dict(j.at("normalization_config").get<NormalizationConfig>());
    const json &entries = j.at("entries");
    for (const json &e : entries) {
      std::string acronym = e.at("acronym").get<std::string>();
      for (const json &c : e.at("clusters")) {
        for (const json &v : c.at("variants")) {
          dict.add(acronym, v.at("form").get<std::string>(), v.at("count").get<std::uint64_t>());
        }
      }
    }
    for (const json &e : entries) {
      std::string acronym = e.at("acronym").get<std::string>();
      for (const json &c : e.at("clusters")) {
        std::string canonical = c.at("canonical").get<std::string>();
        const LongFormCluster *cluster = dict.resolve(acronym, canonical);
        if (cluster == nullptr || cluster->canonical != canonical ||
            cluster->frequency != c.at("frequency").get<std::uint64_t>()) {
          throw Error(ErrorCode::kParse,
                      "cluster '" + canonical + "' under " + acronym + " does not match its variants");
        }
      }
    }
    const json &integrity = j.at("integrity");
    dict.note_dropped(integrity.value("dropped_degenerate", std::uint64_t{0}));
    const DictStats &st = dict.stats();
    if (st.acronyms != integrity.at("acronyms").get<std::uint64_t>() ||
        st.long_forms != integrity.at("long_forms").get<std::uint64_t>() ||
        st.records != integrity.at("records").get<std::uint64_t>()) {
      throw Error(ErrorCode::kParse, "dictionary integrity header does not match its entries");
    }
    return dict;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParse, std::string("malformed dictionary: ") + e.what());
  }
}

Dictionary load_dictionary(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return dictionary_from_json(j);
}

void save_dictionary(const Dictionary &dict, const std::filesystem::path &path) {
  write_text_file(path, dictionary_to_json(dict).dump(1) + "\n");
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Document> read_documents(const std::filesystem::path &path, bool ndjson,
                                     const std::string &source_tag) {
  if (ndjson) {
    std::vector<Document> docs = read_ndjson_file<Document>(path);
    for (Document &d : docs) {
      if (d.source_tag.empty()) d.source_tag = source_tag;
    }
    return docs;
  }
  Document d;
  d.doc_id = path.filename().string();
  d.text = read_text_file(path);
  d.source_tag = source_tag;
  return {d};
}

}  // namespace acroforge
