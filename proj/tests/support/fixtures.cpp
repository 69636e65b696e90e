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


#include "support/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fixtures {

using acroforge::AdSample;
using acroforge::Dictionary;

std::filesystem::path data_path(const std::string &name) {
  return std::filesystem::path(ACROFORGE_TEST_DATA_DIR) / name;
}

std::string echo_scorer_path() { return ACROFORGE_ECHO_SCORER; }

std::vector<LabeledSentence> labeled_sentences() {
  std::ifstream in(data_path("extraction_fixture.tsv"));
  if (!in) throw std::runtime_error("missing extraction_fixture.tsv");
  std::vector<LabeledSentence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    LabeledSentence ls;
    std::size_t tab = line.find('\t');
    ls.text = line.substr(0, tab);
    std::string labels = tab == std::string::npos ? "" : line.substr(tab + 1);
    std::size_t pos = 0;
    while (!labels.empty() && pos <= labels.size()) {
      std::size_t sep = labels.find(" || ", pos);
      std::string item = labels.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
      std::size_t eq = item.find('=');
      ls.pairs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
      if (sep == std::string::npos) break;
      pos = sep + 4;
    }
    out.push_back(std::move(ls));
  }
  return out;
}

const std::vector<Pair> &reference_pairs() {
  static const std::vector<Pair> kPairs = {
      {"ELEC", "Election Law Enforcement Commission"},
      {"ISR", "in-stent restenosis"},
      {"IL-6", "interleukin-6"},
      {"PCP", "Planar cell polarity"},
      {"DEP", "dielectrophoretic"},
      {"AQP3", "aquaporin3"},
  };
  return kPairs;
}

acroforge::Sentence as_sentence(const std::string &text, std::size_t index) {
  acroforge::Sentence s;
  s.doc_id = "fx" + std::to_string(index);
  s.text = text;
  s.source_tag = index % 2 == 0 ? "news" : "science";
  return s;
}

std::vector<acroforge::ExtractionRecord> fixture_records() {
  std::vector<acroforge::ExtractionRecord> out;
  std::vector<LabeledSentence> sentences = labeled_sentences();
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    for (auto &rec : acroforge::find_pairs(as_sentence(sentences[i].text, i))) {
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<Pair> random_pairs(std::mt19937_64 &rng, std::size_t n) {
  static const std::vector<Pair> kVocab = {
      {"CNN", "convolutional neural network"},
      {"CNN", "convolutional neural networks"},
      {"CNN", "Convolutional Neural Network"},
      {"CNN", "convolutional-neural network"},
      {"CNN", "cable news network"},
      {"CNN", "Cable News Network"},
      {"AI", "artificial intelligence"},
      {"AI", "Artificial Intelligence"},
      {"AI", "adequate intake"},
      {"AI", "Adequate Intakes"},
      {"AI", "aromatase inhibitor"},
      {"ai", "artificial intelligence"},
      {"PCR", "polymerase chain reaction"},
      {"PCR", "polymerase chain reactions"},
      {"PCR", "patient care record"},
      {"ER", "emergency room"},
      {"ER", "emergency rooms"},
      {"ER", "estrogen receptor"},
      {"ER", "endoplasmic reticulum"},
      {"IL-6", "interleukin-6"},
      {"IL-6", "interleukin 6"},
      {"IL-6", "Interleukin-6"},
  };
  std::uniform_int_distribution<std::size_t> pick(0, kVocab.size() - 1);
  std::vector<Pair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(kVocab[pick(rng)]);
  return out;
}

std::pair<std::string, std::string> fuzz_window(std::mt19937_64 &rng) {
  static const std::string kWordChars = "abcdeABCDE12-";
  static const std::string kSfChars = "abcABC1-";
  std::uniform_int_distribution<int> n_words(0, 8);
  std::uniform_int_distribution<int> word_len(1, 7);
  std::uniform_int_distribution<int> sf_len(1, 5);
  std::uniform_int_distribution<int> gap(1, 2);
  std::uniform_int_distribution<std::size_t> wc(0, kWordChars.size() - 1);
  std::uniform_int_distribution<std::size_t> sc(0, kSfChars.size() - 1);
  std::string window;
  int nw = n_words(rng);
  for (int w = 0; w < nw; ++w) {
    if (w > 0) window.append(static_cast<std::size_t>(gap(rng)), ' ');
    int len = word_len(rng);
    for (int i = 0; i < len; ++i) window.push_back(kWordChars[wc(rng)]);
  }
  std::string sf;
  int len = sf_len(rng);
  for (int i = 0; i < len; ++i) sf.push_back(kSfChars[sc(rng)]);
  return {window, sf};
}

Dictionary dictionary_from_pairs(const std::vector<Pair> &pairs) {
  Dictionary d;
  for (const auto &[acr, lf] : pairs) d.add(acr, lf);
  return d;
}

namespace {

AdSample sample_for(const Dictionary &dict, const std::string &id, const std::string &acronym,
                    const std::string &long_form) {
  AdSample s;
  s.id = id;
  s.context = "Reviewers asked about " + acronym + " in the second cohort.";
  s.acronym = acronym;
  std::size_t at = s.context.find(acronym);
  s.acronym_span = {at, at + acronym.size()};
  const acroforge::LongFormCluster *c = dict.resolve(acronym, long_form);
  if (c == nullptr) throw std::runtime_error("fixture pair not in dictionary: " + long_form);
  s.gold_cluster_id = c->id;
  s.source_tag = "synthetic";
  return s;
}

}  // namespace

StatsFixture stats_fixture() {
  StatsFixture f;
  f.dict.add("AI", "artificial intelligence", 5);
  f.dict.add("AI", "adequate intake", 2);
  f.dict.add("AI", "aromatase inhibitor", 1);
  f.dict.add("CBF", "cerebral blood flow", 4);
  f.dict.add("PCR", "polymerase chain reaction", 6);
  f.dict.add("PCR", "patient care record", 3);
  f.dict.add("ER", "emergency room", 3);
  f.dict.add("ER", "estrogen receptor", 3);

  struct Row {
    const char *acronym;
    const char *long_form;
    int n;
    acroforge::Split split;
  };
  const Row rows[] = {
      {"AI", "artificial intelligence", 3, acroforge::Split::kTrain},
      {"AI", "adequate intake", 2, acroforge::Split::kTrain},
      {"AI", "aromatase inhibitor", 1, acroforge::Split::kTrain},
      {"CBF", "cerebral blood flow", 4, acroforge::Split::kTrain},
      {"PCR", "polymerase chain reaction", 3, acroforge::Split::kValid},
      {"PCR", "patient care record", 2, acroforge::Split::kValid},
      {"ER", "emergency room", 2, acroforge::Split::kTest},
      {"ER", "estrogen receptor", 3, acroforge::Split::kTest},
  };
  int next = 0;
  for (const Row &r : rows) {
    for (int i = 0; i < r.n; ++i) {
      char id[16];
      std::snprintf(id, sizeof(id), "s%02d", next++);
      AdSample s = sample_for(f.dict, id, r.acronym, r.long_form);
      s.split = r.split;
      f.samples.push_back(std::move(s));
    }
  }
  acroforge::freeze(f.samples, f.dict);
  return f;
}

std::vector<AdSample> samples_with_masses(const std::map<std::string, int> &masses) {
  std::vector<AdSample> out;
  for (const auto &[acronym, n] : masses) {
    for (int i = 0; i < n; ++i) {
      AdSample s;
      s.id = acronym + "-" + std::to_string(i);
      s.context = acronym + " appears here";
      s.acronym = acronym;
      s.acronym_span = {0, acronym.size()};
      s.gold_cluster_id = acronym + ":x";
      s.candidate_count = 1;
      out.push_back(std::move(s));
    }
  }
  return out;
}

RandomBench random_bench(std::mt19937_64 &rng) {
  RandomBench b;
  std::uniform_int_distribution<int> n_acr(3, 10);
  std::uniform_int_distribution<int> n_clusters(1, 8);
  std::uniform_int_distribution<int> freq(1, 20);
  std::vector<std::vector<std::string>> forms;
  std::vector<std::string> acronyms;
  int na = n_acr(rng);
  for (int a = 0; a < na; ++a) {
    std::string acr = "Q" + std::string(1, static_cast<char>('A' + a)) + "X";
    acronyms.push_back(acr);
    forms.emplace_back();
    int nc = n_clusters(rng);
    b.max_entry = std::max<std::size_t>(b.max_entry, static_cast<std::size_t>(nc));
    for (int c = 0; c < nc; ++c) {
      std::string lf = "sense" + std::to_string(c) + " of " + acr;
      b.dict.add(acr, lf, static_cast<std::uint64_t>(freq(rng)));
      forms.back().push_back(lf);
    }
  }
  std::uniform_int_distribution<std::size_t> pick_acr(0, acronyms.size() - 1);
  for (int i = 0; i < 50; ++i) {
    std::size_t a = pick_acr(rng);
    std::uniform_int_distribution<std::size_t> pick_lf(0, forms[a].size() - 1);
    b.samples.push_back(
        sample_for(b.dict, "r" + std::to_string(i), acronyms[a], forms[a][pick_lf(rng)]));
  }
  acroforge::freeze(b.samples, b.dict);
  return b;
}

}  // namespace fixtures
