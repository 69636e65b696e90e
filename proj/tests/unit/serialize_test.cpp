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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support/fixtures.hpp"

namespace acroforge {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() /
                 ("acroforge-serialize-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                  "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(SerializeTest, RecordRoundTrip) {
  for (const ExtractionRecord &r : fixtures::fixture_records()) {
    ExtractionRecord back = json(r).get<ExtractionRecord>();
    EXPECT_EQ(back.short_form, r.short_form);
    EXPECT_EQ(back.long_form, r.long_form);
    EXPECT_EQ(back.short_span, r.short_span);
    EXPECT_EQ(back.long_span, r.long_span);
    EXPECT_EQ(back.paren_span, r.paren_span);
    EXPECT_EQ(back.pattern, r.pattern);
    EXPECT_EQ(back.sentence.text, r.sentence.text);
    EXPECT_EQ(back.sentence.doc_id, r.sentence.doc_id);
  }
}

TEST(SerializeTest, SampleAndPredictionRoundTrip) {
  fixtures::StatsFixture f = fixtures::stats_fixture();
  for (const AdSample &s : f.samples) EXPECT_EQ(json(s).get<AdSample>(), s);
  json j = json(f.samples[0]);
  EXPECT_EQ(j["span"], json::array({j["span"][0], j["span"][1]}));
  EXPECT_EQ(j["split"], "train");

  Prediction p;
  p.sample_id = "s1";
  p.scores = {{"A:x", 0.25}, {"A:y", -1.5}};
  p.predicted = "A:x";
  EXPECT_EQ(json(p).get<Prediction>(), p);
  Prediction none;
  none.sample_id = "s2";
  EXPECT_TRUE(json(none)["predicted"].is_null());
  EXPECT_EQ(json(none).get<Prediction>(), none);

  PretrainSample ps{"Context with ELEC here", "ELEC", {13, 17}, "ELEC:x", "news"};
  EXPECT_EQ(json(ps).get<PretrainSample>(), ps);
}

TEST(DictionaryJsonTest, RoundTripIsExact) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Dictionary d = fixtures::dictionary_from_pairs(fixtures::random_pairs(rng, 200));
    d.note_dropped(static_cast<std::uint64_t>(trial));
    json j = dictionary_to_json(d);
    EXPECT_EQ(j["version"], kDictionaryFormatVersion);
    EXPECT_EQ(dictionary_from_json(json::parse(j.dump())), d);
  }
}

TEST(DictionaryJsonTest, IntegrityViolationsAreRejected) {
  Dictionary d;
  d.add("AI", "artificial intelligence", 5);
  d.add("AI", "adequate intake", 2);
  json good = dictionary_to_json(d);

  json bad_count = good;
  bad_count["integrity"]["records"] = 8;
  EXPECT_THROW(dictionary_from_json(bad_count), Error);

  json bad_freq = good;
  bad_freq["entries"][0]["clusters"][0]["frequency"] = 6;
  EXPECT_THROW(dictionary_from_json(bad_freq), Error);

  json bad_canonical = good;
  bad_canonical["entries"][0]["clusters"][0]["canonical"] = "Artificial intelligence";
  EXPECT_THROW(dictionary_from_json(bad_canonical), Error);

  json bad_version = good;
  bad_version["version"] = 99;
  EXPECT_THROW(dictionary_from_json(bad_version), Error);
}

TEST(DictionaryJsonTest, FileRoundTrip) {
  fs::path dir = temp_dir();
  Dictionary d = build_dictionary(fixtures::fixture_records());
  save_dictionary(d, dir / "dict.json");
  EXPECT_EQ(load_dictionary(dir / "dict.json"), d);
  EXPECT_THROW(load_dictionary(dir / "absent.json"), Error);
  fs::remove_all(dir);
}

TEST(NdjsonTest, LineNumbersInErrors) {
  std::istringstream in("{\"doc_id\":\"a\",\"text\":\"x\"}\n\n{\"doc_id\":\"b\"\n");
  try {
    read_ndjson<Document>(in, "docs");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("docs:3"), std::string::npos) << e.what();
  }
}

TEST(DocumentsTest, NdjsonAndText) {
  fs::path dir = temp_dir();
  write_text_file(dir / "docs.ndjson",
                  "{\"doc_id\":\"d1\",\"text\":\"One.\"}\n{\"doc_id\":\"d2\",\"text\":\"Two.\","
                  "\"source_tag\":\"bio\"}\n");
  write_text_file(dir / "plain.txt", "Plain text document.");
  std::vector<Document> docs = read_documents(dir / "docs.ndjson", true, "news");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].source_tag, "news");
  EXPECT_EQ(docs[1].source_tag, "bio");
  std::vector<Document> plain = read_documents(dir / "plain.txt", false, "web");
  ASSERT_EQ(plain.size(), 1u);
  EXPECT_EQ(plain[0].doc_id, "plain.txt");
  EXPECT_EQ(plain[0].text, "Plain text document.");
  EXPECT_EQ(read_text_file(dir / "plain.txt"), "Plain text document.");
  fs::remove_all(dir);
}

}  // namespace
}  // namespace acroforge
