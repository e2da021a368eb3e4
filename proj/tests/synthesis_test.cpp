// Copyright 2026 The otut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "otut/dataset.hpp"
#include "otut/edits.hpp"
#include "otut/encoder_factory.hpp"
#include "otut/rng.hpp"
#include "otut/sentence_split.hpp"
#include "otut/synthesis.hpp"
#include "otut/token_filter.hpp"
#include "otut/tokenizer.hpp"
#include "testutil.hpp"

using namespace otut;

namespace {

std::vector<SubtitlePair> clean_corpus(std::size_t count, std::uint64_t seed) {
  testutil::FixtureOptions opt;
  opt.count = count;
  opt.seed = seed;
  return testutil::fixture_corpus(opt);
}

EncoderBundle reference_bundle(const std::vector<SubtitlePair>& corpus) {
  return make_bundle(EncoderConfig{}, corpus);
}

std::multiset<std::string> bag(const std::vector<std::string>& tokens) {
  return std::multiset<std::string>(tokens.begin(), tokens.end());
}

bool is_sub_bag(const std::multiset<std::string>& small,
                const std::multiset<std::string>& big) {
  for (const std::string& t : small) {
    if (small.count(t) > big.count(t)) return false;
  }
  return true;
}

// Re-applies insert edits step by step, checking every inserted token
// against the full keep-filter in the context it lands in.
void check_insertions_in_context(const LabeledSample& sample) {
  TokenSequence seq = tokenize(sample.original_source, "en");
  for (const EditRecord& edit : sample.edits) {
    REQUIRE(edit.kind == EditKind::insert_token);
    REQUIRE(edit.position <= seq.tokens.size());
    std::optional<std::string> prev, next;
    if (edit.position > 0) prev = seq.tokens[edit.position - 1];
    if (edit.position < seq.tokens.size()) next = seq.tokens[edit.position];
    TokenDecision d = token_filter(edit.payload, prev, next);
    CHECK(d.keep);
    seq.tokens.insert(seq.tokens.begin() +
                          static_cast<std::ptrdiff_t>(edit.position),
                      edit.payload);
  }
  CHECK(detokenize(seq) == sample.pair.source_text);
}

}  // namespace

TEST_CASE("synthesis config validates fractions and parses strictly") {
  SynthesisConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  SynthesisConfig bad = cfg;
  bad.ne_fraction = 0.5;  // mix no longer sums to 1
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.max_token_edits = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.percentile_drop_fraction = 1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  SynthesisConfig again = synthesis_config_from_json(to_json(cfg));
  CHECK(to_json(again) == to_json(cfg));
  CHECK_THROWS_AS(synthesis_config_from_json({{"fractions", 1}}),
                  std::invalid_argument);
}

TEST_CASE("subtle under-translation inserts one to five plausible tokens") {
  auto corpus = clean_corpus(60, 301);
  EncoderBundle bundle = reference_bundle(corpus);
  SynthesisConfig cfg;
  int produced = 0;
  for (const SubtitlePair& pair : corpus) {
    Rng rng = Rng(9).child("ut/" + pair.id);
    auto sample = make_ut_subtle(pair, bundle, cfg, rng);
    if (!sample) continue;
    ++produced;
    CHECK(sample->label == ClassLabel::UT);
    CHECK(sample->granularity == Granularity::subtle);
    CHECK(sample->pair.target_text == pair.target_text);
    CHECK(sample->original_source == pair.source_text);
    CHECK(sample->pair.id == pair.id);

    auto before = tokenize(pair.source_text, "en").tokens;
    auto after = tokenize(sample->pair.source_text, "en").tokens;
    std::ptrdiff_t delta = static_cast<std::ptrdiff_t>(after.size()) -
                           static_cast<std::ptrdiff_t>(before.size());
    CHECK(delta >= 1);
    CHECK(delta <= cfg.max_token_edits);
    CHECK(static_cast<std::size_t>(delta) == sample->edits.size());
    CHECK(is_sub_bag(bag(before), bag(after)));

    check_insertions_in_context(*sample);
    CHECK(replay_edits(sample->original_source, sample->edits, "en") ==
          sample->pair.source_text);
    CHECK(sample->similarity_to_original >= -1.0);
    CHECK(sample->similarity_to_original <= 1.0);

    // Same pair, same stream position: bit-identical output.
    Rng replay_rng = Rng(9).child("ut/" + pair.id);
    auto again = make_ut_subtle(pair, bundle, cfg, replay_rng);
    REQUIRE(again.has_value());
    CHECK(again->pair.source_text == sample->pair.source_text);
    CHECK(again->edits == sample->edits);
  }
  // The template corpus is benign; generation should almost always work.
  CHECK(produced > 50);
}

TEST_CASE("subtle over-translation drops one to five tokens") {
  auto corpus = clean_corpus(60, 302);
  EncoderBundle bundle = reference_bundle(corpus);
  SynthesisConfig cfg;
  int produced = 0;
  for (const SubtitlePair& pair : corpus) {
    Rng rng = Rng(11).child("ot/" + pair.id);
    auto sample = make_ot_subtle(pair, bundle, cfg, rng);
    if (!sample) continue;
    ++produced;
    CHECK(sample->label == ClassLabel::OT);
    CHECK(sample->granularity == Granularity::subtle);
    CHECK(sample->pair.target_text == pair.target_text);

    auto before = tokenize(pair.source_text, "en").tokens;
    auto after = tokenize(sample->pair.source_text, "en").tokens;
    std::ptrdiff_t delta = static_cast<std::ptrdiff_t>(after.size()) -
                           static_cast<std::ptrdiff_t>(before.size());
    CHECK(delta <= -1);
    CHECK(delta >= -cfg.max_token_edits);
    CHECK(static_cast<std::size_t>(-delta) == sample->edits.size());
    for (const EditRecord& edit : sample->edits) {
      CHECK(edit.kind == EditKind::omit_token);
    }
    CHECK(is_sub_bag(bag(after), bag(before)));
    CHECK(replay_edits(sample->original_source, sample->edits, "en") ==
          sample->pair.source_text);
  }
  CHECK(produced > 50);
}

TEST_CASE("gross edits move whole sentences and verify the resplit") {
  auto corpus = clean_corpus(80, 303);
  EncoderBundle bundle = reference_bundle(corpus);

  SubtitlePair single, twice;
  for (const SubtitlePair& pair : corpus) {
    std::size_t n = split_sentences(pair.source_text).size();
    if (n == 1 && single.id.empty()) single = pair;
    if (n == 2 && twice.id.empty()) twice = pair;
  }
  REQUIRE_FALSE(single.id.empty());
  REQUIRE_FALSE(twice.id.empty());

  Rng rng(77);
  // Removing a sentence needs at least two of them.
  CHECK_FALSE(make_gross(single, GrossDirection::ot, std::nullopt, rng)
                  .has_value());

  auto ot = make_gross(twice, GrossDirection::ot, std::nullopt, rng);
  REQUIRE(ot.has_value());
  CHECK(ot->label == ClassLabel::OT);
  CHECK(ot->granularity == Granularity::gross);
  CHECK(split_sentences(ot->pair.source_text).size() == 1);
  REQUIRE(ot->edits.size() == 1);
  CHECK(ot->edits[0].kind == EditKind::remove_sentence);
  CHECK(replay_edits(ot->original_source, ot->edits, "en") ==
        ot->pair.source_text);
  CHECK(ot->pair.target_text == twice.target_text);

  std::string donor = "The gentle doctor paints that bridge.";
  auto ut = make_gross(single, GrossDirection::ut, donor, rng);
  REQUIRE(ut.has_value());
  CHECK(ut->label == ClassLabel::UT);
  auto sentences = split_sentences(ut->pair.source_text);
  CHECK(sentences.size() == 2);
  CHECK(std::find(sentences.begin(), sentences.end(), donor) !=
        sentences.end());
  REQUIRE(ut->edits.size() == 1);
  CHECK(ut->edits[0].kind == EditKind::add_sentence);
  CHECK(ut->edits[0].payload == donor);
  CHECK(replay_edits(ut->original_source, ut->edits, "en") ==
        ut->pair.source_text);

  CHECK_THROWS_AS(make_gross(single, GrossDirection::ut, std::nullopt, rng),
                  std::invalid_argument);
}

TEST_CASE("assembled datasets hit the class and granularity quotas exactly") {
  auto corpus = clean_corpus(700, 304);
  EncoderBundle bundle = reference_bundle(corpus);
  SynthesisConfig cfg;
  cfg.sample_count = 400;
  cfg.seed = 5;
  AssembledDataset ds = assemble_dataset(corpus, bundle, cfg, 1);

  std::vector<LabeledSample> all = ds.train;
  all.insert(all.end(), ds.validation.begin(), ds.validation.end());
  REQUIRE(all.size() == 400);

  std::map<ClassLabel, std::size_t> by_class;
  std::map<Granularity, std::size_t> by_gran;
  std::map<std::pair<ClassLabel, Granularity>, std::size_t> cross;
  std::set<std::string> ids;
  for (const LabeledSample& s : all) {
    ++by_class[s.label];
    ++by_gran[s.granularity];
    ++cross[{s.label, s.granularity}];
    CHECK(ids.insert(s.pair.id).second);
  }
  // llround splits of 400: 120 each error class, 160 untouched, and
  // llround(0.83 * 120) = 100 subtle per error class.
  CHECK(by_class[ClassLabel::OT] == 120);
  CHECK(by_class[ClassLabel::UT] == 120);
  CHECK(by_class[ClassLabel::NE] == 160);
  CHECK((cross[{ClassLabel::OT, Granularity::subtle}]) == 100);
  CHECK((cross[{ClassLabel::OT, Granularity::gross}]) == 20);
  CHECK((cross[{ClassLabel::UT, Granularity::subtle}]) == 100);
  CHECK((cross[{ClassLabel::UT, Granularity::gross}]) == 20);
  CHECK(by_gran[Granularity::none] == 160);

  // Stratified 80-20 split, rounded within each class.
  CHECK(ds.train.size() == 320);
  CHECK(ds.validation.size() == 80);
  std::map<ClassLabel, std::size_t> train_class;
  for (const LabeledSample& s : ds.train) ++train_class[s.label];
  CHECK(train_class[ClassLabel::NE] == 128);
  CHECK(train_class[ClassLabel::OT] == 96);
  CHECK(train_class[ClassLabel::UT] == 96);

  // Every sample stays anchored to its corpus pair: target untouched,
  // edits replay from the preserved original.
  std::map<std::string, const SubtitlePair*> by_id;
  for (const SubtitlePair& pair : corpus) by_id[pair.id] = &pair;
  for (const LabeledSample& s : all) {
    auto it = by_id.find(s.pair.id);
    REQUIRE(it != by_id.end());
    CHECK(s.pair.target_text == it->second->target_text);
    CHECK(s.original_source == it->second->source_text);
    if (s.label == ClassLabel::NE) {
      CHECK(s.edits.empty());
      CHECK(s.pair.source_text == it->second->source_text);
      CHECK(s.granularity == Granularity::none);
      CHECK(s.similarity_to_original == doctest::Approx(1.0));
    } else {
      CHECK_FALSE(s.edits.empty());
      CHECK(replay_edits(s.original_source, s.edits, "en") ==
            s.pair.source_text);
      CHECK(s.similarity_to_original >= -1.0);
      CHECK(s.similarity_to_original <= 1.0);
    }
  }

  // The manifest tallies must match what the dataset actually holds.
  CHECK(ds.manifest["class_counts"]["NE"] == 160);
  CHECK(ds.manifest["class_counts"]["OT"] == 120);
  CHECK(ds.manifest["class_counts"]["UT"] == 120);
  CHECK(ds.manifest["granularity_counts"]["subtle"] == 200);
  CHECK(ds.manifest["granularity_counts"]["gross"] == 40);
  CHECK(ds.manifest["granularity_counts"]["none"] == 160);
  CHECK(ds.manifest["train_samples"] == 320);
  CHECK(ds.manifest["validation_samples"] == 80);
}

TEST_CASE("assembly is deterministic and worker-count independent") {
  auto corpus = clean_corpus(300, 305);
  EncoderBundle bundle = reference_bundle(corpus);
  SynthesisConfig cfg;
  cfg.sample_count = 150;
  cfg.seed = 21;

  AssembledDataset a = assemble_dataset(corpus, bundle, cfg, 1);
  AssembledDataset b = assemble_dataset(corpus, bundle, cfg, 1);
  AssembledDataset c = assemble_dataset(corpus, bundle, cfg, 4);

  auto dump = [](const AssembledDataset& ds) {
    std::string out = ds.manifest.dump();
    for (const auto& s : ds.train) out += "\n" + sample_to_json(s).dump();
    for (const auto& s : ds.validation) out += "\n" + sample_to_json(s).dump();
    return out;
  };
  CHECK(dump(a) == dump(b));
  CHECK(dump(a) == dump(c));

  SynthesisConfig other = cfg;
  other.seed = 22;
  CHECK(dump(assemble_dataset(corpus, bundle, other, 1)) != dump(a));
}

TEST_CASE("assembly reports exhaustion with an achievable estimate") {
  auto corpus = clean_corpus(12, 306);
  EncoderBundle bundle = reference_bundle(corpus);
  SynthesisConfig cfg;
  cfg.sample_count = 500;
  try {
    assemble_dataset(corpus, bundle, cfg, 1);
    FAIL("expected exhaustion");
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("corpus exhausted") != std::string::npos);
    CHECK(msg.find("achievable") != std::string::npos);
  }
}

TEST_CASE("sample json round-trips and omits similarity for clean pairs") {
  auto corpus = clean_corpus(30, 307);
  EncoderBundle bundle = reference_bundle(corpus);
  SynthesisConfig cfg;
  cfg.sample_count = 20;
  AssembledDataset ds = assemble_dataset(corpus, bundle, cfg, 1);

  for (const LabeledSample& s : ds.train) {
    nlohmann::ordered_json row = sample_to_json(s);
    CHECK(row.contains("sim") == (s.label != ClassLabel::NE));
    LabeledSample back = sample_from_json(row);
    CHECK(back.pair.id == s.pair.id);
    CHECK(back.pair.source_text == s.pair.source_text);
    CHECK(back.pair.target_text == s.pair.target_text);
    CHECK(back.pair.target_lang == s.pair.target_lang);
    CHECK(back.label == s.label);
    CHECK(back.granularity == s.granularity);
    CHECK(back.edits == s.edits);
    CHECK(back.original_source == s.original_source);
    CHECK(back.similarity_to_original ==
          doctest::Approx(s.similarity_to_original));
  }
}

TEST_CASE("sample jsonl files round-trip and name bad lines") {
  auto corpus = clean_corpus(40, 308);
  EncoderBundle bundle = reference_bundle(corpus);
  SynthesisConfig cfg;
  cfg.sample_count = 24;
  AssembledDataset ds = assemble_dataset(corpus, bundle, cfg, 1);

  auto dir = testutil::make_temp_dir("samples");
  std::string path = (dir / "train.jsonl").string();
  write_samples_jsonl(path, ds.train);
  std::vector<LabeledSample> back = read_samples_jsonl(path);
  REQUIRE(back.size() == ds.train.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(sample_to_json(back[i]) == sample_to_json(ds.train[i]));
  }

  std::string bad = (dir / "bad.jsonl").string();
  {
    std::ofstream out(bad);
    out << sample_to_json(ds.train[0]).dump() << "\n";
    out << "{\"id\": \"x\"}\n";
  }
  try {
    read_samples_jsonl(bad);
    FAIL("expected a throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(bad + ":2") != std::string::npos);
  }
  testutil::remove_dir(dir);
}
