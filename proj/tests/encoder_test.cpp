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

#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "otut/embedding.hpp"
#include "otut/encoder_adapters.hpp"
#include "otut/encoder_factory.hpp"
#include "otut/encoders.hpp"
#include "otut/hash.hpp"
#include "otut/reference_backends.hpp"
#include "otut/rng.hpp"
#include "otut/seed_filter.hpp"
#include "otut/tokenizer.hpp"
#include "testutil.hpp"

using namespace otut;

TEST_CASE("cosine is symmetric, scale-invariant, and rejects zeros") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Vector u(8), v(8);
    for (int i = 0; i < 8; ++i) {
      u[i] = rng.uniform_symmetric();
      v[i] = rng.uniform_symmetric();
    }
    double c = cosine(u, v);
    CHECK(c == doctest::Approx(cosine(v, u)).epsilon(1e-12));
    CHECK(c >= -1.0);
    CHECK(c <= 1.0);
    double alpha = 0.001 + 10.0 * rng.uniform_real01();
    CHECK(cosine(alpha * u, v) == doctest::Approx(c).epsilon(1e-9));
  }
  Vector z = Vector::Zero(8), one = Vector::Ones(8);
  CHECK_THROWS_AS(cosine(z, one), std::invalid_argument);
  CHECK_THROWS_AS(cosine(one, Vector::Ones(7)), std::invalid_argument);
  CHECK(cosine(one, one) == doctest::Approx(1.0));
  CHECK(cosine(one, -one) == doctest::Approx(-1.0));
}

TEST_CASE("hashed token vectors are deterministic and token-sensitive") {
  Vector a = hashed_token_vector("garden", 1, 64);
  CHECK(a == hashed_token_vector("garden", 1, 64));
  CHECK(a != hashed_token_vector("harbor", 1, 64));
  CHECK(a != hashed_token_vector("garden", 2, 64));
  CHECK(a.size() == 64);
  CHECK(a.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(hashed_token_vector("x", 1, 0), std::invalid_argument);
}

TEST_CASE("unigram mask filler ranks by relative frequency") {
  std::map<std::string, std::uint64_t> counts = {{"the", 5}, {"cat", 2}};
  UnigramMaskFiller filler(counts);
  TokenSequence seq = tokenize("the cat sat", "en");
  auto top = filler.fill_mask(seq, 1, 10);
  REQUIRE(top.size() == 2);
  CHECK(top[0].token == "the");
  CHECK(top[0].score == doctest::Approx(5.0 / 7.0));
  CHECK(top[1].token == "cat");
  CHECK(top[1].score == doctest::Approx(2.0 / 7.0));

  CHECK(filler.fill_mask(seq, 0, 1).size() == 1);
  CHECK_THROWS_AS(filler.fill_mask(seq, 4, 10), std::out_of_range);
  CHECK(filler.subword_marker() == "##");
}

TEST_CASE("mask suggestions come back sorted by non-increasing score") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<std::string, std::uint64_t> counts;
    std::size_t vocab = 2 + rng.uniform_index(50);
    for (std::size_t i = 0; i < vocab; ++i) {
      counts["w" + std::to_string(i)] = rng.uniform_index(20);
    }
    UnigramMaskFiller filler(counts);
    TokenSequence seq = tokenize("a b c d", "en");
    auto top = filler.fill_mask(seq, 2, 1 + rng.uniform_index(vocab + 5));
    for (std::size_t i = 1; i < top.size(); ++i) {
      CHECK(top[i - 1].score >= top[i].score);
    }
    for (const auto& s : top) CHECK(s.score > 0.0);
  }
}

TEST_CASE("unigram filler built from sources counts source tokens only") {
  SubtitlePair p1, p2;
  p1.source_text = "the garden the harbor";
  p1.target_text = "zzz zzz zzz";
  p2.source_text = "the bridge";
  p2.target_text = "qqq";
  UnigramMaskFiller filler = UnigramMaskFiller::from_sources({p1, p2});
  TokenSequence seq = tokenize("x y", "en");
  auto top = filler.fill_mask(seq, 0, 1);
  REQUIRE(top.size() == 1);
  CHECK(top[0].token == "the");  // 3 of 6 source tokens
  CHECK(top[0].score == doctest::Approx(0.5));
}

TEST_CASE("sentence vectors are length-weighted means of token vectors") {
  HashedWordVectors wv(9, 32);
  TokenSequence a = tokenize("the quiet captain", "en");
  TokenSequence b = tokenize("visits that harbor now", "en");
  TokenSequence ab = tokenize("the quiet captain visits that harbor now", "en");
  Vector expect = (3.0 * sentence_vector(a, wv) + 4.0 * sentence_vector(b, wv)) / 7.0;
  Vector got = sentence_vector(ab, wv);
  CHECK((got - expect).norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(sentence_vector(TokenSequence{}, wv), std::invalid_argument);
  CHECK(wv.vector("garden") == wv.vector("garden"));
  CHECK(wv.dim() == 32);
}

TEST_CASE("cross-lingual reference encoder is order-invariant") {
  HashedCrossLingual xsim(4, 64);
  Vector u = xsim.encode("the captain visits the harbor .", "en");
  Vector v = xsim.encode("harbor the visits captain the .", "de");
  CHECK(cosine(u, v) == doctest::Approx(1.0).epsilon(1e-12));
  Vector w = xsim.encode("zebra quartz fjord sphinx glyph", "de");
  CHECK(cosine(u, w) < 0.5);
}

TEST_CASE("contextual reference encoder lays out both sides with markers") {
  WindowedHashContextual ctx(2, 48, 64, 2);
  TokenSequence src = tokenize("the captain visits", "en");
  TokenSequence tgt = tokenize("der kapitaen", "de");
  Matrix m = ctx.encode_pair(src, tgt);
  CHECK(m.rows() == 3 + 2 + 3);  // src + tgt + bos/sep/eos
  CHECK(m.cols() == 48);
  CHECK(ctx.marker_slots() == 3);
  CHECK(ctx.capacity() == 64);
  // Bit-for-bit determinism across instances with the same seed.
  WindowedHashContextual ctx2(2, 48, 64, 2);
  CHECK(m == ctx2.encode_pair(src, tgt));
  // Same token in different contexts embeds differently, identity still
  // dominates: its row stays closer to itself than to other tokens' rows.
  TokenSequence src2 = tokenize("a gentle doctor visits", "en");
  Matrix m2 = ctx.encode_pair(src2, tgt);
  Vector visits_a = m.row(3), visits_b = m2.row(4);
  CHECK(visits_a != visits_b);
  CHECK(cosine(visits_a, visits_b) > 0.5);

  CHECK_THROWS_AS(ctx.encode_pair(TokenSequence{}, tgt), std::invalid_argument);
  TokenSequence huge;
  huge.tokens.assign(70, "x");
  CHECK_THROWS_AS(ctx.encode_pair(huge, tgt), std::length_error);
}

TEST_CASE("encoder fingerprint hashes the configuration only") {
  EncoderConfig cfg;
  cfg.kind = "reference";
  cfg.dim = 64;
  cfg.seed = 0;
  std::string fp = encoder_fingerprint(cfg);
  CHECK(fp == hex64(fnv1a64(to_json(cfg).dump())));
  CHECK(fp.size() == 16);
  CHECK(fp == encoder_fingerprint(cfg));

  EncoderConfig other = cfg;
  other.dim = 32;
  CHECK(encoder_fingerprint(other) != fp);

  // The corpus handed to make_bundle must not bleed into the fingerprint.
  testutil::FixtureOptions opt;
  opt.count = 8;
  EncoderBundle b1 = make_bundle(cfg, testutil::fixture_corpus(opt));
  opt.seed = 777;
  EncoderBundle b2 = make_bundle(cfg, testutil::fixture_corpus(opt));
  CHECK(b1.fingerprint == fp);
  CHECK(b2.fingerprint == fp);
  REQUIRE(b1.mask_filler);
  REQUIRE(b1.word_vectors);
  REQUIRE(b1.xsim);
  REQUIRE(b1.contextual);
  CHECK(b1.contextual->capacity() == 512);
}

TEST_CASE("encoder config json parsing is strict and round-trips") {
  nlohmann::json block = {{"kind", "reference"}, {"dim", 32}, {"seed", 7}};
  EncoderConfig cfg = encoder_config_from_json(block);
  CHECK(cfg.dim == 32);
  CHECK(cfg.seed == 7);
  CHECK(cfg.capacity == 512);
  EncoderConfig again = encoder_config_from_json(to_json(cfg));
  CHECK(to_json(again) == to_json(cfg));
  nlohmann::json bad = {{"kind", "reference"}, {"dimension", 32}};
  CHECK_THROWS_AS(encoder_config_from_json(bad), std::invalid_argument);
}

TEST_CASE("file word vectors serve stored rows and hash the rest") {
  auto dir = testutil::make_temp_dir("wv");
  std::string path = (dir / "vecs.txt").string();
  {
    std::ofstream out(path);
    out << "garden 1 0 0 0\n";
    out << "harbor 0 1 0 0\n";
  }
  FileWordVectors wv(path, 123);
  CHECK(wv.dim() == 4);
  CHECK(wv.vector("garden")[0] == doctest::Approx(1.0));
  CHECK(wv.vector("harbor")[1] == doctest::Approx(1.0));
  // Tokens missing from the file behave exactly as under the hashed
  // reference backend constructed with the same seed.
  Vector fallback = wv.vector("unknown-token");
  CHECK(fallback == HashedWordVectors(123, 4).vector("unknown-token"));

  std::string bad = (dir / "bad.txt").string();
  {
    std::ofstream out(bad);
    out << "garden 1 0\n";
    out << "harbor 1 0 0\n";
  }
  CHECK_THROWS_AS(FileWordVectors(bad, 0), std::runtime_error);
  testutil::remove_dir(dir);
}

TEST_CASE("file sentence vectors key on language and joined tokens") {
  auto dir = testutil::make_temp_dir("sv");
  std::string path = (dir / "sents.jsonl").string();
  {
    std::ofstream out(path);
    out << R"({"text":"Hello there.","lang":"en","vec":[1,0]})" << "\n";
    out << R"({"text":"Hallo du.","lang":"de","vec":[0,1]})" << "\n";
  }
  FileSentenceVectors sv(path);
  CHECK(sv.dim() == 2);
  // Lookup is tokenization-normalized: spacing differences do not matter.
  CHECK(sv.encode("Hello  there .", "en")[0] == doctest::Approx(1.0));
  CHECK(sv.encode("Hallo du.", "de")[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(sv.encode("Hello there.", "de"), std::runtime_error);
  CHECK_THROWS_AS(sv.encode("never stored", "en"), std::runtime_error);
  testutil::remove_dir(dir);
}

TEST_CASE("embedding store round-trips precomputed pair matrices") {
  auto dir = testutil::make_temp_dir("ctxstore");
  std::string path = (dir / "store.bin").string();
  TokenSequence src = tokenize("the captain visits", "en");
  TokenSequence tgt = tokenize("der kapitaen", "de");
  WindowedHashContextual ref(2, 16, 64, 2);
  EmbeddingStoreRecord rec;
  rec.src_joined = "the captain visits";
  rec.tgt_joined = "der kapitaen";
  rec.embedding = ref.encode_pair(src, tgt);
  write_embedding_store(path, 16, 3, 64, {rec});

  FileContextualEncoder enc(path);
  CHECK(enc.dim() == 16);
  CHECK(enc.marker_slots() == 3);
  CHECK(enc.capacity() == 64);
  // The store keeps 32-bit floats, so the round trip is exact only to
  // single precision.
  Matrix m = enc.encode_pair(src, tgt);
  CHECK((m - rec.embedding).cwiseAbs().maxCoeff() <= 1e-6);
  TokenSequence other = tokenize("missing pair", "en");
  CHECK_THROWS_AS(enc.encode_pair(other, tgt), std::runtime_error);
  testutil::remove_dir(dir);
}

TEST_CASE("mask frequency file feeds the unigram filler") {
  auto dir = testutil::make_temp_dir("freq");
  std::string path = (dir / "freq.txt").string();
  {
    std::ofstream out(path);
    out << "the 5\ncat 2\n";
  }
  UnigramMaskFiller filler = mask_filler_from_frequency_file(path);
  auto top = filler.fill_mask(tokenize("a b", "en"), 0, 2);
  REQUIRE(top.size() == 2);
  CHECK(top[0].token == "the");
  CHECK(top[0].score == doctest::Approx(5.0 / 7.0));
  testutil::remove_dir(dir);
}

TEST_CASE("seed filter rejects in length-then-similarity order") {
  SeedFilterConfig cfg;  // 5..60 tokens, similarity > 0.8
  HashedCrossLingual xsim(0, 64);

  SubtitlePair good;
  good.source_text = "The quiet captain visits that harbor.";
  good.target_text = "harbor that visits captain quiet The.";
  good.target_lang = "de";
  SeedDecision d = seed_filter(good, cfg, xsim);
  CHECK(d.accepted);
  CHECK(d.similarity == doctest::Approx(1.0));

  SubtitlePair short_src = good;
  short_src.source_text = "No.";
  d = seed_filter(short_src, cfg, xsim);
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == SeedRejectReason::source_length);

  SubtitlePair short_tgt = good;
  short_tgt.target_text = "Nein.";
  d = seed_filter(short_tgt, cfg, xsim);
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == SeedRejectReason::target_length);

  // Both sides out of band: the source check wins.
  SubtitlePair both = good;
  both.source_text = "No.";
  both.target_text = "Nein.";
  CHECK(seed_filter(both, cfg, xsim).reason == SeedRejectReason::source_length);

  SubtitlePair unrelated = good;
  unrelated.target_text = "zebra quartz fjord sphinx glyph vortex.";
  d = seed_filter(unrelated, cfg, xsim);
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == SeedRejectReason::similarity);

  // The threshold is strict: exactly-at-threshold pairs are rejected.
  SeedFilterConfig lax = cfg;
  lax.similarity_threshold = 1.0;
  CHECK(seed_filter(good, lax, xsim).reason == SeedRejectReason::similarity);
}

TEST_CASE("tightening the similarity threshold only shrinks the accept set") {
  testutil::FixtureOptions opt;
  opt.count = 120;
  opt.junk_short = 10;
  opt.junk_long = 10;
  opt.junk_dissimilar = 20;
  auto corpus = testutil::fixture_corpus(opt);
  HashedCrossLingual xsim(0, 64);
  SeedFilterConfig loose, tight;
  loose.similarity_threshold = 0.3;
  tight.similarity_threshold = 0.9;
  for (const auto& pair : corpus) {
    bool in_tight = seed_filter(pair, tight, xsim).accepted;
    bool in_loose = seed_filter(pair, loose, xsim).accepted;
    if (in_tight) CHECK(in_loose);
  }
}

TEST_CASE("seed filter agrees with a from-scratch oracle on a mixed corpus") {
  testutil::FixtureOptions opt;
  opt.count = 400;
  opt.seed = 77;
  opt.junk_short = 50;
  opt.junk_long = 50;
  opt.junk_dissimilar = 50;
  auto corpus = testutil::fixture_corpus(opt);
  REQUIRE(corpus.size() == 550);

  SeedFilterConfig cfg;
  HashedCrossLingual xsim(0, 64);
  std::size_t accepted = 0;
  for (const SubtitlePair& pair : corpus) {
    SeedDecision got = seed_filter(pair, cfg, xsim);

    // Oracle, written against the documented rules only.
    std::size_t src_len =
        tokenize(pair.source_text, pair.source_lang).tokens.size();
    std::size_t tgt_len =
        tokenize(pair.target_text, pair.target_lang).tokens.size();
    auto in_band = [&](std::size_t n) {
      return n >= static_cast<std::size_t>(cfg.min_tokens) &&
             n <= static_cast<std::size_t>(cfg.max_tokens);
    };
    if (!in_band(src_len)) {
      CHECK_FALSE(got.accepted);
      CHECK(got.reason == SeedRejectReason::source_length);
      continue;
    }
    if (!in_band(tgt_len)) {
      CHECK_FALSE(got.accepted);
      CHECK(got.reason == SeedRejectReason::target_length);
      continue;
    }
    double sim = cosine(xsim.encode(pair.source_text, pair.source_lang),
                        xsim.encode(pair.target_text, pair.target_lang));
    CHECK(std::abs(sim - got.similarity) <= 1e-12);
    if (sim > cfg.similarity_threshold) {
      CHECK(got.accepted);
      ++accepted;
    } else {
      CHECK_FALSE(got.accepted);
      CHECK(got.reason == SeedRejectReason::similarity);
    }
  }
  // Every clean fixture pair is a token-for-token shuffle of its source,
  // so all 400 survive and only the junk is culled.
  CHECK(accepted == 400);
}

TEST_CASE("seed filter config json round-trips and rejects unknown keys") {
  SeedFilterConfig cfg;
  cfg.min_tokens = 4;
  cfg.similarity_threshold = 0.75;
  SeedFilterConfig again = seed_filter_config_from_json(to_json(cfg));
  CHECK(again.min_tokens == 4);
  CHECK(again.max_tokens == cfg.max_tokens);
  CHECK(again.similarity_threshold == doctest::Approx(0.75));
  nlohmann::json bad = {{"min_tokens", 4}, {"max_token", 9}};
  CHECK_THROWS_AS(seed_filter_config_from_json(bad), std::invalid_argument);
  SeedFilterConfig invalid;
  invalid.min_tokens = 0;
  CHECK_THROWS_AS(validate(invalid), std::invalid_argument);
}
