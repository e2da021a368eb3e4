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
#include <cstdint>
#include <fstream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "otut/base64.hpp"
#include "otut/corpus_io.hpp"
#include "otut/edits.hpp"
#include "otut/hash.hpp"
#include "otut/labels.hpp"
#include "otut/percentile_filter.hpp"
#include "otut/rng.hpp"
#include "otut/sentence_split.hpp"
#include "otut/stopwords.hpp"
#include "otut/token_filter.hpp"
#include "otut/tokenizer.hpp"
#include "otut/utf8.hpp"
#include "testutil.hpp"

using namespace otut;

TEST_CASE("utf8 decode and encode round-trip") {
  std::string text = "a\xC3\xA9 \xE2\x82\xAC \xF0\x9F\x99\x82 z";  // aé € 🙂 z
  auto cps = decode_utf8(text);
  std::string rebuilt;
  for (const DecodedChar& dc : cps) {
    CHECK(text.substr(dc.offset, dc.length) == encode_utf8(dc.cp));
    rebuilt += encode_utf8(dc.cp);
  }
  CHECK(rebuilt == text);
  CHECK(cps.size() == 8);  // a é sp € sp 🙂 sp z
}

TEST_CASE("utf8 character classes") {
  CHECK(is_space_cp(' '));
  CHECK(is_space_cp('\t'));
  CHECK(is_space_cp(0x00A0));  // no-break space
  CHECK_FALSE(is_space_cp('x'));
  CHECK(is_digit_cp('7'));
  CHECK_FALSE(is_digit_cp('x'));
  CHECK(is_punct_cp('.'));
  CHECK(is_punct_cp(0x2026));  // ellipsis
  CHECK_FALSE(is_punct_cp('a'));
  CHECK(is_letter_cp('q'));
  CHECK(is_letter_cp(0x00E9));  // é
  CHECK_FALSE(is_letter_cp('.'));
  CHECK(ascii_lower("MiXeD-09") == "mixed-09");
}

TEST_CASE("fnv1a64 matches published vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("hex64 is sixteen zero-padded lowercase digits") {
  CHECK(hex64(0) == "0000000000000000");
  CHECK(hex64(0xdeadbeefULL) == "00000000deadbeef");
  CHECK(hex64(0xFFFFFFFFFFFFFFFFULL) == "ffffffffffffffff");
}

TEST_CASE("rng streams are deterministic and child streams are keyed") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  Rng root(7);
  CHECK(root.child("x").next_u64() == root.child("x").next_u64());
  CHECK(root.child("x").next_u64() != root.child("y").next_u64());
  // Taking a child does not advance the parent.
  Rng p(7);
  CHECK(p.next_u64() == Rng(7).next_u64());
}

TEST_CASE("rng uniform_index is in range and roughly uniform") {
  Rng rng(3);
  std::vector<int> hits(10, 0);
  for (int i = 0; i < 10000; ++i) {
    std::size_t k = rng.uniform_index(10);
    REQUIRE(k < 10);
    ++hits[k];
  }
  for (int h : hits) CHECK(h > 700);  // expectation 1000
  CHECK(rng.uniform_index(1) == 0);
}

TEST_CASE("base64 matches RFC 4648 vectors both ways") {
  auto enc = [](const std::string& s) {
    return base64_encode(reinterpret_cast<const std::uint8_t*>(s.data()),
                         s.size());
  };
  CHECK(enc("") == "");
  CHECK(enc("f") == "Zg==");
  CHECK(enc("fo") == "Zm8=");
  CHECK(enc("foo") == "Zm9v");
  CHECK(enc("foob") == "Zm9vYg==");
  CHECK(enc("fooba") == "Zm9vYmE=");
  CHECK(enc("foobar") == "Zm9vYmFy");
  auto dec = base64_decode("Zm9vYmE=");
  CHECK(std::string(dec.begin(), dec.end()) == "fooba");
  CHECK_THROWS_AS(base64_decode("Zm9"), std::invalid_argument);
  CHECK_THROWS_AS(base64_decode("Zm!="), std::invalid_argument);
}

TEST_CASE("base64 round-trips random binary blobs") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint8_t> blob(rng.uniform_index(300));
    for (auto& byte : blob) {
      byte = static_cast<std::uint8_t>(rng.next_u64() & 0xff);
    }
    std::string text = base64_encode(blob.data(), blob.size());
    CHECK(base64_decode(text) == blob);
  }
}

TEST_CASE("class labels and granularities round-trip through names") {
  CHECK(to_string(ClassLabel::NE) == "NE");
  CHECK(to_string(ClassLabel::OT) == "OT");
  CHECK(to_string(ClassLabel::UT) == "UT");
  CHECK(class_label_from_string("UT") == ClassLabel::UT);
  CHECK_THROWS_AS(class_label_from_string("XX"), std::invalid_argument);
  CHECK(granularity_from_string("gross") == Granularity::gross);
  CHECK(to_string(Granularity::subtle) == "subtle");
  CHECK_THROWS_AS(granularity_from_string(""), std::invalid_argument);
  CHECK_FALSE(is_error_class(ClassLabel::NE));
  CHECK(is_error_class(ClassLabel::OT));
  CHECK(is_error_class(ClassLabel::UT));
  CHECK(static_cast<int>(ClassLabel::NE) == 0);
  CHECK(static_cast<int>(ClassLabel::OT) == 1);
  CHECK(static_cast<int>(ClassLabel::UT) == 2);
}

TEST_CASE("tokenizer splits words and peels boundary punctuation") {
  auto toks = tokenize("There is a green tree in the park", "en").tokens;
  CHECK(toks.size() == 8);
  CHECK(toks.front() == "There");
  CHECK(toks.back() == "park");

  toks = tokenize("Hello, world!", "en").tokens;
  CHECK(toks == std::vector<std::string>{"Hello", ",", "world", "!"});

  toks = tokenize("(don't stop)", "en").tokens;
  CHECK(toks == std::vector<std::string>{"(", "don't", "stop", ")"});

  CHECK(tokenize("", "en").tokens.empty());
  CHECK(tokenize("   \t\n ", "en").tokens.empty());
}

TEST_CASE("tokens are non-empty and whitespace-free on random input") {
  Rng rng(21);
  const std::vector<CodePoint> pool = {'a', 'b',    'Z',    '\'',  '-',
                                       '.', ',',    '!',    ' ',   '\t',
                                       '3', 0x00E9, 0x4E2D, 0x1F642, 0x2026};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    std::size_t len = rng.uniform_index(40);
    for (std::size_t i = 0; i < len; ++i) {
      text += encode_utf8(pool[rng.uniform_index(pool.size())]);
    }
    TokenSequence seq = tokenize(text, "xx");
    for (const std::string& tok : seq.tokens) {
      REQUIRE_FALSE(tok.empty());
      for (const DecodedChar& dc : decode_utf8(tok)) {
        REQUIRE_FALSE(is_space_cp(dc.cp));
      }
    }
    // Determinism, and stability: re-tokenizing the detokenized string
    // reproduces the token sequence exactly.
    CHECK(tokenize(text, "xx").tokens == seq.tokens);
    CHECK(tokenize(detokenize(seq), "xx").tokens == seq.tokens);
  }
}

TEST_CASE("detokenize restores whitespace-normalized plain sentences") {
  std::string text = "The  quiet captain\tvisits the harbor.";
  TokenSequence seq = tokenize(text, "en");
  CHECK(detokenize(seq) == normalize_whitespace(text));
  CHECK(normalize_whitespace("  a  b \n c ") == "a b c");
}

TEST_CASE("sentence splitter cuts after terminal runs and dialogue dashes") {
  auto s = split_sentences("Hello there. How are you? Fine!");
  REQUIRE(s.size() == 3);
  CHECK(s[0] == "Hello there.");
  CHECK(s[1] == "How are you?");
  CHECK(s[2] == "Fine!");

  s = split_sentences("Wait... What?!");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "Wait...");
  CHECK(s[1] == "What?!");

  s = split_sentences("- Who is it? - The doctor.");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "- Who is it?");
  CHECK(s[1] == "- The doctor.");

  CHECK(split_sentences("").empty());
  CHECK(split_sentences("no terminal here").size() == 1);
}

TEST_CASE("join of split equals the whitespace-normalized input") {
  std::vector<std::string> texts = {
      "One. Two. Three.",
      "A quiet garden.  The engine   waits. Done!",
      "Single sentence without terminal",
      "- First cue. - Second cue!",
  };
  testutil::FixtureOptions opt;
  opt.count = 50;
  opt.seed = 99;
  for (const auto& pair : testutil::fixture_corpus(opt)) {
    texts.push_back(pair.source_text);
  }
  for (const std::string& text : texts) {
    CHECK(join_sentences(split_sentences(text)) == normalize_whitespace(text));
  }
}

TEST_CASE("stopword list is case-insensitive and covers function words") {
  for (const char* w : {"the", "The", "a", "of", "and", "is", "don't"}) {
    CHECK(is_english_stopword(w));
  }
  for (const char* w : {"garden", "watches", "bright", ""}) {
    CHECK_FALSE(is_english_stopword(w));
  }
}

TEST_CASE("token filter rejects by reason in a fixed precedence") {
  auto decide = [](const std::string& tok) {
    return token_filter(tok, std::nullopt, std::nullopt);
  };
  CHECK_FALSE(decide("##ing").keep);
  CHECK(decide("##ing").reason == TokenRejectReason::subword);
  CHECK(decide(",").reason == TokenRejectReason::punctuation);
  CHECK(decide("...").reason == TokenRejectReason::punctuation);
  CHECK(decide("the").reason == TokenRejectReason::stopword);
  CHECK(decide("$5").reason == TokenRejectReason::special_symbol);
  CHECK(decide("").reason == TokenRejectReason::special_symbol);
  CHECK(decide("3").reason == TokenRejectReason::numeral);
  CHECK(decide("co2").reason == TokenRejectReason::numeral);
  CHECK(decide("garden").keep);
  CHECK(decide("well-known").keep);
  CHECK(decide("o'clock").keep);

  // Subword marker wins over everything else.
  CHECK(decide("##3").reason == TokenRejectReason::subword);
  // All-punctuation wins over the digit rule inside mixed tokens? A digit
  // is not punctuation, so "3." is not all-punct; it has no special char,
  // so it falls to the numeral rule.
  CHECK(decide("3.").reason == TokenRejectReason::special_symbol);
}

TEST_CASE("token filter repetition compares case-folded neighbors") {
  auto r = token_filter("Garden", std::string("garden"), std::nullopt);
  CHECK_FALSE(r.keep);
  CHECK(r.reason == TokenRejectReason::repetition);
  r = token_filter("harbor", std::nullopt, std::string("HARBOR"));
  CHECK(r.reason == TokenRejectReason::repetition);
  CHECK(token_filter("harbor", std::string("garden"), std::string("bridge"))
            .keep);
}

TEST_CASE("percentile filter culls the top-scoring fraction, ties stable") {
  std::vector<double> ten = {0.9, 0.1, 0.8, 0.2, 0.7, 0.3, 0.6, 0.4, 0.5, 0.0};
  auto survivors = percentile_survivors(ten, 0.4);
  // floor(0.4 * 10) = 4 highest scores go; the six scored <= 0.5 stay.
  CHECK(survivors == std::vector<std::size_t>{1, 3, 5, 7, 8, 9});

  CHECK(percentile_survivors({0.123}, 0.4) == std::vector<std::size_t>{0});
  CHECK(percentile_survivors({}, 0.4).empty());
  CHECK_THROWS_AS(percentile_survivors({1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(percentile_survivors({1.0}, -0.1), std::invalid_argument);

  // All-equal scores: exactly floor(f*N) still go, earliest inputs first
  // because the descending sort is stable.
  auto tied = percentile_survivors({5.0, 5.0, 5.0, 5.0, 5.0}, 0.4);
  CHECK(tied == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("percentile filter agrees with a rank oracle on random lists") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng.uniform_index(200);
    std::vector<double> scores(n);
    for (double& s : scores) {
      // Coarse grid forces plenty of duplicate scores.
      s = static_cast<double>(rng.uniform_index(8)) / 7.0;
    }
    double frac = static_cast<double>(rng.uniform_index(100)) / 100.0;

    // Oracle: order by score descending, input order breaking ties, drop
    // the first floor(frac*n), return the rest sorted by index.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (scores[a] != scores[b]) return scores[a] > scores[b];
      return a < b;
    });
    std::size_t drop = static_cast<std::size_t>(
        std::floor(frac * static_cast<double>(n)));
    std::vector<std::size_t> expect(order.begin() + drop, order.end());
    std::sort(expect.begin(), expect.end());

    CHECK(percentile_survivors(scores, frac) == expect);
  }
}

TEST_CASE("edit records round-trip through json") {
  EditRecord e{EditKind::insert_token, 4, "harbor"};
  CHECK(edit_from_json(to_json(e)) == e);
  EditRecord r{EditKind::remove_sentence, 1, ""};
  CHECK(edit_from_json(to_json(r)) == r);
  CHECK(edit_kind_from_string("add_sentence") == EditKind::add_sentence);
  CHECK_THROWS_AS(edit_kind_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("replay applies token edits against the tokenized source") {
  std::string src = "The captain visits the harbor.";
  std::string inserted = replay_edits(
      src, {{EditKind::insert_token, 2, "quietly"}}, "en");
  CHECK(inserted == "The captain quietly visits the harbor.");

  std::string omitted = replay_edits(src, {{EditKind::omit_token, 1, ""}}, "en");
  CHECK(omitted == "The visits the harbor.");

  // Positions shift as earlier edits land; replay applies them in order.
  std::string both = replay_edits(
      src,
      {{EditKind::insert_token, 0, "Look"}, {EditKind::omit_token, 5, ""}},
      "en");
  CHECK(both == "Look The captain visits the.");

  CHECK_THROWS_AS(replay_edits(src, {{EditKind::omit_token, 99, ""}}, "en"),
                  std::invalid_argument);
  CHECK_THROWS_AS(replay_edits(src, {{EditKind::insert_token, 0, ""}}, "en"),
                  std::invalid_argument);
  CHECK(replay_edits(src, {}, "en") == src);
}

TEST_CASE("replay applies sentence edits and refuses mixed kinds") {
  std::string src = "First one. Second one.";
  CHECK(replay_edits(src, {{EditKind::add_sentence, 1, "Extra bit."}}, "en") ==
        "First one. Extra bit. Second one.");
  CHECK(replay_edits(src, {{EditKind::remove_sentence, 0, ""}}, "en") ==
        "Second one.");
  CHECK_THROWS_AS(
      replay_edits(src,
                   {{EditKind::add_sentence, 0, "X."},
                    {EditKind::insert_token, 0, "y"}},
                   "en"),
      std::invalid_argument);
}

TEST_CASE("jsonl corpus io round-trips pairs with extra fields") {
  auto dir = testutil::make_temp_dir("corpusio");
  std::string path = (dir / "pairs.jsonl").string();
  {
    std::ofstream out(path);
    out << R"({"id":"p1","src":"Hello there.","tgt":"Hallo.","tgt_lang":"de","note":7})"
        << "\n";
    out << "\n";  // blank line is skipped
    out << R"({"src":"No id.","tgt":"Ohne."})" << "\n";
    out << "this is not json\n";
    out << R"({"id":"p3","tgt":"missing src"})" << "\n";
  }
  ReadResult rr = read_jsonl(path, "de");
  REQUIRE(rr.pairs.size() == 2);
  CHECK(rr.pairs[0].id == "p1");
  CHECK(rr.pairs[0].source_text == "Hello there.");
  CHECK(rr.pairs[0].target_lang == "de");
  CHECK(rr.pairs[0].extra.at("note") == 7);
  CHECK(rr.pairs[1].id == path + ":3");  // default id from location
  REQUIRE(rr.errors.size() == 2);
  CHECK(rr.errors[0].location == path + ":4");
  CHECK(rr.errors[1].location == path + ":5");

  std::string out_path = (dir / "out.jsonl").string();
  write_jsonl(out_path, rr.pairs);
  ReadResult rr2 = read_jsonl(out_path, "de");
  REQUIRE(rr2.errors.empty());
  REQUIRE(rr2.pairs.size() == 2);
  CHECK(rr2.pairs[0].extra.at("note") == 7);
  CHECK(rr2.pairs[0].source_text == rr.pairs[0].source_text);
  testutil::remove_dir(dir);
}

TEST_CASE("srt reader aligns cues ordinally and rejects drift") {
  auto dir = testutil::make_temp_dir("srt");
  auto write = [&](const char* name, const std::string& body) {
    std::ofstream out(dir / name);
    out << body;
    return (dir / name).string();
  };
  std::string src = write("a.srt",
                          "1\n00:00:01,000 --> 00:00:02,000\nHello there.\n\n"
                          "2\n00:00:03,000 --> 00:00:04,000\nTwo lines\nhere.\n\n");
  std::string tgt = write("b.srt",
                          "1\n00:00:01,000 --> 00:00:02,000\nHallo.\n\n"
                          "2\n00:00:03,000 --> 00:00:04,000\nZwei Zeilen.\n\n");
  ReadResult rr = read_srt_pair(src, tgt, "de");
  REQUIRE(rr.pairs.size() == 2);
  CHECK(rr.pairs[0].source_text == "Hello there.");
  CHECK(rr.pairs[1].source_text == "Two lines here.");
  CHECK(rr.pairs[1].target_text == "Zwei Zeilen.");
  CHECK(rr.pairs[0].target_lang == "de");

  std::string shorter = write("c.srt",
                              "1\n00:00:01,000 --> 00:00:02,000\nNur eine.\n\n");
  CHECK_THROWS_AS(read_srt_pair(src, shorter, "de"), std::runtime_error);
  testutil::remove_dir(dir);
}
