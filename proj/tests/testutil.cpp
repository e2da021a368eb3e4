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

#include "testutil.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "otut/rng.hpp"
#include "otut/tokenizer.hpp"

namespace otut::testutil {
namespace {

const std::vector<std::string>& determiners() {
  static const std::vector<std::string> v = {"the", "a", "this", "that"};
  return v;
}

const std::vector<std::string>& adjectives() {
  static const std::vector<std::string> v = {"quiet",   "narrow", "bright",
                                             "ancient", "crowded", "gentle"};
  return v;
}

const std::vector<std::string>& nouns() {
  static const std::vector<std::string> v = {
      "garden", "station", "letter", "window", "captain", "harbor",
      "village", "engine",  "doctor", "market", "bridge",  "forest"};
  return v;
}

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {
      "watches",   "repairs", "follows", "describes",
      "remembers", "paints",  "visits",  "carries"};
  return v;
}

std::string pick(Rng& rng, const std::vector<std::string>& pool) {
  return pool[rng.uniform_index(pool.size())];
}

// "Det adj noun verb det noun ." with the determiner capitalized: seven
// tokens, all multi-character, none on the stopword-protected content list
// except the determiners, and stable under re-tokenization.
std::string make_sentence(Rng& rng) {
  std::string det = pick(rng, determiners());
  det[0] = static_cast<char>(det[0] - 'a' + 'A');
  return det + " " + pick(rng, adjectives()) + " " + pick(rng, nouns()) +
         " " + pick(rng, verbs()) + " " + pick(rng, determiners()) + " " +
         pick(rng, nouns()) + ".";
}

std::string shuffled_target(const std::string& source, const std::string& lang,
                            Rng& rng) {
  TokenSequence seq = tokenize(source, "en");
  rng.shuffle(seq.tokens);
  seq.lang = lang;
  return detokenize(seq);
}

std::string format_id(const std::string& prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%05zu", n);
  return prefix + "-" + buf;
}

}  // namespace

std::vector<SubtitlePair> fixture_corpus(const FixtureOptions& options) {
  if (options.target_langs.empty()) {
    throw std::invalid_argument("fixture_corpus: target_langs is empty");
  }
  std::vector<SubtitlePair> pairs;
  pairs.reserve(options.count + options.junk_short + options.junk_long +
                options.junk_dissimilar);
  Rng root(options.seed);
  for (std::size_t i = 0; i < options.count; ++i) {
    Rng rng = root.child("fixture/" + std::to_string(i));
    std::string src = make_sentence(rng);
    if (rng.uniform_real01() < options.two_sentence_fraction) {
      src += " " + make_sentence(rng);
    }
    SubtitlePair pair;
    pair.id = format_id(options.id_prefix, i);
    pair.target_lang = options.target_langs[i % options.target_langs.size()];
    pair.source_text = src;
    pair.target_text = shuffled_target(src, pair.target_lang, rng);
    pairs.push_back(std::move(pair));
  }
  Rng junk = root.child("junk");
  for (std::size_t i = 0; i < options.junk_short; ++i) {
    SubtitlePair pair;
    pair.id = format_id(options.id_prefix + "-short", i);
    pair.target_lang = options.target_langs[i % options.target_langs.size()];
    pair.source_text = "No.";
    pair.target_text = shuffled_target(pair.source_text, pair.target_lang, junk);
    pairs.push_back(std::move(pair));
  }
  for (std::size_t i = 0; i < options.junk_long; ++i) {
    std::string src;
    for (int k = 0; k < 61; ++k) {
      if (!src.empty()) src += " ";
      src += pick(junk, nouns());
    }
    src += ".";
    SubtitlePair pair;
    pair.id = format_id(options.id_prefix + "-long", i);
    pair.target_lang = options.target_langs[i % options.target_langs.size()];
    pair.source_text = src;
    pair.target_text = shuffled_target(src, pair.target_lang, junk);
    pairs.push_back(std::move(pair));
  }
  // Token sets disjoint from the content vocabulary: the hashed trigram
  // vectors land nearly orthogonal to the source, so cosine falls far
  // below any sane seed-filter threshold while lengths stay in band.
  static const std::vector<std::string> noise = {
      "zebra", "xylophone", "quartz", "fjord", "sphinx", "glyph", "vortex"};
  for (std::size_t i = 0; i < options.junk_dissimilar; ++i) {
    SubtitlePair pair;
    pair.id = format_id(options.id_prefix + "-dissim", i);
    pair.target_lang = options.target_langs[i % options.target_langs.size()];
    pair.source_text = make_sentence(junk);
    std::string tgt;
    for (int k = 0; k < 7; ++k) {
      if (!tgt.empty()) tgt += " ";
      tgt += noise[junk.uniform_index(noise.size())];
    }
    pair.target_text = tgt;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::filesystem::path make_temp_dir(const std::string& tag) {
  std::filesystem::path base = std::filesystem::temp_directory_path();
  std::string tmpl = (base / ("otut-" + tag + "-XXXXXX")).string();
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  if (::mkdtemp(buf.data()) == nullptr) {
    throw std::runtime_error("mkdtemp failed for " + tmpl);
  }
  return std::filesystem::path(buf.data());
}

void remove_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace otut::testutil
