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
//
// Shared test fixtures: a deterministic synthetic parallel corpus in the
// shape the pipeline expects (templated English sources, token-shuffled
// pseudo-targets whose bag-of-words similarity is exactly 1 under the
// reference cross-lingual encoder), plus scratch-directory helpers.

#ifndef OTUT_TESTS_TESTUTIL_HPP_
#define OTUT_TESTS_TESTUTIL_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "otut/subtitle_pair.hpp"

namespace otut::testutil {

struct FixtureOptions {
  std::size_t count = 500;
  std::uint64_t seed = 1234;
  // Fraction of sources that get a second sentence (needed for gross
  // over-translation edits).
  double two_sentence_fraction = 0.3;
  std::vector<std::string> target_langs = {"de", "fr", "hi", "es", "ja"};
  std::string id_prefix = "fx";
  // Deliberately bad pairs appended after the clean ones, for filter
  // tests: too few tokens, too many tokens, unrelated target text.
  std::size_t junk_short = 0;
  std::size_t junk_long = 0;
  std::size_t junk_dissimilar = 0;
};

// Clean pairs have 7 or 14 source tokens, a content vocabulary free of
// stopwords, and a target that is a seeded shuffle of the source tokens.
std::vector<SubtitlePair> fixture_corpus(const FixtureOptions& options);

// Creates a unique writable directory under the system temp root.
std::filesystem::path make_temp_dir(const std::string& tag);

// Recursively deletes a directory created by make_temp_dir.
void remove_dir(const std::filesystem::path& dir);

// Reads a whole file; throws std::runtime_error when unreadable.
std::string slurp(const std::filesystem::path& path);

}  // namespace otut::testutil

#endif  // OTUT_TESTS_TESTUTIL_HPP_
