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

#ifndef OTUT_ENCODER_FACTORY_HPP_
#define OTUT_ENCODER_FACTORY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "otut/encoders.hpp"

namespace otut {

// Declarative description of the encoder bundle. kind "reference" builds
// the deterministic in-process backends; kind "adapter" serves components
// from the given files, falling back to the reference implementation for
// any component whose path is left empty.
struct EncoderConfig {
  std::string kind = "reference";
  Eigen::Index dim = 64;
  std::uint64_t seed = 0;
  std::size_t capacity = 512;
  std::size_t window = 2;
  std::string mask_frequency_file;
  std::string word_vectors_file;
  std::string sentence_vectors_file;
  std::string contextual_store_file;
};

// Parses the "encoder" config block; unknown keys are an error (they are
// almost always typos of the known ones). Missing keys keep their defaults.
EncoderConfig encoder_config_from_json(const nlohmann::json& block);

nlohmann::ordered_json to_json(const EncoderConfig& cfg);

// Stable digest of the configuration. Checkpoints store it and refuse to
// load under a different one, so a model can never be scored on features
// it was not trained on. Derived from the config alone (not from corpus
// contents): the corpus only feeds the mask filler, which plays no part in
// producing model inputs.
std::string encoder_fingerprint(const EncoderConfig& cfg);

// Builds the four backends. `unigram_source` feeds the reference mask
// filler's frequency table (pass the seed corpus when synthesizing; an
// empty vector is fine for commands that never fill masks).
EncoderBundle make_bundle(const EncoderConfig& cfg,
                          const std::vector<SubtitlePair>& unigram_source);

}  // namespace otut

#endif  // OTUT_ENCODER_FACTORY_HPP_
