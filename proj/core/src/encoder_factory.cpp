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

#include "otut/encoder_factory.hpp"

#include <memory>
#include <set>
#include <stdexcept>

#include "otut/encoder_adapters.hpp"
#include "otut/hash.hpp"
#include "otut/reference_backends.hpp"

namespace otut {

EncoderConfig encoder_config_from_json(const nlohmann::json& block) {
  static const std::set<std::string> known = {
      "kind",          "dim",
      "seed",          "capacity",
      "window",        "mask_frequency_file",
      "word_vectors_file", "sentence_vectors_file",
      "contextual_store_file"};
  if (!block.is_object()) {
    throw std::invalid_argument("encoder config must be a JSON object");
  }
  for (auto it = block.begin(); it != block.end(); ++it) {
    if (!known.count(it.key())) {
      throw std::invalid_argument("encoder config: unknown key \"" + it.key() +
                                  "\"");
    }
  }
  EncoderConfig cfg;
  if (block.contains("kind")) cfg.kind = block["kind"].get<std::string>();
  if (block.contains("dim")) cfg.dim = block["dim"].get<Eigen::Index>();
  if (block.contains("seed")) cfg.seed = block["seed"].get<std::uint64_t>();
  if (block.contains("capacity")) {
    cfg.capacity = block["capacity"].get<std::size_t>();
  }
  if (block.contains("window")) cfg.window = block["window"].get<std::size_t>();
  if (block.contains("mask_frequency_file")) {
    cfg.mask_frequency_file = block["mask_frequency_file"].get<std::string>();
  }
  if (block.contains("word_vectors_file")) {
    cfg.word_vectors_file = block["word_vectors_file"].get<std::string>();
  }
  if (block.contains("sentence_vectors_file")) {
    cfg.sentence_vectors_file =
        block["sentence_vectors_file"].get<std::string>();
  }
  if (block.contains("contextual_store_file")) {
    cfg.contextual_store_file =
        block["contextual_store_file"].get<std::string>();
  }
  if (cfg.kind != "reference" && cfg.kind != "adapter") {
    throw std::invalid_argument(
        "encoder config: kind must be \"reference\" or \"adapter\", got \"" +
        cfg.kind + "\"");
  }
  if (cfg.dim <= 0) {
    throw std::invalid_argument("encoder config: dim must be positive");
  }
  return cfg;
}

nlohmann::ordered_json to_json(const EncoderConfig& cfg) {
  nlohmann::ordered_json j;
  j["kind"] = cfg.kind;
  j["dim"] = cfg.dim;
  j["seed"] = cfg.seed;
  j["capacity"] = cfg.capacity;
  j["window"] = cfg.window;
  j["mask_frequency_file"] = cfg.mask_frequency_file;
  j["word_vectors_file"] = cfg.word_vectors_file;
  j["sentence_vectors_file"] = cfg.sentence_vectors_file;
  j["contextual_store_file"] = cfg.contextual_store_file;
  return j;
}

std::string encoder_fingerprint(const EncoderConfig& cfg) {
  return hex64(fnv1a64(to_json(cfg).dump()));
}

EncoderBundle make_bundle(const EncoderConfig& cfg,
                          const std::vector<SubtitlePair>& unigram_source) {
  const bool adapters = cfg.kind == "adapter";
  EncoderBundle bundle;

  if (adapters && !cfg.mask_frequency_file.empty()) {
    bundle.mask_filler = std::make_shared<UnigramMaskFiller>(
        mask_filler_from_frequency_file(cfg.mask_frequency_file));
  } else {
    bundle.mask_filler = std::make_shared<UnigramMaskFiller>(
        UnigramMaskFiller::from_sources(unigram_source));
  }

  if (adapters && !cfg.word_vectors_file.empty()) {
    bundle.word_vectors =
        std::make_shared<FileWordVectors>(cfg.word_vectors_file, cfg.seed);
  } else {
    bundle.word_vectors = std::make_shared<HashedWordVectors>(cfg.seed, cfg.dim);
  }

  if (adapters && !cfg.sentence_vectors_file.empty()) {
    bundle.xsim = std::make_shared<FileSentenceVectors>(cfg.sentence_vectors_file);
  } else {
    bundle.xsim = std::make_shared<HashedCrossLingual>(cfg.seed, cfg.dim);
  }

  if (adapters && !cfg.contextual_store_file.empty()) {
    bundle.contextual =
        std::make_shared<FileContextualEncoder>(cfg.contextual_store_file);
  } else {
    bundle.contextual = std::make_shared<WindowedHashContextual>(
        cfg.seed, cfg.dim, cfg.capacity, cfg.window);
  }

  bundle.fingerprint = encoder_fingerprint(cfg);
  return bundle;
}

}  // namespace otut
