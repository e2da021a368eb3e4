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

#include "otut/seed_filter.hpp"

#include <stdexcept>
#include <vector>

#include "otut/tokenizer.hpp"

namespace otut {

void validate(const SeedFilterConfig& cfg) {
  if (cfg.min_tokens <= 0 || cfg.min_tokens > cfg.max_tokens) {
    throw std::invalid_argument(
        "seed filter: need 0 < min_tokens <= max_tokens, got " +
        std::to_string(cfg.min_tokens) + ".." + std::to_string(cfg.max_tokens));
  }
  if (cfg.similarity_threshold < -1.0 || cfg.similarity_threshold > 1.0) {
    throw std::invalid_argument("seed filter: threshold outside [-1, 1]");
  }
}

nlohmann::ordered_json to_json(const SeedFilterConfig& cfg) {
  nlohmann::ordered_json j;
  j["min_tokens"] = cfg.min_tokens;
  j["max_tokens"] = cfg.max_tokens;
  j["similarity_threshold"] = cfg.similarity_threshold;
  return j;
}

SeedFilterConfig seed_filter_config_from_json(const nlohmann::json& block) {
  static const std::vector<std::string> known = {"min_tokens", "max_tokens",
                                                 "similarity_threshold"};
  if (!block.is_object()) {
    throw std::invalid_argument("seed filter config must be a JSON object");
  }
  for (auto it = block.begin(); it != block.end(); ++it) {
    bool ok = false;
    for (const std::string& k : known) ok = ok || k == it.key();
    if (!ok) {
      throw std::invalid_argument("seed filter config: unknown key \"" +
                                  it.key() + "\"");
    }
  }
  SeedFilterConfig cfg;
  if (block.contains("min_tokens")) {
    cfg.min_tokens = block["min_tokens"].get<int>();
  }
  if (block.contains("max_tokens")) {
    cfg.max_tokens = block["max_tokens"].get<int>();
  }
  if (block.contains("similarity_threshold")) {
    cfg.similarity_threshold = block["similarity_threshold"].get<double>();
  }
  validate(cfg);
  return cfg;
}

std::string to_string(SeedRejectReason reason) {
  switch (reason) {
    case SeedRejectReason::source_length:
      return "source_length";
    case SeedRejectReason::target_length:
      return "target_length";
    case SeedRejectReason::similarity:
      return "similarity";
  }
  return "unknown";
}

SeedDecision seed_filter(const SubtitlePair& pair, const SeedFilterConfig& cfg,
                         const CrossLingualEncoder& xsim) {
  validate(cfg);
  SeedDecision decision;

  auto in_band = [&cfg](std::size_t n) {
    return n >= static_cast<std::size_t>(cfg.min_tokens) &&
           n <= static_cast<std::size_t>(cfg.max_tokens);
  };

  if (!in_band(tokenize(pair.source_text, pair.source_lang).size())) {
    decision.reason = SeedRejectReason::source_length;
    return decision;
  }
  if (!in_band(tokenize(pair.target_text, pair.target_lang).size())) {
    decision.reason = SeedRejectReason::target_length;
    return decision;
  }

  Vector u = xsim.encode(pair.source_text, pair.source_lang);
  Vector v = xsim.encode(pair.target_text, pair.target_lang);
  decision.similarity = cosine(u, v);
  if (decision.similarity > cfg.similarity_threshold) {
    decision.accepted = true;
  } else {
    decision.reason = SeedRejectReason::similarity;
  }
  return decision;
}

}  // namespace otut
