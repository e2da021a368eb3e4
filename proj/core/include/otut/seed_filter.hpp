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

#ifndef OTUT_SEED_FILTER_HPP_
#define OTUT_SEED_FILTER_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "otut/encoders.hpp"
#include "otut/subtitle_pair.hpp"

namespace otut {

// Quality gate a pair must clear before any synthesis touches it: both
// sides within a token-length band, and source/target cosine similarity in
// the cross-lingual space strictly above the threshold.
struct SeedFilterConfig {
  int min_tokens = 5;
  int max_tokens = 60;
  double similarity_threshold = 0.8;
};

// Throws std::invalid_argument when the bounds or threshold are malformed.
void validate(const SeedFilterConfig& cfg);

nlohmann::ordered_json to_json(const SeedFilterConfig& cfg);
SeedFilterConfig seed_filter_config_from_json(const nlohmann::json& block);

enum class SeedRejectReason {
  source_length,
  target_length,
  similarity,
};

std::string to_string(SeedRejectReason reason);

struct SeedDecision {
  bool accepted = false;
  // Set only when accepted is false: the first predicate that failed, in
  // the fixed order source length, target length, similarity.
  SeedRejectReason reason = SeedRejectReason::source_length;
  // Cosine between the two sentence vectors; only meaningful when the
  // length checks passed (the similarity is never computed otherwise).
  double similarity = 0.0;
};

// Applies the three predicates in order and stops at the first failure.
// Token counts use the toolkit tokenizer on each side's own language.
// Backend failures (e.g. un-encodable text) propagate as exceptions,
// distinct from a reject decision.
SeedDecision seed_filter(const SubtitlePair& pair, const SeedFilterConfig& cfg,
                         const CrossLingualEncoder& xsim);

}  // namespace otut

#endif  // OTUT_SEED_FILTER_HPP_
