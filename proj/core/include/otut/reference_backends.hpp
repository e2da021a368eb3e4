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
// Deterministic, training-free reference backends. They exist so the whole
// pipeline can run and be tested offline: a unigram-frequency mask filler,
// feature-hashed character-trigram word and sentence vectors, and a hashed
// contextual encoder that blends each token vector with a local window
// average. Bit-identical across runs for a fixed seed and config.

#ifndef OTUT_REFERENCE_BACKENDS_HPP_
#define OTUT_REFERENCE_BACKENDS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "otut/encoders.hpp"

namespace otut {

// Feature-hashes the character trigrams of `token` (with boundary markers)
// into `dim` buckets with +/-1 signs, then L2-normalizes. Guaranteed
// nonzero: when every bucket cancels, one seeded bucket is set to 1 before
// normalizing. Building block for the reference vector backends.
Vector hashed_token_vector(std::string_view token, std::uint64_t seed,
                           Eigen::Index dim);

// Ranks mask suggestions by corpus unigram frequency, ignoring context.
// Scores are relative frequencies; ties are broken by token text so the
// ranking is total and reproducible.
class UnigramMaskFiller : public MaskFiller {
 public:
  explicit UnigramMaskFiller(const std::map<std::string, std::uint64_t>& counts);

  // Builds counts from the tokenized source side of a corpus.
  static UnigramMaskFiller from_sources(const std::vector<SubtitlePair>& pairs);

  std::vector<MaskSuggestion> fill_mask(const TokenSequence& tokens,
                                        std::size_t mask_index,
                                        std::size_t top_k) const override;
  std::string subword_marker() const override { return "##"; }

 private:
  std::vector<MaskSuggestion> ranked_;
};

class HashedWordVectors : public WordVectors {
 public:
  explicit HashedWordVectors(std::uint64_t seed, Eigen::Index dim = 64);
  Vector vector(std::string_view token) const override;
  Eigen::Index dim() const override { return dim_; }

 private:
  std::uint64_t seed_;
  Eigen::Index dim_;
};

// Sentence embedding shared across languages: the L2-normalized mean of
// hashed token vectors. It depends only on the token multiset, so any two
// texts sharing their tokens land on (nearly) the same point regardless of
// order or language tag.
class HashedCrossLingual : public CrossLingualEncoder {
 public:
  explicit HashedCrossLingual(std::uint64_t seed, Eigen::Index dim = 64);
  Vector encode(std::string_view text, std::string_view lang) const override;
  Eigen::Index dim() const override { return dim_; }

 private:
  std::uint64_t seed_;
  Eigen::Index dim_;
};

// Joint-pair contextual encoder. Each row blends the position's hashed
// token vector with the average over a +/-`window` neighborhood, half and
// half, giving every position a deterministic context-sensitive embedding.
class WindowedHashContextual : public ContextualEncoder {
 public:
  explicit WindowedHashContextual(std::uint64_t seed, Eigen::Index dim = 64,
                                  std::size_t capacity = 512,
                                  std::size_t window = 2);

  Matrix encode_pair(const TokenSequence& source,
                     const TokenSequence& target) const override;
  Eigen::Index dim() const override { return dim_; }
  std::size_t marker_slots() const override { return 3; }
  std::size_t capacity() const override { return capacity_; }

 private:
  std::uint64_t seed_;
  Eigen::Index dim_;
  std::size_t capacity_;
  std::size_t window_;
};

}  // namespace otut

#endif  // OTUT_REFERENCE_BACKENDS_HPP_
