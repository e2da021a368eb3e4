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
// The four embedding-backend interfaces the pipeline depends on. Reference
// implementations (deterministic, training-free) live in
// reference_backends.hpp; adapters to externally supplied models live in
// encoder_adapters.hpp. All backends must be safe for concurrent read-only
// use.

#ifndef OTUT_ENCODERS_HPP_
#define OTUT_ENCODERS_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "otut/embedding.hpp"
#include "otut/subtitle_pair.hpp"

namespace otut {

// One candidate token for a masked slot, with its score (higher = more
// probable). fill_mask returns these in non-increasing score order.
struct MaskSuggestion {
  std::string token;
  double score = 0.0;
};

// Masked-LM style token suggester.
class MaskFiller {
 public:
  virtual ~MaskFiller() = default;

  // Suggests tokens for a new slot at `mask_index` in [0, |tokens|]; the
  // mask occupies a fresh position between (or before/after) the existing
  // tokens. Returns at most `top_k` suggestions sorted by score descending.
  // Throws std::out_of_range when mask_index > |tokens|.
  virtual std::vector<MaskSuggestion> fill_mask(const TokenSequence& tokens,
                                                std::size_t mask_index,
                                                std::size_t top_k) const = 0;

  // Prefix that marks subword continuation fragments in this backend's
  // vocabulary (e.g. "##"). Empty when the backend never emits subwords.
  virtual std::string subword_marker() const = 0;
};

// Static per-token word vectors. Never returns a zero vector: tokens outside
// the vocabulary map to a deterministic nonzero fallback so downstream
// cosines stay defined.
class WordVectors {
 public:
  virtual ~WordVectors() = default;
  virtual Vector vector(std::string_view token) const = 0;
  virtual Eigen::Index dim() const = 0;
};

// Cross-lingual sentence embeddings: texts in different languages land in
// one shared space so source/target similarity is a plain cosine.
class CrossLingualEncoder {
 public:
  virtual ~CrossLingualEncoder() = default;
  // Throws std::runtime_error when the text cannot be encoded (e.g. it
  // contains no tokens, or an adapter has no entry for it).
  virtual Vector encode(std::string_view text, std::string_view lang) const = 0;
  virtual Eigen::Index dim() const = 0;
};

// Contextual token encoder over a joint source/target layout:
//   [BOS] source tokens [SEP] target tokens [EOS]
// Row i of the returned matrix embeds position i; the marker rows count
// toward the total, so rows() = |source| + |target| + marker_slots().
class ContextualEncoder {
 public:
  virtual ~ContextualEncoder() = default;

  // Throws std::invalid_argument when either sequence is empty and
  // std::length_error (stating the capacity) when the joint length exceeds
  // capacity().
  virtual Matrix encode_pair(const TokenSequence& source,
                             const TokenSequence& target) const = 0;
  virtual Eigen::Index dim() const = 0;
  virtual std::size_t marker_slots() const = 0;
  virtual std::size_t capacity() const = 0;
};

// The four backends the pipeline is wired through, plus a fingerprint of the
// configuration that built them. Checkpoints record the fingerprint so a
// model is never silently evaluated under different features than it was
// trained on.
struct EncoderBundle {
  std::shared_ptr<const MaskFiller> mask_filler;
  std::shared_ptr<const WordVectors> word_vectors;
  std::shared_ptr<const CrossLingualEncoder> xsim;
  std::shared_ptr<const ContextualEncoder> contextual;
  std::string fingerprint;
};

// Arithmetic mean of the per-token word vectors. Throws
// std::invalid_argument on an empty sequence.
Vector sentence_vector(const TokenSequence& tokens, const WordVectors& backend);

}  // namespace otut

#endif  // OTUT_ENCODERS_HPP_
