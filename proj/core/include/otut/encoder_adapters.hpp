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
// Adapters that serve precomputed outputs of real models from files, behind
// the same four interfaces as the reference backends. No model is ever run
// in-process: word vectors come from an embeddings text file, mask-fill
// scores from a frequency table, sentence vectors from a JSONL dump, and
// contextual matrices from a binary store. Files are loaded once at
// construction (startup probing), never inside synthesis loops.

#ifndef OTUT_ENCODER_ADAPTERS_HPP_
#define OTUT_ENCODER_ADAPTERS_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "otut/encoders.hpp"
#include "otut/reference_backends.hpp"

namespace otut {

// Word vectors from a text file of "token v1 v2 ... vd" lines (the common
// distribution format for pretrained embeddings). Out-of-vocabulary tokens
// fall back to the seeded hashed vector so results stay nonzero and
// deterministic. Malformed lines are a fatal load error with line number.
class FileWordVectors : public WordVectors {
 public:
  FileWordVectors(const std::string& path, std::uint64_t fallback_seed);
  Vector vector(std::string_view token) const override;
  Eigen::Index dim() const override { return dim_; }

 private:
  std::unordered_map<std::string, Vector> table_;
  std::uint64_t fallback_seed_;
  Eigen::Index dim_ = 0;
};

// Builds a unigram mask filler from a "token count" table dumped by an
// external tool (one entry per line, whitespace separated).
UnigramMaskFiller mask_filler_from_frequency_file(const std::string& path);

// Cross-lingual sentence vectors from a JSONL dump of
// {"text": str, "lang": str, "vec": [floats]} records. Lookup is keyed by
// (lang, tokenized text joined with single spaces) so spacing variants of
// the same sentence resolve to one entry. A text without an entry is a
// backend failure (std::runtime_error), not a silent fallback: seed
// filtering must not mix precomputed and improvised similarities.
class FileSentenceVectors : public CrossLingualEncoder {
 public:
  explicit FileSentenceVectors(const std::string& path);
  Vector encode(std::string_view text, std::string_view lang) const override;
  Eigen::Index dim() const override { return dim_; }

 private:
  std::unordered_map<std::string, Vector> table_;
  Eigen::Index dim_ = 0;
};

// Key under which an embedding store files a (source, target) pair; both
// arguments are the token sequences joined with single spaces.
std::uint64_t embedding_store_key(std::string_view src_joined,
                                  std::string_view tgt_joined);

// One record of a contextual embedding store.
struct EmbeddingStoreRecord {
  std::string src_joined;
  std::string tgt_joined;
  Matrix embedding;  // (|src| + |tgt| + marker_slots) x dim
};

// Writes the binary store consumed by FileContextualEncoder. Values are
// stored as little-endian float32 (the native precision of exported model
// activations).
void write_embedding_store(const std::string& path, Eigen::Index dim,
                           std::size_t marker_slots, std::size_t capacity,
                           const std::vector<EmbeddingStoreRecord>& records);

// Contextual matrices precomputed by an external model and dumped with
// write_embedding_store. encode_pair looks the pair up by key; a pair
// absent from the store is a backend failure.
class FileContextualEncoder : public ContextualEncoder {
 public:
  explicit FileContextualEncoder(const std::string& path);

  Matrix encode_pair(const TokenSequence& source,
                     const TokenSequence& target) const override;
  Eigen::Index dim() const override { return dim_; }
  std::size_t marker_slots() const override { return marker_slots_; }
  std::size_t capacity() const override { return capacity_; }

 private:
  std::unordered_map<std::uint64_t, Matrix> table_;
  Eigen::Index dim_ = 0;
  std::size_t marker_slots_ = 0;
  std::size_t capacity_ = 0;
};

}  // namespace otut

#endif  // OTUT_ENCODER_ADAPTERS_HPP_
