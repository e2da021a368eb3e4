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

#include "otut/reference_backends.hpp"

#include <algorithm>
#include <stdexcept>

#include "otut/hash.hpp"
#include "otut/tokenizer.hpp"

namespace otut {

namespace {

// Sub-seed tags keep the word, sentence, contextual, and marker hash spaces
// decorrelated even when the user supplies one global seed.
std::uint64_t tag_seed(std::uint64_t seed, std::string_view tag) {
  return mix64(seed ^ fnv1a64(tag));
}

}  // namespace

Vector hashed_token_vector(std::string_view token, std::uint64_t seed,
                           Eigen::Index dim) {
  if (dim <= 0) throw std::invalid_argument("hashed_token_vector: dim <= 0");
  // STX/ETX boundary bytes make edge trigrams distinct from interior ones.
  std::string padded;
  padded.reserve(token.size() + 2);
  padded.push_back('\x02');
  padded.append(token);
  padded.push_back('\x03');

  Vector acc = Vector::Zero(dim);
  const std::size_t n = padded.size();
  if (n >= 3) {
    for (std::size_t i = 0; i + 3 <= n; ++i) {
      std::uint64_t h =
          mix64(fnv1a64(std::string_view(padded).substr(i, 3)) ^ seed);
      Eigen::Index bucket = static_cast<Eigen::Index>(h % dim);
      acc[bucket] += ((h >> 32) & 1) ? 1.0 : -1.0;
    }
  } else {
    std::uint64_t h = mix64(fnv1a64(padded) ^ seed);
    acc[static_cast<Eigen::Index>(h % dim)] += 1.0;
  }
  if (acc.isZero(0.0)) {
    // Signs cancelled exactly; fall back to one seeded bucket so the vector
    // is never zero (a zero vector would poison downstream cosines).
    std::uint64_t h = mix64(fnv1a64(padded) ^ seed ^ 0x9e3779b97f4a7c15ULL);
    acc[static_cast<Eigen::Index>(h % dim)] = 1.0;
  }
  return acc / acc.norm();
}

UnigramMaskFiller::UnigramMaskFiller(
    const std::map<std::string, std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (const auto& [token, count] : counts) total += count;
  ranked_.reserve(counts.size());
  for (const auto& [token, count] : counts) {
    if (count == 0) continue;
    ranked_.push_back(
        {token, static_cast<double>(count) / static_cast<double>(total)});
  }
  std::sort(ranked_.begin(), ranked_.end(),
            [](const MaskSuggestion& a, const MaskSuggestion& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.token < b.token;
            });
}

UnigramMaskFiller UnigramMaskFiller::from_sources(
    const std::vector<SubtitlePair>& pairs) {
  std::map<std::string, std::uint64_t> counts;
  for (const SubtitlePair& pair : pairs) {
    TokenSequence seq = tokenize(pair.source_text, pair.source_lang);
    for (const std::string& token : seq.tokens) ++counts[token];
  }
  return UnigramMaskFiller(counts);
}

std::vector<MaskSuggestion> UnigramMaskFiller::fill_mask(
    const TokenSequence& tokens, std::size_t mask_index,
    std::size_t top_k) const {
  if (mask_index > tokens.size()) {
    throw std::out_of_range(
        "fill_mask: mask index " + std::to_string(mask_index) +
        " out of range for sequence of length " + std::to_string(tokens.size()));
  }
  std::size_t n = std::min(top_k, ranked_.size());
  return std::vector<MaskSuggestion>(ranked_.begin(), ranked_.begin() + n);
}

HashedWordVectors::HashedWordVectors(std::uint64_t seed, Eigen::Index dim)
    : seed_(tag_seed(seed, "word_vectors")), dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("HashedWordVectors: dim <= 0");
}

Vector HashedWordVectors::vector(std::string_view token) const {
  return hashed_token_vector(token, seed_, dim_);
}

HashedCrossLingual::HashedCrossLingual(std::uint64_t seed, Eigen::Index dim)
    : seed_(tag_seed(seed, "xsim")), dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("HashedCrossLingual: dim <= 0");
}

Vector HashedCrossLingual::encode(std::string_view text,
                                  std::string_view lang) const {
  TokenSequence seq = tokenize(text, std::string(lang));
  if (seq.empty()) {
    throw std::runtime_error("cross-lingual encoder: text has no tokens");
  }
  Vector sum = Vector::Zero(dim_);
  for (const std::string& token : seq.tokens) {
    sum += hashed_token_vector(token, seed_, dim_);
  }
  sum /= static_cast<double>(seq.size());
  double norm = sum.norm();
  if (norm == 0.0) {
    // Token vectors cancelled exactly; hash the whole text instead.
    return hashed_token_vector(text, seed_, dim_);
  }
  return sum / norm;
}

WindowedHashContextual::WindowedHashContextual(std::uint64_t seed,
                                               Eigen::Index dim,
                                               std::size_t capacity,
                                               std::size_t window)
    : seed_(tag_seed(seed, "contextual")),
      dim_(dim),
      capacity_(capacity),
      window_(window) {
  if (dim <= 0) throw std::invalid_argument("WindowedHashContextual: dim <= 0");
  if (capacity < 3 + 2) {
    throw std::invalid_argument(
        "WindowedHashContextual: capacity too small for markers plus tokens");
  }
}

Matrix WindowedHashContextual::encode_pair(const TokenSequence& source,
                                           const TokenSequence& target) const {
  if (source.empty() || target.empty()) {
    throw std::invalid_argument(
        "contextual encoder: source and target must be non-empty");
  }
  const std::size_t rows = source.size() + target.size() + marker_slots();
  if (rows > capacity_) {
    throw std::length_error(
        "contextual encoder: joint sequence of " + std::to_string(rows) +
        " positions exceeds capacity " + std::to_string(capacity_));
  }
  const std::uint64_t marker_seed = mix64(seed_ ^ fnv1a64("marker"));

  Matrix base(rows, dim_);
  std::size_t r = 0;
  base.row(r++) = hashed_token_vector("<bos>", marker_seed, dim_);
  for (const std::string& token : source.tokens) {
    base.row(r++) = hashed_token_vector(token, seed_, dim_);
  }
  base.row(r++) = hashed_token_vector("<sep>", marker_seed, dim_);
  for (const std::string& token : target.tokens) {
    base.row(r++) = hashed_token_vector(token, seed_, dim_);
  }
  base.row(r++) = hashed_token_vector("<eos>", marker_seed, dim_);

  // Blend identity with the local neighborhood average: context shifts the
  // embedding, token identity still dominates.
  Matrix out(rows, dim_);
  const auto last = static_cast<std::ptrdiff_t>(rows) - 1;
  for (std::ptrdiff_t i = 0; i <= last; ++i) {
    std::ptrdiff_t lo = std::max<std::ptrdiff_t>(
        0, i - static_cast<std::ptrdiff_t>(window_));
    std::ptrdiff_t hi =
        std::min(last, i + static_cast<std::ptrdiff_t>(window_));
    Vector mean = Vector::Zero(dim_);
    for (std::ptrdiff_t j = lo; j <= hi; ++j) mean += base.row(j);
    mean /= static_cast<double>(hi - lo + 1);
    out.row(i) = 0.5 * base.row(i).transpose() + 0.5 * mean;
  }
  return out;
}

}  // namespace otut
