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

#include "otut/encoder_adapters.hpp"

#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "otut/hash.hpp"
#include "otut/tokenizer.hpp"

namespace otut {

namespace {

constexpr char kStoreMagic[8] = {'O', 'T', 'U', 'T', 'E', 'M', 'B', '1'};

std::string join_tokens(const TokenSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += seq.tokens[i];
  }
  return out;
}

std::string sentence_key(std::string_view lang, const std::string& joined) {
  std::string key(lang);
  key.push_back('\t');
  key += joined;
  return key;
}

template <typename T>
void write_le(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::uint64_t bits;
  if constexpr (sizeof(T) == 4) {
    std::uint32_t u;
    std::memcpy(&u, &value, 4);
    bits = u;
  } else {
    std::memcpy(&bits, &value, 8);
  }
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xFF);
  }
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T read_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  in.read(reinterpret_cast<char*>(bytes), sizeof(T));
  if (!in) throw std::runtime_error("embedding store: truncated file");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  }
  T value;
  if constexpr (sizeof(T) == 4) {
    std::uint32_t u = static_cast<std::uint32_t>(bits);
    std::memcpy(&value, &u, 4);
  } else {
    std::memcpy(&value, &bits, 8);
  }
  return value;
}

}  // namespace

FileWordVectors::FileWordVectors(const std::string& path,
                                 std::uint64_t fallback_seed)
    : fallback_seed_(mix64(fallback_seed ^ fnv1a64("word_vectors"))) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string token;
    fields >> token;
    std::vector<double> values;
    double v;
    while (fields >> v) values.push_back(v);
    if (token.empty() || values.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed embedding line");
    }
    if (dim_ == 0) {
      dim_ = static_cast<Eigen::Index>(values.size());
    } else if (static_cast<Eigen::Index>(values.size()) != dim_) {
      throw std::runtime_error(
          path + ":" + std::to_string(line_no) + ": expected " +
          std::to_string(dim_) + " values, got " +
          std::to_string(values.size()));
    }
    table_[token] = Eigen::Map<const Vector>(values.data(), dim_);
  }
  if (dim_ == 0) {
    throw std::runtime_error(path + ": no embeddings found");
  }
}

Vector FileWordVectors::vector(std::string_view token) const {
  auto it = table_.find(std::string(token));
  if (it != table_.end()) return it->second;
  return hashed_token_vector(token, fallback_seed_, dim_);
}

UnigramMaskFiller mask_filler_from_frequency_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<std::string, std::uint64_t> counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string token;
    std::uint64_t count = 0;
    if (!(fields >> token >> count)) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected \"token count\"");
    }
    counts[token] += count;
  }
  return UnigramMaskFiller(counts);
}

FileSentenceVectors::FileSentenceVectors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
    if (!record.contains("text") || !record.contains("lang") ||
        !record.contains("vec") || !record["vec"].is_array()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": record needs \"text\", \"lang\", \"vec\"");
    }
    std::string text = record["text"].get<std::string>();
    std::string lang = record["lang"].get<std::string>();
    std::vector<double> values = record["vec"].get<std::vector<double>>();
    if (values.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": empty vector");
    }
    if (dim_ == 0) {
      dim_ = static_cast<Eigen::Index>(values.size());
    } else if (static_cast<Eigen::Index>(values.size()) != dim_) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": inconsistent vector dimension");
    }
    std::string joined = join_tokens(tokenize(text, lang));
    table_[sentence_key(lang, joined)] =
        Eigen::Map<const Vector>(values.data(), dim_);
  }
  if (dim_ == 0) throw std::runtime_error(path + ": no sentence vectors found");
}

Vector FileSentenceVectors::encode(std::string_view text,
                                   std::string_view lang) const {
  std::string joined = join_tokens(tokenize(text, std::string(lang)));
  auto it = table_.find(sentence_key(lang, joined));
  if (it == table_.end()) {
    throw std::runtime_error(
        "sentence-vector store has no entry for lang \"" + std::string(lang) +
        "\" text \"" + joined + "\"");
  }
  return it->second;
}

std::uint64_t embedding_store_key(std::string_view src_joined,
                                  std::string_view tgt_joined) {
  return mix64(fnv1a64(src_joined) ^ mix64(fnv1a64(tgt_joined)));
}

void write_embedding_store(const std::string& path, Eigen::Index dim,
                           std::size_t marker_slots, std::size_t capacity,
                           const std::vector<EmbeddingStoreRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(kStoreMagic, sizeof(kStoreMagic));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(dim));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(marker_slots));
  write_le<std::uint64_t>(out, capacity);
  write_le<std::uint64_t>(out, records.size());
  for (const EmbeddingStoreRecord& record : records) {
    if (record.embedding.cols() != dim) {
      throw std::invalid_argument("embedding store record has wrong dim");
    }
    write_le<std::uint64_t>(
        out, embedding_store_key(record.src_joined, record.tgt_joined));
    write_le<std::uint32_t>(out,
                            static_cast<std::uint32_t>(record.embedding.rows()));
    for (Eigen::Index r = 0; r < record.embedding.rows(); ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        write_le<float>(out, static_cast<float>(record.embedding(r, c)));
      }
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

FileContextualEncoder::FileContextualEncoder(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[sizeof(kStoreMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kStoreMagic, sizeof(magic)) != 0) {
    throw std::runtime_error(path + ": not an embedding store");
  }
  dim_ = static_cast<Eigen::Index>(read_le<std::uint32_t>(in));
  marker_slots_ = read_le<std::uint32_t>(in);
  capacity_ = read_le<std::uint64_t>(in);
  std::uint64_t count = read_le<std::uint64_t>(in);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t key = read_le<std::uint64_t>(in);
    std::uint32_t rows = read_le<std::uint32_t>(in);
    Matrix m(rows, dim_);
    for (std::uint32_t r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < dim_; ++c) {
        m(r, c) = static_cast<double>(read_le<float>(in));
      }
    }
    table_[key] = std::move(m);
  }
}

Matrix FileContextualEncoder::encode_pair(const TokenSequence& source,
                                          const TokenSequence& target) const {
  if (source.empty() || target.empty()) {
    throw std::invalid_argument(
        "contextual encoder: source and target must be non-empty");
  }
  const std::size_t rows = source.size() + target.size() + marker_slots_;
  if (rows > capacity_) {
    throw std::length_error(
        "contextual encoder: joint sequence of " + std::to_string(rows) +
        " positions exceeds capacity " + std::to_string(capacity_));
  }
  std::string src_joined = join_tokens(source);
  std::string tgt_joined = join_tokens(target);
  auto it = table_.find(embedding_store_key(src_joined, tgt_joined));
  if (it == table_.end()) {
    throw std::runtime_error("embedding store has no entry for pair \"" +
                             src_joined + "\" / \"" + tgt_joined + "\"");
  }
  if (static_cast<std::size_t>(it->second.rows()) != rows) {
    throw std::runtime_error(
        "embedding store entry has " + std::to_string(it->second.rows()) +
        " rows, expected " + std::to_string(rows));
  }
  return it->second;
}

}  // namespace otut
