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

#include "otut/checkpoint.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "otut/base64.hpp"

namespace otut {
namespace {

// Matrices travel row-major regardless of Eigen's storage order, one
// little-endian float64 per entry.
std::string encode_matrix(const Matrix& m) {
  std::vector<std::uint8_t> bytes;
  bytes.resize(static_cast<std::size_t>(m.size()) * sizeof(double));
  std::size_t off = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double v = m(r, c);
      std::uint64_t u = 0;
      std::memcpy(&u, &v, sizeof(u));
      for (int b = 0; b < 8; ++b) {
        bytes[off++] = static_cast<std::uint8_t>((u >> (8 * b)) & 0xff);
      }
    }
  }
  return base64_encode(bytes.data(), bytes.size());
}

Matrix decode_matrix(const std::string& data, Eigen::Index rows,
                     Eigen::Index cols, const std::string& name) {
  const std::vector<std::uint8_t> bytes = base64_decode(data);
  const std::size_t want =
      static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) *
      sizeof(double);
  if (bytes.size() != want) {
    throw std::runtime_error("checkpoint: parameter \"" + name + "\" holds " +
                             std::to_string(bytes.size()) +
                             " bytes, expected " + std::to_string(want));
  }
  Matrix m(rows, cols);
  std::size_t off = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      std::uint64_t u = 0;
      for (int b = 0; b < 8; ++b) {
        u |= static_cast<std::uint64_t>(bytes[off++]) << (8 * b);
      }
      double v = 0.0;
      std::memcpy(&v, &u, sizeof(v));
      m(r, c) = v;
    }
  }
  return m;
}

void check_classes(const nlohmann::json& classes) {
  const bool ok = classes.is_object() && classes.size() == 3 &&
                  classes.contains("NE") && classes["NE"] == 0 &&
                  classes.contains("OT") && classes["OT"] == 1 &&
                  classes.contains("UT") && classes["UT"] == 2;
  if (!ok) {
    throw std::runtime_error(
        "checkpoint: unexpected class mapping, want NE=0 OT=1 UT=2");
  }
}

}  // namespace

void save_checkpoint(const std::string& path, const Model& model) {
  if (!model.trained || !model.head) {
    throw std::runtime_error("save_checkpoint: model has not been trained");
  }
  nlohmann::ordered_json doc;
  doc["format"] = kCheckpointFormat;
  doc["arch"] = to_json(model.config);
  doc["classes"] = {{"NE", 0}, {"OT", 1}, {"UT", 2}};
  doc["encoder_fingerprint"] = model.encoder_fingerprint;
  doc["train_seed"] = model.train_seed;
  doc["input_dim"] = model.input_dim;
  auto params = nlohmann::ordered_json::array();
  // parameters() has a stable order per architecture; the loader rebuilds
  // the head and walks the same order.
  for (const Tensor* t : model.head->parameters()) {
    nlohmann::ordered_json p;
    p["name"] = t->name;
    p["rows"] = t->value.rows();
    p["cols"] = t->value.cols();
    p["data"] = encode_matrix(t->value);
    params.push_back(std::move(p));
  }
  doc["params"] = std::move(params);

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("save_checkpoint: cannot write " + path);
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("save_checkpoint: write failed for " + path);
  }
}

Model load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("load_checkpoint: cannot read " + path);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("load_checkpoint: " + path + ": " +
                             std::string(e.what()));
  }
  if (!doc.is_object() || doc.value("format", "") != kCheckpointFormat) {
    throw std::runtime_error("load_checkpoint: " + path +
                             " is not an otut-checkpoint-v1 file");
  }
  check_classes(doc.at("classes"));

  Model model;
  model.config = head_config_from_json(doc.at("arch"));
  model.encoder_fingerprint =
      doc.at("encoder_fingerprint").get<std::string>();
  model.train_seed = doc.at("train_seed").get<std::uint64_t>();
  model.input_dim = doc.at("input_dim").get<Eigen::Index>();
  if (model.input_dim <= 0) {
    throw std::runtime_error("load_checkpoint: input_dim must be positive");
  }
  model.head = build_head(model.config, model.input_dim);

  std::vector<Tensor*> params = model.head->parameters();
  const auto& stored = doc.at("params");
  if (!stored.is_array() || stored.size() != params.size()) {
    throw std::runtime_error(
        "load_checkpoint: expected " + std::to_string(params.size()) +
        " parameter blobs, found " +
        std::to_string(stored.is_array() ? stored.size() : 0));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& p = stored[i];
    const std::string name = p.at("name").get<std::string>();
    if (name != params[i]->name) {
      throw std::runtime_error("load_checkpoint: parameter " +
                               std::to_string(i) + " is \"" + name +
                               "\", expected \"" + params[i]->name + "\"");
    }
    const auto rows = p.at("rows").get<Eigen::Index>();
    const auto cols = p.at("cols").get<Eigen::Index>();
    if (rows != params[i]->value.rows() || cols != params[i]->value.cols()) {
      throw std::runtime_error(
          "load_checkpoint: parameter \"" + name + "\" has shape " +
          std::to_string(rows) + "x" + std::to_string(cols) + ", expected " +
          std::to_string(params[i]->value.rows()) + "x" +
          std::to_string(params[i]->value.cols()));
    }
    params[i]->value = decode_matrix(p.at("data").get<std::string>(), rows,
                                     cols, name);
  }
  model.trained = true;
  return model;
}

Model load_checkpoint(const std::string& path,
                      const std::string& expected_fingerprint) {
  Model model = load_checkpoint(path);
  if (model.encoder_fingerprint != expected_fingerprint) {
    throw std::runtime_error(
        "load_checkpoint: encoder fingerprint mismatch: checkpoint was "
        "trained with " +
        model.encoder_fingerprint + " but the configured encoders are " +
        expected_fingerprint);
  }
  return model;
}

}  // namespace otut
