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

#include "otut/config.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

#include "otut/hash.hpp"

namespace otut {

PipelineConfig pipeline_config_from_json(const nlohmann::json& doc) {
  static const std::vector<std::string> known = {
      "seed_filter", "encoder", "synthesis", "head", "train"};
  if (!doc.is_object()) {
    throw std::invalid_argument("pipeline config must be a JSON object");
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const std::string& k : known) ok = ok || k == it.key();
    if (!ok) {
      throw std::invalid_argument("pipeline config: unknown key \"" +
                                  it.key() + "\"");
    }
  }
  PipelineConfig cfg;
  if (doc.contains("seed_filter")) {
    cfg.seed_filter = seed_filter_config_from_json(doc["seed_filter"]);
  }
  if (doc.contains("encoder")) {
    cfg.encoder = encoder_config_from_json(doc["encoder"]);
  }
  if (doc.contains("synthesis")) {
    cfg.synthesis = synthesis_config_from_json(doc["synthesis"]);
  }
  if (doc.contains("head")) {
    cfg.head = head_config_from_json(doc["head"]);
  }
  if (doc.contains("train")) {
    cfg.train = train_config_from_json(doc["train"]);
  }
  return cfg;
}

nlohmann::ordered_json to_json(const PipelineConfig& cfg) {
  nlohmann::ordered_json j;
  j["seed_filter"] = to_json(cfg.seed_filter);
  j["encoder"] = to_json(cfg.encoder);
  j["synthesis"] = to_json(cfg.synthesis);
  j["head"] = to_json(cfg.head);
  j["train"] = to_json(cfg.train);
  return j;
}

PipelineConfig load_pipeline_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read config file " + path);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  try {
    return pipeline_config_from_json(doc);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string config_hash(const PipelineConfig& cfg) {
  return hex64(fnv1a64(to_json(cfg).dump()));
}

}  // namespace otut
