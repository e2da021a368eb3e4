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
// The single JSON config document the CLI reads, one block per pipeline
// stage. Every block is optional and falls back to defaults; unknown keys
// anywhere are rejected so typos fail loudly instead of silently running
// with defaults.

#ifndef OTUT_CONFIG_HPP_
#define OTUT_CONFIG_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "otut/encoder_factory.hpp"
#include "otut/heads.hpp"
#include "otut/seed_filter.hpp"
#include "otut/synthesis.hpp"
#include "otut/train.hpp"

namespace otut {

struct PipelineConfig {
  SeedFilterConfig seed_filter;
  EncoderConfig encoder;
  SynthesisConfig synthesis;
  HeadConfig head;
  TrainConfig train;
};

// Blocks live under the keys "seed_filter", "encoder", "synthesis",
// "head" and "train".
PipelineConfig pipeline_config_from_json(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const PipelineConfig& cfg);

// Reads and parses a config file; throws std::runtime_error naming the
// path on IO or parse failure.
PipelineConfig load_pipeline_config(const std::string& path);

// Hash of the effective (fully defaulted) config document, recorded into
// output manifests so artifacts are traceable to the exact settings.
std::string config_hash(const PipelineConfig& cfg);

}  // namespace otut

#endif  // OTUT_CONFIG_HPP_
