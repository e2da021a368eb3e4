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
// Turns a filtered parallel corpus into a labeled train/validation dataset
// with a configured class mix (over-translation, under-translation, no
// error) and subtle/gross granularity mix, plus a manifest describing what
// was built. Every sample's randomness is derived from (seed, pair id,
// role), so the output is identical across runs and worker counts.

#ifndef OTUT_DATASET_HPP_
#define OTUT_DATASET_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "otut/encoders.hpp"
#include "otut/synthesis.hpp"

namespace otut {

struct AssembledDataset {
  std::vector<LabeledSample> train;
  std::vector<LabeledSample> validation;
  nlohmann::ordered_json manifest;
};

// Draws cfg.sample_count labeled samples from the corpus: class quotas are
// rounded from the configured mix, granularity quotas from
// subtle_fraction_of_errors, and pairs are consumed in corpus order, each
// used at most once. A pair that cannot produce its planned sample (e.g. a
// single-sentence source asked for a gross omission) falls through to the
// next role with open quota. The split is seeded and stratified by class.
// Throws std::invalid_argument on a zero sample_count and
// std::runtime_error when the corpus runs out, stating the approximate
// achievable maximum. `workers` only parallelizes sample generation; the
// result is the same for any value.
AssembledDataset assemble_dataset(const std::vector<SubtitlePair>& corpus,
                                  const EncoderBundle& bundle,
                                  const SynthesisConfig& cfg, int workers = 1);

// One dataset row: {"id","src","tgt","tgt_lang","label","granularity",
// "edits","orig_src","sim"}. "sim" is omitted for NE samples and defaults
// to 1 when read back.
nlohmann::ordered_json sample_to_json(const LabeledSample& sample);
LabeledSample sample_from_json(const nlohmann::json& row);

void write_samples_jsonl(const std::string& path,
                         const std::vector<LabeledSample>& samples);

// Strict reader for tool-written dataset files: any malformed line throws
// std::runtime_error naming "path:line".
std::vector<LabeledSample> read_samples_jsonl(const std::string& path);

}  // namespace otut

#endif  // OTUT_DATASET_HPP_
