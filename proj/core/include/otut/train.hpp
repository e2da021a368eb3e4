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
// Mini-batch Adam training of a classifier head over frozen contextual
// embeddings, with early stopping on validation accuracy. Samples are
// encoded once up front; every pass afterwards is pure head arithmetic.
// Training is single-threaded and fully seeded, so a (dataset, config)
// pair always yields the same model.

#ifndef OTUT_TRAIN_HPP_
#define OTUT_TRAIN_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include <nlohmann/json.hpp>

#include "otut/encoders.hpp"
#include "otut/heads.hpp"
#include "otut/labels.hpp"
#include "otut/synthesis.hpp"

namespace otut {

struct TrainConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int batch_size = 32;
  int max_epochs = 50;
  // Consecutive epochs without a new best validation accuracy before
  // training stops.
  int patience = 10;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument on non-positive rates/sizes or betas outside
// [0, 1).
void validate(const TrainConfig& cfg);

nlohmann::ordered_json to_json(const TrainConfig& cfg);
TrainConfig train_config_from_json(const nlohmann::json& block);

struct EpochStats {
  double train_loss = 0.0;
  double train_accuracy = 0.0;
  double val_loss = 0.0;
  double val_accuracy = 0.0;
};

struct TrainHistory {
  std::vector<EpochStats> epochs;
  // 1-based epoch whose parameters the returned model carries.
  std::size_t best_epoch = 0;
};

// A trained (or still-blank) classifier together with everything needed to
// reuse it: the head architecture, the input width it was built for, and
// the fingerprint of the encoder configuration its inputs came from.
struct Model {
  HeadConfig config;
  std::unique_ptr<Head> head;
  Eigen::Index input_dim = 0;
  bool trained = false;
  std::string encoder_fingerprint;
  std::uint64_t train_seed = 0;
};

struct Prediction {
  ClassLabel label = ClassLabel::NE;
  std::array<double, kNumClasses> probs{};
};

// Trains a fresh head on the given sets. Loss is class-weighted
// cross-entropy; weights come from head_cfg.class_weights when set,
// otherwise the weighted_gru arch derives inverse class frequencies from
// the training set and every other arch trains unweighted. Keeps the
// parameters of the best-validation-accuracy epoch. Throws
// std::invalid_argument on an empty set and std::runtime_error when the
// loss stops being finite.
Model train(const std::vector<LabeledSample>& train_set,
            const std::vector<LabeledSample>& validation_set,
            const EncoderBundle& bundle, const HeadConfig& head_cfg,
            const TrainConfig& train_cfg, TrainHistory* history = nullptr);

// Encodes the pair with the bundle's contextual backend and runs the head.
// Probabilities sum to 1; ties in the argmax resolve to the lowest class
// index. Throws std::runtime_error on an untrained model or when the
// bundle's fingerprint differs from the one the model was trained with.
Prediction predict(const Model& model, const SubtitlePair& pair,
                   const EncoderBundle& bundle);

}  // namespace otut

#endif  // OTUT_TRAIN_HPP_
