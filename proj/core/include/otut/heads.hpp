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
// The four classifier heads over frozen contextual embeddings:
//   weighted_gru: GRU encoder, final-state pooling, linear; trained with
//                 class-weighted loss.
//   gru_cnn:      GRU encoder, one convolution per configured kernel size
//                 over its state sequence, global max pooling, linear.
//   cnn:          one extra convolution layer than gru_cnn (kernel sizes
//                 cycle) directly over the embeddings, global max pooling,
//                 linear.
//   hybrid:       gru_cnn branch and cnn branch side by side, pooled
//                 representations concatenated into one shared linear.
// Dropout (inverted, training only) acts on the pooled representation.

#ifndef OTUT_HEADS_HPP_
#define OTUT_HEADS_HPP_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "otut/nn.hpp"

namespace otut {

struct HeadConfig {
  std::string arch = "hybrid";
  int hidden_dim = 128;
  int gru_layers = 1;
  int cnn_channels = 64;
  std::vector<int> kernel_sizes = {3, 4, 5};
  double dropout = 0.1;
  // Loss weights per class for the weighted_gru arch. Unset means "derive
  // from the training set as inverse class frequencies".
  std::optional<std::array<double, 3>> class_weights;
};

// Names of the supported architectures, in canonical order.
const std::vector<std::string>& known_archs();

// Throws std::invalid_argument on unknown arch (the message lists the valid
// names), non-positive dims, dropout outside [0,1), empty kernel list, or
// non-positive class weights.
void validate(const HeadConfig& cfg);

nlohmann::ordered_json to_json(const HeadConfig& cfg);
HeadConfig head_config_from_json(const nlohmann::json& block);

// Opaque per-sample activation record produced by forward_train and
// consumed by backward.
struct ForwardCache {
  virtual ~ForwardCache() = default;
};

class Head {
 public:
  virtual ~Head() = default;

  // All trainable tensors in a stable, named order (checkpoint layout).
  virtual std::vector<Tensor*> parameters() = 0;

  // Inference-mode logits for one encoded sample (rows = positions).
  virtual Vector logits(const Matrix& x) const = 0;

  // Training-mode forward: applies dropout using `rng` and records the
  // activations needed for backward.
  virtual Vector forward_train(const Matrix& x, Rng& rng,
                               std::unique_ptr<ForwardCache>* cache) const = 0;

  // Accumulates parameter gradients for one sample given the loss gradient
  // at the logits. The cache must come from forward_train on this head.
  virtual void backward(const ForwardCache& cache, const Vector& dlogits) = 0;
};

// Constructs the head named by cfg.arch with seeded uniform initialization.
// Throws std::invalid_argument on an unknown arch, listing the valid names.
std::unique_ptr<Head> build_head(const HeadConfig& cfg, Eigen::Index input_dim,
                                 std::uint64_t init_seed = 0);

}  // namespace otut

#endif  // OTUT_HEADS_HPP_
