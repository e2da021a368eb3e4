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

#include "otut/heads.hpp"

#include <stdexcept>

#include "otut/hash.hpp"
#include "otut/labels.hpp"

namespace otut {

namespace {

// Shared building block: a stack of GRU layers followed by one convolution
// per kernel size with ReLU, then global max pooling. Used by gru_cnn and
// the first hybrid branch.
struct GruConvBranch {
  std::vector<GruLayer> grus;
  std::vector<Conv1dLayer> convs;

  GruConvBranch(const std::string& prefix, const HeadConfig& cfg,
                Eigen::Index input_dim, Rng& rng) {
    Eigen::Index in = input_dim;
    for (int l = 0; l < cfg.gru_layers; ++l) {
      grus.emplace_back(prefix + "gru" + std::to_string(l), in,
                        cfg.hidden_dim, rng);
      in = cfg.hidden_dim;
    }
    for (std::size_t i = 0; i < cfg.kernel_sizes.size(); ++i) {
      Eigen::Index conv_in = i == 0 ? cfg.hidden_dim : cfg.cnn_channels;
      convs.emplace_back(prefix + "conv" + std::to_string(i), conv_in,
                         cfg.cnn_channels, cfg.kernel_sizes[i], rng);
    }
  }

  struct Cache {
    std::vector<GruLayer::Cache> gru;
    std::vector<Matrix> conv_in;   // input to each conv (pre-conv sequence)
    std::vector<Matrix> conv_raw;  // conv output before ReLU
    std::vector<Eigen::Index> argmax;
    Eigen::Index rows = 0;
  };

  Vector forward(const Matrix& x, Cache* cache) const {
    Matrix seq = x;
    for (std::size_t l = 0; l < grus.size(); ++l) {
      GruLayer::Cache* gc = nullptr;
      if (cache) {
        cache->gru.emplace_back();
        gc = &cache->gru.back();
      }
      seq = grus[l].forward(seq, gc);
    }
    for (std::size_t i = 0; i < convs.size(); ++i) {
      if (cache) cache->conv_in.push_back(seq);
      Matrix raw = convs[i].forward(seq);
      if (cache) cache->conv_raw.push_back(raw);
      seq = relu(raw);
    }
    if (cache) cache->rows = seq.rows();
    return global_max_pool(seq, cache ? &cache->argmax : nullptr);
  }

  void backward(const Cache& cache, const Vector& dpooled) {
    Matrix dseq = global_max_pool_backward(cache.rows, cache.argmax, dpooled);
    for (std::size_t i = convs.size(); i-- > 0;) {
      dseq = relu_backward(cache.conv_raw[i], dseq);
      dseq = convs[i].backward(cache.conv_in[i], dseq);
    }
    for (std::size_t l = grus.size(); l-- > 0;) {
      // dX is only needed below the top layer of a stack.
      dseq = grus[l].backward(cache.gru[l], dseq, l > 0);
    }
  }

  void collect(std::vector<Tensor*>& out) {
    for (GruLayer& g : grus) {
      for (Tensor* t : g.parameters()) out.push_back(t);
    }
    for (Conv1dLayer& c : convs) {
      for (Tensor* t : c.parameters()) out.push_back(t);
    }
  }
};

// Convolution-only branch: one layer more than the configured kernel list,
// cycling through it, directly over the embeddings. Used by cnn and the
// second hybrid branch.
struct ConvBranch {
  std::vector<Conv1dLayer> convs;

  ConvBranch(const std::string& prefix, const HeadConfig& cfg,
             Eigen::Index input_dim, Rng& rng) {
    const std::size_t layers = cfg.kernel_sizes.size() + 1;
    for (std::size_t i = 0; i < layers; ++i) {
      Eigen::Index conv_in = i == 0 ? input_dim : cfg.cnn_channels;
      int kernel = cfg.kernel_sizes[i % cfg.kernel_sizes.size()];
      convs.emplace_back(prefix + "conv" + std::to_string(i), conv_in,
                         cfg.cnn_channels, kernel, rng);
    }
  }

  struct Cache {
    std::vector<Matrix> conv_in;
    std::vector<Matrix> conv_raw;
    std::vector<Eigen::Index> argmax;
    Eigen::Index rows = 0;
  };

  Vector forward(const Matrix& x, Cache* cache) const {
    Matrix seq = x;
    for (std::size_t i = 0; i < convs.size(); ++i) {
      if (cache) cache->conv_in.push_back(seq);
      Matrix raw = convs[i].forward(seq);
      if (cache) cache->conv_raw.push_back(raw);
      seq = relu(raw);
    }
    if (cache) cache->rows = seq.rows();
    return global_max_pool(seq, cache ? &cache->argmax : nullptr);
  }

  void backward(const Cache& cache, const Vector& dpooled) {
    Matrix dseq = global_max_pool_backward(cache.rows, cache.argmax, dpooled);
    for (std::size_t i = convs.size(); i-- > 0;) {
      dseq = relu_backward(cache.conv_raw[i], dseq);
      dseq = convs[i].backward(cache.conv_in[i], dseq);
    }
  }

  void collect(std::vector<Tensor*>& out) {
    for (Conv1dLayer& c : convs) {
      for (Tensor* t : c.parameters()) out.push_back(t);
    }
  }
};

// Pooled representation -> dropout -> linear classifier, shared by every
// head as the final stage.
struct ClassifierStage {
  LinearLayer out;
  double dropout_rate;

  ClassifierStage(Eigen::Index rep_dim, double dropout, Rng& rng)
      : out("out", rep_dim, kNumClasses, rng), dropout_rate(dropout) {}

  struct Cache {
    Vector mask;
    Vector dropped;
  };

  Vector infer(const Vector& pooled) const { return out.forward(pooled); }

  Vector train(const Vector& pooled, Rng& rng, Cache& cache) const {
    cache.mask = dropout_mask(pooled.size(), dropout_rate, rng);
    cache.dropped = pooled.cwiseProduct(cache.mask);
    return out.forward(cache.dropped);
  }

  // Returns the gradient at the pooled representation.
  Vector backward(const Cache& cache, const Vector& dlogits) {
    Vector ddropped = out.backward(cache.dropped, dlogits);
    return ddropped.cwiseProduct(cache.mask);
  }
};

class WeightedGruHead : public Head {
 public:
  WeightedGruHead(const HeadConfig& cfg, Eigen::Index input_dim, Rng& rng)
      : classifier_(cfg.hidden_dim, cfg.dropout, rng) {
    Eigen::Index in = input_dim;
    for (int l = 0; l < cfg.gru_layers; ++l) {
      grus_.emplace_back("gru" + std::to_string(l), in, cfg.hidden_dim, rng);
      in = cfg.hidden_dim;
    }
    // The classifier was built before the GRUs to keep member init order
    // simple, but tensor order below is gru-first, matching checkpoints.
  }

  struct Cache : ForwardCache {
    std::vector<GruLayer::Cache> gru;
    Eigen::Index rows = 0;
    Vector pooled;
    ClassifierStage::Cache cls;
  };

  std::vector<Tensor*> parameters() override {
    std::vector<Tensor*> all;
    for (GruLayer& g : grus_) {
      for (Tensor* t : g.parameters()) all.push_back(t);
    }
    for (Tensor* t : classifier_.out.parameters()) all.push_back(t);
    return all;
  }

  Vector logits(const Matrix& x) const override {
    Matrix seq = x;
    for (const GruLayer& g : grus_) seq = g.forward(seq, nullptr);
    return classifier_.infer(seq.row(seq.rows() - 1).transpose());
  }

  Vector forward_train(const Matrix& x, Rng& rng,
                       std::unique_ptr<ForwardCache>* cache) const override {
    auto c = std::make_unique<Cache>();
    Matrix seq = x;
    for (const GruLayer& g : grus_) {
      c->gru.emplace_back();
      seq = g.forward(seq, &c->gru.back());
    }
    c->rows = seq.rows();
    c->pooled = seq.row(seq.rows() - 1).transpose();
    Vector out = classifier_.train(c->pooled, rng, c->cls);
    *cache = std::move(c);
    return out;
  }

  void backward(const ForwardCache& cache, const Vector& dlogits) override {
    const auto& c = static_cast<const Cache&>(cache);
    Vector dpooled = classifier_.backward(c.cls, dlogits);
    Matrix dseq = Matrix::Zero(c.rows, dpooled.size());
    dseq.row(c.rows - 1) = dpooled.transpose();
    for (std::size_t l = grus_.size(); l-- > 0;) {
      dseq = grus_[l].backward(c.gru[l], dseq, l > 0);
    }
  }

 private:
  std::vector<GruLayer> grus_;
  ClassifierStage classifier_;
};

class GruCnnHead : public Head {
 public:
  GruCnnHead(const HeadConfig& cfg, Eigen::Index input_dim, Rng& rng)
      : branch_("", cfg, input_dim, rng),
        classifier_(cfg.cnn_channels, cfg.dropout, rng) {}

  struct Cache : ForwardCache {
    GruConvBranch::Cache branch;
    ClassifierStage::Cache cls;
  };

  std::vector<Tensor*> parameters() override {
    std::vector<Tensor*> all;
    branch_.collect(all);
    for (Tensor* t : classifier_.out.parameters()) all.push_back(t);
    return all;
  }

  Vector logits(const Matrix& x) const override {
    return classifier_.infer(branch_.forward(x, nullptr));
  }

  Vector forward_train(const Matrix& x, Rng& rng,
                       std::unique_ptr<ForwardCache>* cache) const override {
    auto c = std::make_unique<Cache>();
    Vector pooled = branch_.forward(x, &c->branch);
    Vector out = classifier_.train(pooled, rng, c->cls);
    *cache = std::move(c);
    return out;
  }

  void backward(const ForwardCache& cache, const Vector& dlogits) override {
    const auto& c = static_cast<const Cache&>(cache);
    Vector dpooled = classifier_.backward(c.cls, dlogits);
    branch_.backward(c.branch, dpooled);
  }

 private:
  GruConvBranch branch_;
  ClassifierStage classifier_;
};

class CnnHead : public Head {
 public:
  CnnHead(const HeadConfig& cfg, Eigen::Index input_dim, Rng& rng)
      : branch_("", cfg, input_dim, rng),
        classifier_(cfg.cnn_channels, cfg.dropout, rng) {}

  struct Cache : ForwardCache {
    ConvBranch::Cache branch;
    ClassifierStage::Cache cls;
  };

  std::vector<Tensor*> parameters() override {
    std::vector<Tensor*> all;
    branch_.collect(all);
    for (Tensor* t : classifier_.out.parameters()) all.push_back(t);
    return all;
  }

  Vector logits(const Matrix& x) const override {
    return classifier_.infer(branch_.forward(x, nullptr));
  }

  Vector forward_train(const Matrix& x, Rng& rng,
                       std::unique_ptr<ForwardCache>* cache) const override {
    auto c = std::make_unique<Cache>();
    Vector pooled = branch_.forward(x, &c->branch);
    Vector out = classifier_.train(pooled, rng, c->cls);
    *cache = std::move(c);
    return out;
  }

  void backward(const ForwardCache& cache, const Vector& dlogits) override {
    const auto& c = static_cast<const Cache&>(cache);
    Vector dpooled = classifier_.backward(c.cls, dlogits);
    branch_.backward(c.branch, dpooled);
  }

 private:
  ConvBranch branch_;
  ClassifierStage classifier_;
};

class HybridHead : public Head {
 public:
  HybridHead(const HeadConfig& cfg, Eigen::Index input_dim, Rng& rng)
      : recurrent_("m1.", cfg, input_dim, rng),
        convolutional_("m2.", cfg, input_dim, rng),
        classifier_(2 * cfg.cnn_channels, cfg.dropout, rng),
        channels_(cfg.cnn_channels) {}

  struct Cache : ForwardCache {
    GruConvBranch::Cache m1;
    ConvBranch::Cache m2;
    ClassifierStage::Cache cls;
  };

  std::vector<Tensor*> parameters() override {
    std::vector<Tensor*> all;
    recurrent_.collect(all);
    convolutional_.collect(all);
    for (Tensor* t : classifier_.out.parameters()) all.push_back(t);
    return all;
  }

  Vector logits(const Matrix& x) const override {
    Vector joint(2 * channels_);
    joint << recurrent_.forward(x, nullptr), convolutional_.forward(x, nullptr);
    return classifier_.infer(joint);
  }

  Vector forward_train(const Matrix& x, Rng& rng,
                       std::unique_ptr<ForwardCache>* cache) const override {
    auto c = std::make_unique<Cache>();
    Vector joint(2 * channels_);
    joint << recurrent_.forward(x, &c->m1), convolutional_.forward(x, &c->m2);
    Vector out = classifier_.train(joint, rng, c->cls);
    *cache = std::move(c);
    return out;
  }

  void backward(const ForwardCache& cache, const Vector& dlogits) override {
    const auto& c = static_cast<const Cache&>(cache);
    Vector djoint = classifier_.backward(c.cls, dlogits);
    recurrent_.backward(c.m1, djoint.head(channels_));
    convolutional_.backward(c.m2, djoint.tail(channels_));
  }

 private:
  GruConvBranch recurrent_;
  ConvBranch convolutional_;
  ClassifierStage classifier_;
  Eigen::Index channels_;
};

}  // namespace

const std::vector<std::string>& known_archs() {
  static const std::vector<std::string> archs = {"weighted_gru", "gru_cnn",
                                                 "cnn", "hybrid"};
  return archs;
}

void validate(const HeadConfig& cfg) {
  bool known = false;
  for (const std::string& a : known_archs()) known = known || a == cfg.arch;
  if (!known) {
    std::string valid;
    for (const std::string& a : known_archs()) {
      if (!valid.empty()) valid += ", ";
      valid += a;
    }
    throw std::invalid_argument("unknown arch \"" + cfg.arch +
                                "\" (valid: " + valid + ")");
  }
  if (cfg.hidden_dim <= 0 || cfg.cnn_channels <= 0 || cfg.gru_layers <= 0) {
    throw std::invalid_argument("head config: dims must be positive");
  }
  if (cfg.kernel_sizes.empty()) {
    throw std::invalid_argument("head config: kernel_sizes must be non-empty");
  }
  for (int k : cfg.kernel_sizes) {
    if (k < 1) throw std::invalid_argument("head config: kernel size < 1");
  }
  if (cfg.dropout < 0.0 || cfg.dropout >= 1.0) {
    throw std::invalid_argument("head config: dropout must be in [0, 1)");
  }
  if (cfg.class_weights) {
    for (double w : *cfg.class_weights) {
      if (!(w > 0.0)) {
        throw std::invalid_argument("head config: class weights must be > 0");
      }
    }
  }
}

nlohmann::ordered_json to_json(const HeadConfig& cfg) {
  nlohmann::ordered_json j;
  j["arch"] = cfg.arch;
  j["hidden_dim"] = cfg.hidden_dim;
  j["gru_layers"] = cfg.gru_layers;
  j["cnn_channels"] = cfg.cnn_channels;
  j["kernel_sizes"] = cfg.kernel_sizes;
  j["dropout"] = cfg.dropout;
  if (cfg.class_weights) {
    j["class_weights"] = *cfg.class_weights;
  }
  return j;
}

HeadConfig head_config_from_json(const nlohmann::json& block) {
  static const std::vector<std::string> known = {
      "arch",         "hidden_dim", "gru_layers", "cnn_channels",
      "kernel_sizes", "dropout",    "class_weights"};
  if (!block.is_object()) {
    throw std::invalid_argument("head config must be a JSON object");
  }
  for (auto it = block.begin(); it != block.end(); ++it) {
    bool ok = false;
    for (const std::string& k : known) ok = ok || k == it.key();
    if (!ok) {
      throw std::invalid_argument("head config: unknown key \"" + it.key() +
                                  "\"");
    }
  }
  HeadConfig cfg;
  if (block.contains("arch")) cfg.arch = block["arch"].get<std::string>();
  if (block.contains("hidden_dim")) {
    cfg.hidden_dim = block["hidden_dim"].get<int>();
  }
  if (block.contains("gru_layers")) {
    cfg.gru_layers = block["gru_layers"].get<int>();
  }
  if (block.contains("cnn_channels")) {
    cfg.cnn_channels = block["cnn_channels"].get<int>();
  }
  if (block.contains("kernel_sizes")) {
    cfg.kernel_sizes = block["kernel_sizes"].get<std::vector<int>>();
  }
  if (block.contains("dropout")) cfg.dropout = block["dropout"].get<double>();
  if (block.contains("class_weights")) {
    cfg.class_weights = block["class_weights"].get<std::array<double, 3>>();
  }
  validate(cfg);
  return cfg;
}

std::unique_ptr<Head> build_head(const HeadConfig& cfg, Eigen::Index input_dim,
                                 std::uint64_t init_seed) {
  validate(cfg);
  if (input_dim <= 0) {
    throw std::invalid_argument("build_head: input_dim must be positive");
  }
  Rng rng(mix64(init_seed ^ fnv1a64(cfg.arch)));
  if (cfg.arch == "weighted_gru") {
    return std::make_unique<WeightedGruHead>(cfg, input_dim, rng);
  }
  if (cfg.arch == "gru_cnn") {
    return std::make_unique<GruCnnHead>(cfg, input_dim, rng);
  }
  if (cfg.arch == "cnn") {
    return std::make_unique<CnnHead>(cfg, input_dim, rng);
  }
  return std::make_unique<HybridHead>(cfg, input_dim, rng);
}

}  // namespace otut
