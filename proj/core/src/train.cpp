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

#include "otut/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "otut/nn.hpp"
#include "otut/tokenizer.hpp"

namespace otut {
namespace {

Matrix encode_sample(const SubtitlePair& pair, const ContextualEncoder& enc) {
  TokenSequence src = tokenize(pair.source_text, pair.source_lang);
  TokenSequence tgt = tokenize(pair.target_text, pair.target_lang);
  return enc.encode_pair(src, tgt);
}

int argmax_lowest(const Vector& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (v(i) > v(best)) best = i;
  }
  return static_cast<int>(best);
}

std::array<double, kNumClasses> resolve_class_weights(
    const HeadConfig& cfg, const std::vector<LabeledSample>& train_set) {
  if (cfg.class_weights) return *cfg.class_weights;
  if (cfg.arch != "weighted_gru") return {1.0, 1.0, 1.0};
  std::array<std::int64_t, kNumClasses> counts{};
  for (const auto& s : train_set) ++counts[static_cast<int>(s.label)];
  std::array<double, kNumClasses> w{};
  const double total = static_cast<double>(train_set.size());
  for (int c = 0; c < kNumClasses; ++c) {
    // A class absent from the training set contributes no terms to the
    // loss, so its weight is arbitrary; 1 keeps everything finite.
    w[c] = counts[c] > 0 ? total / (kNumClasses * counts[c]) : 1.0;
  }
  return w;
}

std::vector<Matrix> snapshot(const std::vector<Tensor*>& params) {
  std::vector<Matrix> values;
  values.reserve(params.size());
  for (const Tensor* t : params) values.push_back(t->value);
  return values;
}

}  // namespace

void validate(const TrainConfig& cfg) {
  if (!(cfg.learning_rate > 0.0)) {
    throw std::invalid_argument("train config: learning_rate must be > 0");
  }
  if (cfg.beta1 < 0.0 || cfg.beta1 >= 1.0 || cfg.beta2 < 0.0 ||
      cfg.beta2 >= 1.0) {
    throw std::invalid_argument("train config: betas must be in [0, 1)");
  }
  if (!(cfg.epsilon > 0.0)) {
    throw std::invalid_argument("train config: epsilon must be > 0");
  }
  if (cfg.batch_size < 1) {
    throw std::invalid_argument("train config: batch_size must be >= 1");
  }
  if (cfg.max_epochs < 1) {
    throw std::invalid_argument("train config: max_epochs must be >= 1");
  }
  if (cfg.patience < 1) {
    throw std::invalid_argument("train config: patience must be >= 1");
  }
}

nlohmann::ordered_json to_json(const TrainConfig& cfg) {
  nlohmann::ordered_json j;
  j["learning_rate"] = cfg.learning_rate;
  j["beta1"] = cfg.beta1;
  j["beta2"] = cfg.beta2;
  j["epsilon"] = cfg.epsilon;
  j["batch_size"] = cfg.batch_size;
  j["max_epochs"] = cfg.max_epochs;
  j["patience"] = cfg.patience;
  j["seed"] = cfg.seed;
  return j;
}

TrainConfig train_config_from_json(const nlohmann::json& block) {
  static const std::vector<std::string> known = {
      "learning_rate", "beta1",      "beta2",    "epsilon",
      "batch_size",    "max_epochs", "patience", "seed"};
  if (!block.is_object()) {
    throw std::invalid_argument("train config must be a JSON object");
  }
  for (auto it = block.begin(); it != block.end(); ++it) {
    bool ok = false;
    for (const std::string& k : known) ok = ok || k == it.key();
    if (!ok) {
      throw std::invalid_argument("train config: unknown key \"" + it.key() +
                                  "\"");
    }
  }
  TrainConfig cfg;
  if (block.contains("learning_rate")) {
    cfg.learning_rate = block["learning_rate"].get<double>();
  }
  if (block.contains("beta1")) cfg.beta1 = block["beta1"].get<double>();
  if (block.contains("beta2")) cfg.beta2 = block["beta2"].get<double>();
  if (block.contains("epsilon")) cfg.epsilon = block["epsilon"].get<double>();
  if (block.contains("batch_size")) {
    cfg.batch_size = block["batch_size"].get<int>();
  }
  if (block.contains("max_epochs")) {
    cfg.max_epochs = block["max_epochs"].get<int>();
  }
  if (block.contains("patience")) cfg.patience = block["patience"].get<int>();
  if (block.contains("seed")) cfg.seed = block["seed"].get<std::uint64_t>();
  validate(cfg);
  return cfg;
}

Model train(const std::vector<LabeledSample>& train_set,
            const std::vector<LabeledSample>& validation_set,
            const EncoderBundle& bundle, const HeadConfig& head_cfg,
            const TrainConfig& train_cfg, TrainHistory* history) {
  validate(head_cfg);
  validate(train_cfg);
  if (train_set.empty()) {
    throw std::invalid_argument("train(): training set is empty");
  }
  if (validation_set.empty()) {
    throw std::invalid_argument("train(): validation set is empty");
  }
  if (!bundle.contextual) {
    throw std::invalid_argument("train(): bundle has no contextual encoder");
  }

  const std::array<double, kNumClasses> weights =
      resolve_class_weights(head_cfg, train_set);

  // Encode every sample once. The encoders are frozen, so these matrices
  // are loop invariants of the whole run.
  std::vector<Matrix> train_x;
  std::vector<int> train_y;
  train_x.reserve(train_set.size());
  train_y.reserve(train_set.size());
  for (const auto& s : train_set) {
    train_x.push_back(encode_sample(s.pair, *bundle.contextual));
    train_y.push_back(static_cast<int>(s.label));
  }
  std::vector<Matrix> val_x;
  std::vector<int> val_y;
  val_x.reserve(validation_set.size());
  val_y.reserve(validation_set.size());
  for (const auto& s : validation_set) {
    val_x.push_back(encode_sample(s.pair, *bundle.contextual));
    val_y.push_back(static_cast<int>(s.label));
  }

  Model model;
  model.config = head_cfg;
  model.input_dim = bundle.contextual->dim();
  model.head = build_head(head_cfg, model.input_dim, train_cfg.seed);
  model.encoder_fingerprint = bundle.fingerprint;
  model.train_seed = train_cfg.seed;

  std::vector<Tensor*> params = model.head->parameters();
  const AdamConfig adam{train_cfg.learning_rate, train_cfg.beta1,
                        train_cfg.beta2, train_cfg.epsilon};

  Rng root(train_cfg.seed);
  Rng dropout_rng = root.child("dropout");

  std::vector<std::size_t> order(train_x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  TrainHistory local_history;
  TrainHistory& hist = history ? *history : local_history;
  hist.epochs.clear();
  hist.best_epoch = 0;

  double best_val_accuracy = -1.0;
  int epochs_since_best = 0;
  std::vector<Matrix> best_params = snapshot(params);
  std::int64_t step = 0;

  const std::size_t batch = static_cast<std::size_t>(train_cfg.batch_size);
  for (int epoch = 1; epoch <= train_cfg.max_epochs; ++epoch) {
    Rng shuffle_rng = root.child("shuffle/epoch/" + std::to_string(epoch));
    shuffle_rng.shuffle(order);

    double loss_sum = 0.0;
    double weight_sum = 0.0;
    std::size_t correct = 0;
    for (std::size_t begin = 0; begin < order.size(); begin += batch) {
      const std::size_t end = std::min(begin + batch, order.size());
      for (Tensor* t : params) t->zero_grad();

      // The weight normalizer depends only on the labels in the batch, so
      // it is known before any forward pass.
      double batch_weight = 0.0;
      for (std::size_t i = begin; i < end; ++i) {
        batch_weight += weights[train_y[order[i]]];
      }

      for (std::size_t i = begin; i < end; ++i) {
        const std::size_t idx = order[i];
        std::unique_ptr<ForwardCache> cache;
        Vector logits =
            model.head->forward_train(train_x[idx], dropout_rng, &cache);
        Vector dlogits;
        const double sample_loss = weighted_cross_entropy(
            logits, train_y[idx], weights[train_y[idx]], &dlogits);
        if (!std::isfinite(sample_loss)) {
          throw std::runtime_error(
              "train(): loss diverged at epoch " + std::to_string(epoch) +
              " (sample " + train_set[idx].pair.id + ")");
        }
        loss_sum += sample_loss;
        if (argmax_lowest(logits) == train_y[idx]) ++correct;
        dlogits /= batch_weight;
        model.head->backward(*cache, dlogits);
      }
      weight_sum += batch_weight;
      adam_step(params, adam, ++step);
    }

    double val_loss_sum = 0.0;
    double val_weight_sum = 0.0;
    std::size_t val_correct = 0;
    for (std::size_t j = 0; j < val_x.size(); ++j) {
      Vector logits = model.head->logits(val_x[j]);
      val_loss_sum +=
          weighted_cross_entropy(logits, val_y[j], weights[val_y[j]], nullptr);
      val_weight_sum += weights[val_y[j]];
      if (argmax_lowest(logits) == val_y[j]) ++val_correct;
    }

    EpochStats stats;
    stats.train_loss = loss_sum / weight_sum;
    stats.train_accuracy =
        static_cast<double>(correct) / static_cast<double>(order.size());
    stats.val_loss = val_loss_sum / val_weight_sum;
    stats.val_accuracy =
        static_cast<double>(val_correct) / static_cast<double>(val_x.size());
    if (!std::isfinite(stats.val_loss)) {
      throw std::runtime_error("train(): validation loss diverged at epoch " +
                               std::to_string(epoch));
    }
    hist.epochs.push_back(stats);

    if (stats.val_accuracy > best_val_accuracy) {
      best_val_accuracy = stats.val_accuracy;
      hist.best_epoch = static_cast<std::size_t>(epoch);
      epochs_since_best = 0;
      best_params = snapshot(params);
    } else if (++epochs_since_best >= train_cfg.patience) {
      break;
    }
  }

  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i]->value = best_params[i];
  }
  model.trained = true;
  return model;
}

Prediction predict(const Model& model, const SubtitlePair& pair,
                   const EncoderBundle& bundle) {
  if (!model.trained || !model.head) {
    throw std::runtime_error("predict(): model has not been trained");
  }
  if (!bundle.contextual) {
    throw std::invalid_argument("predict(): bundle has no contextual encoder");
  }
  if (!model.encoder_fingerprint.empty() && !bundle.fingerprint.empty() &&
      model.encoder_fingerprint != bundle.fingerprint) {
    throw std::runtime_error("predict(): encoder fingerprint mismatch (model " +
                             model.encoder_fingerprint + ", bundle " +
                             bundle.fingerprint + ")");
  }
  Matrix x = encode_sample(pair, *bundle.contextual);
  Vector p = softmax(model.head->logits(x));
  Prediction out;
  const int best = argmax_lowest(p);
  out.label = static_cast<ClassLabel>(best);
  for (int c = 0; c < kNumClasses; ++c) out.probs[c] = p(c);
  return out;
}

}  // namespace otut
