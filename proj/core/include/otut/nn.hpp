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
// Minimal dense NN primitives for the classifier heads: parameter tensors
// with explicit gradients, a single-layer-at-a-time GRU with full
// backpropagation through time, same-padded 1-D convolution, and the Adam
// update. Everything runs one sample at a time on double precision, which
// keeps results independent of batch composition and bit-stable across
// runs. Sequences are matrices with one row per position.

#ifndef OTUT_NN_HPP_
#define OTUT_NN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "otut/embedding.hpp"
#include "otut/rng.hpp"

namespace otut {

// A named parameter matrix with its gradient accumulator and Adam moments.
// Vectors are stored as single-column matrices.
struct Tensor {
  std::string name;
  Matrix value;
  Matrix grad;
  Matrix adam_m;
  Matrix adam_v;

  Tensor() = default;
  Tensor(std::string n, Eigen::Index rows, Eigen::Index cols);

  void zero_grad();
  // Uniform(-bound, bound) entries drawn from `rng`.
  void init_uniform(Rng& rng, double bound);
};

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// One Adam step over `params` using their accumulated gradients. `step` is
// the 1-based update count shared by all tensors (bias correction).
void adam_step(const std::vector<Tensor*>& params, const AdamConfig& cfg,
               std::int64_t step);

// y = W x + b
struct LinearLayer {
  Tensor weight;  // out x in
  Tensor bias;    // out x 1

  LinearLayer() = default;
  LinearLayer(const std::string& name, Eigen::Index in, Eigen::Index out,
              Rng& rng);

  Vector forward(const Vector& x) const;
  // Accumulates dW/db for input x and upstream gradient dy; returns dx.
  Vector backward(const Vector& x, const Vector& dy);
  std::vector<Tensor*> parameters();
};

// Single GRU layer reading a sequence X (L x in) into hidden states
// (L x hidden). Gate layout inside the stacked matrices is [update; reset;
// candidate]; the candidate uses the common single-bias form
// n = tanh(W_n x + r .* (U_n h_prev) + b_n).
struct GruLayer {
  Tensor w_ih;  // 3H x in
  Tensor w_hh;  // 3H x H
  Tensor bias;  // 3H x 1
  Eigen::Index hidden = 0;

  GruLayer() = default;
  GruLayer(const std::string& name, Eigen::Index in, Eigen::Index hidden,
           Rng& rng);

  struct Cache {
    Matrix input;                 // L x in
    std::vector<Vector> h;        // L+1 entries, h[0] = 0
    std::vector<Vector> z, r, n;  // gate activations per step
    std::vector<Vector> q;        // U_n h_prev per step
  };

  // Returns the hidden-state sequence (L x hidden). `cache` may be null in
  // inference mode.
  Matrix forward(const Matrix& x, Cache* cache) const;

  // dH holds one gradient row per position (zero rows for unused
  // positions). Accumulates parameter gradients; returns dX (L x in) only
  // when `need_dx` (stacked layers), otherwise an empty matrix.
  Matrix backward(const Cache& cache, const Matrix& dh, bool need_dx);

  std::vector<Tensor*> parameters();
};

// Same-padded 1-D convolution over a sequence S (L x in) producing
// (L x out). For even kernels the padding is one shorter on the left.
struct Conv1dLayer {
  Tensor weight;  // (k * in) x out, tap-major blocks
  Tensor bias;    // out x 1
  Eigen::Index in = 0;
  Eigen::Index out = 0;
  int kernel = 0;

  Conv1dLayer() = default;
  Conv1dLayer(const std::string& name, Eigen::Index in, Eigen::Index out,
              int kernel, Rng& rng);

  Matrix forward(const Matrix& s) const;
  // Accumulates dW/db; returns dS.
  Matrix backward(const Matrix& s, const Matrix& dout);
  std::vector<Tensor*> parameters();
};

// Elementwise max(0, x) and its gradient mask.
Matrix relu(const Matrix& x);
Matrix relu_backward(const Matrix& x, const Matrix& dy);

// Per-column max over positions; ties go to the earliest position so
// pooling is deterministic. `argmax` receives one row index per column.
Vector global_max_pool(const Matrix& s, std::vector<Eigen::Index>* argmax);
Matrix global_max_pool_backward(Eigen::Index rows,
                                const std::vector<Eigen::Index>& argmax,
                                const Vector& dy);

// Numerically stable softmax of a logit vector.
Vector softmax(const Vector& logits);

// Weighted cross-entropy of one sample: loss = -w[label] * log(p[label]).
// `dlogits` receives w[label] * (p - onehot(label)).
double weighted_cross_entropy(const Vector& logits, int label, double weight,
                              Vector* dlogits);

// Inverted dropout mask: entries are 0 with probability `rate`, otherwise
// 1/(1-rate). rate = 0 yields all ones.
Vector dropout_mask(Eigen::Index size, double rate, Rng& rng);

}  // namespace otut

#endif  // OTUT_NN_HPP_
