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

#include "otut/nn.hpp"

#include <cmath>
#include <stdexcept>

namespace otut {

Tensor::Tensor(std::string n, Eigen::Index rows, Eigen::Index cols)
    : name(std::move(n)),
      value(Matrix::Zero(rows, cols)),
      grad(Matrix::Zero(rows, cols)),
      adam_m(Matrix::Zero(rows, cols)),
      adam_v(Matrix::Zero(rows, cols)) {}

void Tensor::zero_grad() { grad.setZero(); }

void Tensor::init_uniform(Rng& rng, double bound) {
  for (Eigen::Index c = 0; c < value.cols(); ++c) {
    for (Eigen::Index r = 0; r < value.rows(); ++r) {
      value(r, c) = bound * rng.uniform_symmetric();
    }
  }
}

void adam_step(const std::vector<Tensor*>& params, const AdamConfig& cfg,
               std::int64_t step) {
  if (step < 1) throw std::invalid_argument("adam_step: step must be >= 1");
  const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(step));
  const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(step));
  for (Tensor* p : params) {
    p->adam_m = cfg.beta1 * p->adam_m + (1.0 - cfg.beta1) * p->grad;
    p->adam_v =
        cfg.beta2 * p->adam_v + (1.0 - cfg.beta2) * p->grad.cwiseAbs2();
    Matrix m_hat = p->adam_m / bc1;
    Matrix v_hat = p->adam_v / bc2;
    p->value.array() -= cfg.learning_rate * m_hat.array() /
                        (v_hat.array().sqrt() + cfg.epsilon);
  }
}

LinearLayer::LinearLayer(const std::string& name, Eigen::Index in,
                         Eigen::Index out, Rng& rng)
    : weight(name + ".weight", out, in), bias(name + ".bias", out, 1) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in));
  weight.init_uniform(rng, bound);
  bias.init_uniform(rng, bound);
}

Vector LinearLayer::forward(const Vector& x) const {
  return weight.value * x + bias.value.col(0);
}

Vector LinearLayer::backward(const Vector& x, const Vector& dy) {
  weight.grad += dy * x.transpose();
  bias.grad.col(0) += dy;
  return weight.value.transpose() * dy;
}

std::vector<Tensor*> LinearLayer::parameters() { return {&weight, &bias}; }

GruLayer::GruLayer(const std::string& name, Eigen::Index in,
                   Eigen::Index hidden_dim, Rng& rng)
    : w_ih(name + ".w_ih", 3 * hidden_dim, in),
      w_hh(name + ".w_hh", 3 * hidden_dim, hidden_dim),
      bias(name + ".bias", 3 * hidden_dim, 1),
      hidden(hidden_dim) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(hidden_dim));
  w_ih.init_uniform(rng, bound);
  w_hh.init_uniform(rng, bound);
  bias.init_uniform(rng, bound);
}

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

Matrix GruLayer::forward(const Matrix& x, Cache* cache) const {
  const Eigen::Index steps = x.rows();
  const Eigen::Index h_dim = hidden;
  Matrix states(steps, h_dim);
  Vector h = Vector::Zero(h_dim);
  if (cache) {
    cache->input = x;
    cache->h.assign(1, h);
    cache->z.clear();
    cache->r.clear();
    cache->n.clear();
    cache->q.clear();
  }
  for (Eigen::Index t = 0; t < steps; ++t) {
    Vector gates_x = w_ih.value * x.row(t).transpose() + bias.value.col(0);
    Vector gates_h = w_hh.value * h;
    Vector z(h_dim), r(h_dim), n(h_dim);
    Vector q = gates_h.segment(2 * h_dim, h_dim);
    for (Eigen::Index i = 0; i < h_dim; ++i) {
      z[i] = sigmoid(gates_x[i] + gates_h[i]);
      r[i] = sigmoid(gates_x[h_dim + i] + gates_h[h_dim + i]);
    }
    for (Eigen::Index i = 0; i < h_dim; ++i) {
      n[i] = std::tanh(gates_x[2 * h_dim + i] + r[i] * q[i]);
    }
    h = (Vector::Ones(h_dim) - z).cwiseProduct(n) + z.cwiseProduct(h);
    states.row(t) = h.transpose();
    if (cache) {
      cache->h.push_back(h);
      cache->z.push_back(z);
      cache->r.push_back(r);
      cache->n.push_back(n);
      cache->q.push_back(q);
    }
  }
  return states;
}

Matrix GruLayer::backward(const Cache& cache, const Matrix& dh_seq,
                          bool need_dx) {
  const Eigen::Index steps = cache.input.rows();
  const Eigen::Index h_dim = hidden;
  Matrix dx = need_dx ? Matrix::Zero(steps, cache.input.cols()) : Matrix();
  Vector carry = Vector::Zero(h_dim);

  for (Eigen::Index t = steps - 1; t >= 0; --t) {
    Vector dh = dh_seq.row(t).transpose() + carry;
    const Vector& z = cache.z[static_cast<std::size_t>(t)];
    const Vector& r = cache.r[static_cast<std::size_t>(t)];
    const Vector& n = cache.n[static_cast<std::size_t>(t)];
    const Vector& q = cache.q[static_cast<std::size_t>(t)];
    const Vector& h_prev = cache.h[static_cast<std::size_t>(t)];

    Vector dz = dh.cwiseProduct(h_prev - n);
    Vector dn = dh.cwiseProduct(Vector::Ones(h_dim) - z);
    Vector dh_prev = dh.cwiseProduct(z);

    Vector dan = dn.cwiseProduct(Vector::Ones(h_dim) - n.cwiseAbs2());
    Vector dr = dan.cwiseProduct(q);
    Vector dq = dan.cwiseProduct(r);

    Vector daz = dz.cwiseProduct(z).cwiseProduct(Vector::Ones(h_dim) - z);
    Vector dar = dr.cwiseProduct(r).cwiseProduct(Vector::Ones(h_dim) - r);

    // Stacked gate-gradient vector in [z; r; n] layout.
    Vector da(3 * h_dim);
    da.segment(0, h_dim) = daz;
    da.segment(h_dim, h_dim) = dar;
    da.segment(2 * h_dim, h_dim) = dan;

    w_ih.grad += da * cache.input.row(t);
    bias.grad.col(0) += da;

    // The hidden-to-hidden path: z and r see h_prev directly, the
    // candidate sees it through q = U_n h_prev.
    Vector dgates_h(3 * h_dim);
    dgates_h.segment(0, h_dim) = daz;
    dgates_h.segment(h_dim, h_dim) = dar;
    dgates_h.segment(2 * h_dim, h_dim) = dq;
    w_hh.grad += dgates_h * h_prev.transpose();
    dh_prev += w_hh.value.transpose() * dgates_h;

    if (need_dx) dx.row(t) = (w_ih.value.transpose() * da).transpose();
    carry = dh_prev;
  }
  return dx;
}

std::vector<Tensor*> GruLayer::parameters() { return {&w_ih, &w_hh, &bias}; }

Conv1dLayer::Conv1dLayer(const std::string& name, Eigen::Index in_dim,
                         Eigen::Index out_dim, int kernel_size, Rng& rng)
    : weight(name + ".weight", static_cast<Eigen::Index>(kernel_size) * in_dim,
             out_dim),
      bias(name + ".bias", out_dim, 1),
      in(in_dim),
      out(out_dim),
      kernel(kernel_size) {
  if (kernel_size < 1) {
    throw std::invalid_argument("Conv1dLayer: kernel must be >= 1");
  }
  const double bound =
      1.0 / std::sqrt(static_cast<double>(kernel_size) *
                      static_cast<double>(in_dim));
  weight.init_uniform(rng, bound);
  bias.init_uniform(rng, bound);
}

Matrix Conv1dLayer::forward(const Matrix& s) const {
  const Eigen::Index steps = s.rows();
  const Eigen::Index pad = (kernel - 1) / 2;
  Matrix result(steps, out);
  for (Eigen::Index p = 0; p < steps; ++p) {
    Eigen::RowVectorXd row = bias.value.col(0).transpose();
    for (int j = 0; j < kernel; ++j) {
      Eigen::Index src = p + j - pad;
      if (src < 0 || src >= steps) continue;
      row += s.row(src) * weight.value.block(j * in, 0, in, out);
    }
    result.row(p) = row;
  }
  return result;
}

Matrix Conv1dLayer::backward(const Matrix& s, const Matrix& dout) {
  const Eigen::Index steps = s.rows();
  const Eigen::Index pad = (kernel - 1) / 2;
  Matrix ds = Matrix::Zero(steps, in);
  for (Eigen::Index p = 0; p < steps; ++p) {
    bias.grad.col(0) += dout.row(p).transpose();
    for (int j = 0; j < kernel; ++j) {
      Eigen::Index src = p + j - pad;
      if (src < 0 || src >= steps) continue;
      weight.grad.block(j * in, 0, in, out) +=
          s.row(src).transpose() * dout.row(p);
      ds.row(src) +=
          dout.row(p) * weight.value.block(j * in, 0, in, out).transpose();
    }
  }
  return ds;
}

std::vector<Tensor*> Conv1dLayer::parameters() { return {&weight, &bias}; }

Matrix relu(const Matrix& x) { return x.cwiseMax(0.0); }

Matrix relu_backward(const Matrix& x, const Matrix& dy) {
  return (x.array() > 0.0).select(dy, Matrix::Zero(dy.rows(), dy.cols()));
}

Vector global_max_pool(const Matrix& s, std::vector<Eigen::Index>* argmax) {
  if (s.rows() == 0) {
    throw std::invalid_argument("global_max_pool: empty sequence");
  }
  Vector pooled(s.cols());
  if (argmax) argmax->assign(static_cast<std::size_t>(s.cols()), 0);
  for (Eigen::Index c = 0; c < s.cols(); ++c) {
    Eigen::Index best = 0;
    double best_value = s(0, c);
    for (Eigen::Index p = 1; p < s.rows(); ++p) {
      if (s(p, c) > best_value) {
        best_value = s(p, c);
        best = p;
      }
    }
    pooled[c] = best_value;
    if (argmax) (*argmax)[static_cast<std::size_t>(c)] = best;
  }
  return pooled;
}

Matrix global_max_pool_backward(Eigen::Index rows,
                                const std::vector<Eigen::Index>& argmax,
                                const Vector& dy) {
  Matrix ds = Matrix::Zero(rows, dy.size());
  for (Eigen::Index c = 0; c < dy.size(); ++c) {
    ds(argmax[static_cast<std::size_t>(c)], c) = dy[c];
  }
  return ds;
}

Vector softmax(const Vector& logits) {
  Vector shifted = logits.array() - logits.maxCoeff();
  Vector exps = shifted.array().exp();
  return exps / exps.sum();
}

double weighted_cross_entropy(const Vector& logits, int label, double weight,
                              Vector* dlogits) {
  if (label < 0 || label >= logits.size()) {
    throw std::invalid_argument("weighted_cross_entropy: label out of range");
  }
  Vector p = softmax(logits);
  // Clamp away from zero so a hard-wrong prediction yields a large finite
  // loss instead of inf.
  double p_label = std::max(p[label], 1e-300);
  if (dlogits) {
    *dlogits = weight * p;
    (*dlogits)[label] -= weight;
  }
  return -weight * std::log(p_label);
}

Vector dropout_mask(Eigen::Index size, double rate, Rng& rng) {
  if (rate < 0.0 || rate >= 1.0) {
    throw std::invalid_argument("dropout_mask: rate must be in [0, 1)");
  }
  Vector mask(size);
  if (rate == 0.0) {
    mask.setOnes();
    return mask;
  }
  const double keep_scale = 1.0 / (1.0 - rate);
  for (Eigen::Index i = 0; i < size; ++i) {
    mask[i] = rng.uniform_real01() < rate ? 0.0 : keep_scale;
  }
  return mask;
}

}  // namespace otut
