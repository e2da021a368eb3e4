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

#include "otut/metrics.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>

namespace otut {
namespace {

void check_lengths(const std::vector<ClassLabel>& gold,
                   const std::vector<ClassLabel>& pred) {
  if (gold.empty()) {
    throw std::invalid_argument("metrics: empty label vectors");
  }
  if (gold.size() != pred.size()) {
    throw std::invalid_argument("metrics: gold and pred lengths differ (" +
                                std::to_string(gold.size()) + " vs " +
                                std::to_string(pred.size()) + ")");
  }
}

}  // namespace

double accuracy(const std::vector<ClassLabel>& gold,
                const std::vector<ClassLabel>& pred) {
  check_lengths(gold, pred);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == pred[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(gold.size());
}

double weighted_f1(const std::vector<ClassLabel>& gold,
                   const std::vector<ClassLabel>& pred) {
  check_lengths(gold, pred);
  std::array<std::size_t, kNumClasses> tp{}, fp{}, fn{}, support{};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const int g = static_cast<int>(gold[i]);
    const int p = static_cast<int>(pred[i]);
    ++support[g];
    if (g == p) {
      ++tp[g];
    } else {
      ++fp[p];
      ++fn[g];
    }
  }
  double sum = 0.0;
  for (int c = 0; c < kNumClasses; ++c) {
    if (support[c] == 0) continue;
    const double precision =
        tp[c] + fp[c] > 0
            ? static_cast<double>(tp[c]) / static_cast<double>(tp[c] + fp[c])
            : 0.0;
    const double recall =
        tp[c] + fn[c] > 0
            ? static_cast<double>(tp[c]) / static_cast<double>(tp[c] + fn[c])
            : 0.0;
    const double f1 = precision + recall > 0.0
                          ? 2.0 * precision * recall / (precision + recall)
                          : 0.0;
    sum += f1 * static_cast<double>(support[c]);
  }
  return sum / static_cast<double>(gold.size());
}

double error_recall(const std::vector<ClassLabel>& gold,
                    const std::vector<ClassLabel>& pred) {
  check_lengths(gold, pred);
  std::size_t errors = 0;
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (!is_error_class(gold[i])) continue;
    ++errors;
    if (is_error_class(pred[i])) ++flagged;
  }
  if (errors == 0) {
    throw std::invalid_argument(
        "error_recall: gold contains no error labels, value is undefined");
  }
  return static_cast<double>(flagged) / static_cast<double>(errors);
}

}  // namespace otut
