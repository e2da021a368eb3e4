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

#include "otut/percentile_filter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace otut {

std::vector<std::size_t> percentile_survivors(const std::vector<double>& scores,
                                              double drop_fraction) {
  if (!(drop_fraction >= 0.0 && drop_fraction < 1.0)) {
    throw std::invalid_argument(
        "percentile filter: drop fraction must be in [0, 1)");
  }
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&scores](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  const auto drop = static_cast<std::size_t>(
      std::floor(drop_fraction * static_cast<double>(n)));

  std::vector<std::size_t> survivors(order.begin() + drop, order.end());
  std::sort(survivors.begin(), survivors.end());
  return survivors;
}

}  // namespace otut
