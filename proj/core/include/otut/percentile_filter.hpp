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

#ifndef OTUT_PERCENTILE_FILTER_HPP_
#define OTUT_PERCENTILE_FILTER_HPP_

#include <cstddef>
#include <utility>
#include <vector>

namespace otut {

// Drops the floor(drop_fraction * N) highest-scoring entries and returns
// the indices of the survivors in input order. Candidates tied on score
// keep their input order during the ranking (stable sort), so which of the
// tied entries fall inside the dropped prefix is deterministic. Throws
// std::invalid_argument unless 0 <= drop_fraction < 1.
std::vector<std::size_t> percentile_survivors(const std::vector<double>& scores,
                                              double drop_fraction);

// Convenience wrapper over (candidate, score) pairs; survivors come back in
// input order.
template <typename T>
std::vector<T> percentile_filter(const std::vector<std::pair<T, double>>& scored,
                                 double drop_fraction) {
  std::vector<double> scores;
  scores.reserve(scored.size());
  for (const auto& [candidate, score] : scored) scores.push_back(score);
  std::vector<T> out;
  for (std::size_t i : percentile_survivors(scores, drop_fraction)) {
    out.push_back(scored[i].first);
  }
  return out;
}

}  // namespace otut

#endif  // OTUT_PERCENTILE_FILTER_HPP_
