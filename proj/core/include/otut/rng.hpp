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

#ifndef OTUT_RNG_HPP_
#define OTUT_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "otut/hash.hpp"

namespace otut {

// Splitmix64 generator. The standard <random> engines are portable but the
// distributions are not; everything that ends up in an output file draws
// from this class so runs reproduce byte-identically across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive. Rejection sampling, no modulo bias.
  std::size_t uniform_index(std::size_t n);

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform_real01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform double in (-1, 1).
  double uniform_symmetric() { return 2.0 * uniform_real01() - 1.0; }

  // Fisher-Yates, consuming exactly v.size() - 1 index draws for size >= 2.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

  // Deterministic per-item child generator: output of a child depends only
  // on (parent seed, key), never on processing order or worker count.
  Rng child(std::string_view key) const {
    return Rng(mix64(state_ ^ fnv1a64(key)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace otut

#endif  // OTUT_RNG_HPP_
