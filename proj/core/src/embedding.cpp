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

#include "otut/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace otut {

double cosine(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("cosine: dimension mismatch (" +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()) + ")");
  }
  double nu = u.norm();
  double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) {
    throw std::invalid_argument("cosine: zero vector argument");
  }
  double value = u.dot(v) / (nu * nv);
  return std::clamp(value, -1.0, 1.0);
}

}  // namespace otut
