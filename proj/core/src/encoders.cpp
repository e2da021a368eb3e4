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

#include "otut/encoders.hpp"

#include <stdexcept>

namespace otut {

Vector sentence_vector(const TokenSequence& tokens,
                       const WordVectors& backend) {
  if (tokens.empty()) {
    throw std::invalid_argument("sentence_vector: empty token sequence");
  }
  Vector sum = Vector::Zero(backend.dim());
  for (const std::string& token : tokens.tokens) {
    sum += backend.vector(token);
  }
  return sum / static_cast<double>(tokens.size());
}

}  // namespace otut
