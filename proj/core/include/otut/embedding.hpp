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

#ifndef OTUT_EMBEDDING_HPP_
#define OTUT_EMBEDDING_HPP_

#include <Eigen/Core>

namespace otut {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Cosine similarity, clamped to [-1, 1] so floating-point noise can never
// push it out of range. Throws std::invalid_argument on dimension mismatch
// or when either argument is the zero vector (similarity is undefined there).
double cosine(const Vector& u, const Vector& v);

}  // namespace otut

#endif  // OTUT_EMBEDDING_HPP_
