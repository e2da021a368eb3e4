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
// Model checkpoints as a single JSON document ("otut-checkpoint-v1"): the
// head configuration, the class index mapping, the encoder fingerprint the
// model was trained against, and every parameter matrix as base64-encoded
// little-endian float64 in row-major order. JSON keeps the metadata
// greppable; the blobs keep the weights bit-exact.

#ifndef OTUT_CHECKPOINT_HPP_
#define OTUT_CHECKPOINT_HPP_

#include <string>

#include "otut/train.hpp"

namespace otut {

inline constexpr std::string_view kCheckpointFormat = "otut-checkpoint-v1";

// Writes the model to `path`. Throws std::runtime_error on an untrained
// model or an unwritable path.
void save_checkpoint(const std::string& path, const Model& model);

// Reads a checkpoint back into a ready-to-predict model. Throws
// std::runtime_error on unreadable files, a wrong format marker, a class
// mapping other than NE=0/OT=1/UT=2, or parameter blobs that do not match
// the declared architecture name for name and shape for shape.
Model load_checkpoint(const std::string& path);

// Same, but first compares the stored encoder fingerprint against
// `expected_fingerprint` and refuses to load on a mismatch. Pass the
// fingerprint of the bundle the model is about to run on.
Model load_checkpoint(const std::string& path,
                      const std::string& expected_fingerprint);

}  // namespace otut

#endif  // OTUT_CHECKPOINT_HPP_
