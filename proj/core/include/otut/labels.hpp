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

#ifndef OTUT_LABELS_HPP_
#define OTUT_LABELS_HPP_

#include <string>
#include <string_view>

namespace otut {

// The three adequacy classes. The integer mapping is part of the toolkit's
// contract (checkpoints and metrics rely on it): NE=0, OT=1, UT=2.
enum class ClassLabel : int {
  NE = 0,  // no error
  OT = 1,  // over-translation: source conveys less than the target
  UT = 2,  // under-translation: source conveys more than the target
};

inline constexpr int kNumClasses = 3;

enum class Granularity {
  none,    // untouched pair
  subtle,  // 1..max_token_edits token-level edits
  gross,   // one whole-sentence edit
};

std::string to_string(ClassLabel label);
std::string to_string(Granularity granularity);

// Throw std::invalid_argument on unrecognized names.
ClassLabel class_label_from_string(std::string_view name);
Granularity granularity_from_string(std::string_view name);

inline bool is_error_class(ClassLabel label) { return label != ClassLabel::NE; }

}  // namespace otut

#endif  // OTUT_LABELS_HPP_
