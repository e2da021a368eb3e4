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

#ifndef OTUT_SENTENCE_SPLIT_HPP_
#define OTUT_SENTENCE_SPLIT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace otut {

// Rule-based sentence segmentation for subtitle text. Boundaries fall after
// terminal punctuation (. ! ? …) followed by whitespace, and before a
// dialogue dash ("- ") that follows whitespace. Each returned sentence is
// whitespace-normalized; joining them with single spaces reproduces the
// whitespace-normalized input.
std::vector<std::string> split_sentences(std::string_view text);

// Inverse of split_sentences up to whitespace normalization.
std::string join_sentences(const std::vector<std::string>& sentences);

}  // namespace otut

#endif  // OTUT_SENTENCE_SPLIT_HPP_
