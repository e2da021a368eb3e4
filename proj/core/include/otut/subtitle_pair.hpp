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

#ifndef OTUT_SUBTITLE_PAIR_HPP_
#define OTUT_SUBTITLE_PAIR_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace otut {

// One aligned (source, target) subtitle unit. The atom of the corpus.
struct SubtitlePair {
  std::string id;
  std::string source_text;
  std::string target_text;
  std::string source_lang = "en";
  std::string target_lang;
  // Unknown input fields, preserved on passthrough in original order.
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

// Surface tokens of one text in one language. Tokens are non-empty and
// contain no whitespace.
struct TokenSequence {
  std::vector<std::string> tokens;
  std::string lang;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

}  // namespace otut

#endif  // OTUT_SUBTITLE_PAIR_HPP_
