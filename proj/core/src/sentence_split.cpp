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

#include "otut/sentence_split.hpp"

#include <algorithm>

#include "otut/tokenizer.hpp"
#include "otut/utf8.hpp"

namespace otut {

namespace {

bool is_terminal(CodePoint cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == 0x2026;
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  auto cps = decode_utf8(text);
  std::vector<std::size_t> cuts;  // byte offsets where a new sentence begins
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (is_terminal(cps[i].cp)) {
      // Skip a run of terminals ("?!", "...") and cut after it.
      std::size_t j = i;
      while (j + 1 < cps.size() && is_terminal(cps[j + 1].cp)) ++j;
      if (j + 1 < cps.size() && is_space_cp(cps[j + 1].cp)) {
        cuts.push_back(cps[j + 1].offset);
      }
      i = j;
      continue;
    }
    // Dialogue dash: whitespace, '-', whitespace starts a new cue line.
    if (cps[i].cp == '-' && i > 0 && is_space_cp(cps[i - 1].cp) &&
        i + 1 < cps.size() && is_space_cp(cps[i + 1].cp)) {
      cuts.push_back(cps[i].offset);
    }
  }
  cuts.push_back(text.size());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<std::string> sentences;
  std::size_t begin = 0;
  for (std::size_t cut : cuts) {
    std::string piece = normalize_whitespace(text.substr(begin, cut - begin));
    if (!piece.empty()) sentences.push_back(std::move(piece));
    begin = cut;
  }
  return sentences;
}

std::string join_sentences(const std::vector<std::string>& sentences) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += sentences[i];
  }
  return out;
}

}  // namespace otut
