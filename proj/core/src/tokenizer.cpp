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

#include "otut/tokenizer.hpp"

#include <cstddef>

#include "otut/utf8.hpp"

namespace otut {

namespace {

// Closing punctuation glues to the previous token, openers to the next.
// ASCII quote marks stay spaced: without language knowledge their side is
// ambiguous, and the round-trip contract does not depend on spacing.
bool no_space_before(std::string_view token) {
  auto cps = decode_utf8(token);
  if (cps.size() != 1) return false;
  switch (cps[0].cp) {
    case '.':
    case ',':
    case '!':
    case '?':
    case ';':
    case ':':
    case ')':
    case ']':
    case '}':
    case '%':
    case 0x2026:  // ellipsis
    case 0x2019:  // right single quote
    case 0x201D:  // right double quote
    case 0xBB:    // right guillemet
      return true;
    default:
      return false;
  }
}

bool no_space_after(std::string_view token) {
  auto cps = decode_utf8(token);
  if (cps.size() != 1) return false;
  switch (cps[0].cp) {
    case '(':
    case '[':
    case '{':
    case 0xA1:    // inverted exclamation
    case 0xBF:    // inverted question
    case 0x2018:  // left single quote
    case 0x201C:  // left double quote
    case 0xAB:    // left guillemet
      return true;
    default:
      return false;
  }
}

void emit_chunk(const std::vector<DecodedChar>& cps, std::size_t begin,
                std::size_t end, std::string_view text,
                std::vector<std::string>& out) {
  // [begin, end) indexes into cps; the chunk contains no whitespace.
  std::size_t first_word = end;
  for (std::size_t i = begin; i < end; ++i) {
    if (!is_punct_cp(cps[i].cp)) {
      first_word = i;
      break;
    }
  }
  if (first_word == end) {
    // Pure punctuation: one token per character.
    for (std::size_t i = begin; i < end; ++i) {
      out.emplace_back(text.substr(cps[i].offset, cps[i].length));
    }
    return;
  }
  std::size_t last_word = first_word;
  for (std::size_t i = end; i-- > first_word;) {
    if (!is_punct_cp(cps[i].cp)) {
      last_word = i;
      break;
    }
  }
  for (std::size_t i = begin; i < first_word; ++i) {
    out.emplace_back(text.substr(cps[i].offset, cps[i].length));
  }
  std::size_t word_begin = cps[first_word].offset;
  std::size_t word_end = cps[last_word].offset + cps[last_word].length;
  out.emplace_back(text.substr(word_begin, word_end - word_begin));
  for (std::size_t i = last_word + 1; i < end; ++i) {
    out.emplace_back(text.substr(cps[i].offset, cps[i].length));
  }
}

}  // namespace

TokenSequence tokenize(std::string_view text, std::string_view lang) {
  TokenSequence seq;
  seq.lang = std::string(lang);
  auto cps = decode_utf8(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    if (is_space_cp(cps[i].cp)) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    while (i < cps.size() && !is_space_cp(cps[i].cp)) ++i;
    emit_chunk(cps, begin, i, text, seq.tokens);
  }
  return seq;
}

std::string detokenize(const TokenSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    if (i > 0 && !no_space_before(seq.tokens[i]) &&
        !no_space_after(seq.tokens[i - 1])) {
      out.push_back(' ');
    }
    out += seq.tokens[i];
  }
  return out;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  auto cps = decode_utf8(text);
  bool pending_space = false;
  for (const auto& dc : cps) {
    if (is_space_cp(dc.cp)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.append(text.substr(dc.offset, dc.length));
  }
  return out;
}

}  // namespace otut
