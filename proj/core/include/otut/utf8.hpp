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

#ifndef OTUT_UTF8_HPP_
#define OTUT_UTF8_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace otut {

using CodePoint = std::uint32_t;

// One decoded scalar with its byte extent in the original string.
struct DecodedChar {
  CodePoint cp;
  std::size_t offset;  // byte offset into the source string
  std::size_t length;  // byte length of the encoding
};

// Decodes UTF-8, mapping invalid bytes to U+FFFD one byte at a time so the
// byte extents always partition the input.
std::vector<DecodedChar> decode_utf8(std::string_view text);

std::string encode_utf8(CodePoint cp);

// Character classes used by the tokenizer and the token filter. These are
// curated tables covering ASCII plus the ranges that show up in subtitle
// text, not the full Unicode property database.
bool is_space_cp(CodePoint cp);
bool is_digit_cp(CodePoint cp);
bool is_punct_cp(CodePoint cp);

// Letter test: anything that is not whitespace, a digit, punctuation, or a
// control/symbol character counts as a letter. Deliberately permissive so
// non-Latin scripts pass.
bool is_letter_cp(CodePoint cp);

// ASCII-only case folding; non-ASCII passes through unchanged.
std::string ascii_lower(std::string_view s);

}  // namespace otut

#endif  // OTUT_UTF8_HPP_
