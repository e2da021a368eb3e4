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

#include "otut/token_filter.hpp"

#include "otut/stopwords.hpp"
#include "otut/utf8.hpp"

namespace otut {

namespace {

bool is_apostrophe(CodePoint cp) { return cp == '\'' || cp == 0x2019; }

std::string ascii_fold(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

std::string to_string(TokenRejectReason reason) {
  switch (reason) {
    case TokenRejectReason::subword:
      return "subword";
    case TokenRejectReason::punctuation:
      return "punctuation";
    case TokenRejectReason::stopword:
      return "stopword";
    case TokenRejectReason::special_symbol:
      return "special_symbol";
    case TokenRejectReason::repetition:
      return "repetition";
    case TokenRejectReason::numeral:
      return "numeral";
  }
  return "unknown";
}

TokenDecision token_filter(std::string_view token,
                           const std::optional<std::string>& prev,
                           const std::optional<std::string>& next,
                           std::string_view subword_marker) {
  auto reject = [](TokenRejectReason reason) {
    return TokenDecision{false, reason};
  };

  if (!subword_marker.empty() && token.size() >= subword_marker.size() &&
      token.substr(0, subword_marker.size()) == subword_marker) {
    return reject(TokenRejectReason::subword);
  }

  auto cps = decode_utf8(token);

  bool all_punct = !cps.empty();
  for (const DecodedChar& dc : cps) {
    if (!is_punct_cp(dc.cp)) {
      all_punct = false;
      break;
    }
  }
  if (all_punct) return reject(TokenRejectReason::punctuation);

  if (is_english_stopword(token)) return reject(TokenRejectReason::stopword);

  // An insertable word is letters with at most apostrophes and hyphens.
  // Digits are legal here only so the numeral rule below can claim them
  // under its own name; either way the token is rejected. The empty token
  // is unusable and lands here as well.
  bool special = cps.empty();
  for (const DecodedChar& dc : cps) {
    if (!is_letter_cp(dc.cp) && !is_apostrophe(dc.cp) && dc.cp != '-' &&
        !is_digit_cp(dc.cp)) {
      special = true;
      break;
    }
  }
  if (special) return reject(TokenRejectReason::special_symbol);

  std::string folded = ascii_fold(token);
  if ((prev && ascii_fold(*prev) == folded) ||
      (next && ascii_fold(*next) == folded)) {
    return reject(TokenRejectReason::repetition);
  }

  for (const DecodedChar& dc : cps) {
    if (is_digit_cp(dc.cp)) return reject(TokenRejectReason::numeral);
  }

  return TokenDecision{true, TokenRejectReason::subword};
}

}  // namespace otut
