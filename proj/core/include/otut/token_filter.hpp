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

#ifndef OTUT_TOKEN_FILTER_HPP_
#define OTUT_TOKEN_FILTER_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace otut {

// Why a mask suggestion was rejected, in check order. A token is tested
// against all six predicates and the first hit names the reason.
enum class TokenRejectReason {
  subword,         // carries the backend's continuation marker
  punctuation,     // consists of punctuation characters only
  stopword,        // on the shipped English stopword list
  special_symbol,  // contains a character outside letters/apostrophe/hyphen
                   // (digits are handled separately by the numeral rule)
  repetition,      // case-insensitively equals the previous or next token
  numeral,         // contains a digit
};

std::string to_string(TokenRejectReason reason);

struct TokenDecision {
  bool keep = false;
  TokenRejectReason reason = TokenRejectReason::subword;  // when !keep
};

// Gate for insertion candidates: only clean, non-repeating content words
// pass. `prev`/`next` are the tokens adjacent to the insertion slot (absent
// at sequence edges); `subword_marker` is the mask backend's continuation
// prefix (empty disables the subword rule).
TokenDecision token_filter(std::string_view token,
                           const std::optional<std::string>& prev,
                           const std::optional<std::string>& next,
                           std::string_view subword_marker = "##");

}  // namespace otut

#endif  // OTUT_TOKEN_FILTER_HPP_
