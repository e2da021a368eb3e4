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

#ifndef OTUT_TOKENIZER_HPP_
#define OTUT_TOKENIZER_HPP_

#include <string>
#include <string_view>

#include "otut/subtitle_pair.hpp"

namespace otut {

// Splits on Unicode whitespace, then detaches leading/trailing punctuation
// of each chunk as single-character tokens. Interior punctuation (don't,
// well-known, U.S.A) stays attached. Deterministic; whitespace-only input
// yields an empty sequence.
//
// Every emitted token is either a single punctuation character or begins and
// ends with a non-punctuation character, which makes the tokenizer stable:
// re-tokenizing detokenize(seq) reproduces seq exactly.
TokenSequence tokenize(std::string_view text, std::string_view lang);

// Joins tokens with single spaces, attaching closing punctuation (.,!?;:…)
// to the preceding token and opening brackets/quotes to the following one.
// The round trip preserves every non-whitespace character in order:
// detokenize(tokenize(text)) equals text once whitespace is removed from
// both sides.
std::string detokenize(const TokenSequence& seq);

// Input with every whitespace run collapsed to one space and ends trimmed.
// The equivalence relation under which tokenize/detokenize round-trips.
std::string normalize_whitespace(std::string_view text);

}  // namespace otut

#endif  // OTUT_TOKENIZER_HPP_
