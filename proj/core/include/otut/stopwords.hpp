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

#ifndef OTUT_STOPWORDS_HPP_
#define OTUT_STOPWORDS_HPP_

#include <string_view>

namespace otut {

// Membership in the shipped English stopword list. Matching is
// ASCII-case-insensitive and treats the typographic apostrophe (U+2019) as
// the ASCII one, so "Don’t" hits the same entry as "don't".
bool is_english_stopword(std::string_view token);

}  // namespace otut

#endif  // OTUT_STOPWORDS_HPP_
