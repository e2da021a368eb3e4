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

#ifndef OTUT_EDITS_HPP_
#define OTUT_EDITS_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace otut {

enum class EditKind {
  insert_token,
  omit_token,
  add_sentence,
  remove_sentence,
};

std::string to_string(EditKind kind);
EditKind edit_kind_from_string(const std::string& name);

// One applied corruption. `position` indexes the token list for token
// edits and the sentence list for sentence edits, valid at the moment the
// edit was applied (edits in a list compose left to right). `payload` is
// the inserted token or added sentence; empty for omissions and removals.
struct EditRecord {
  EditKind kind = EditKind::insert_token;
  std::size_t position = 0;
  std::string payload;

  bool operator==(const EditRecord&) const = default;
};

nlohmann::ordered_json to_json(const EditRecord& edit);
EditRecord edit_from_json(const nlohmann::json& j);

// Re-applies `edits` to `original_source` and returns the corrupted text.
// Token edits replay on the tokenized text (joined by the detokenizer);
// sentence edits replay on the sentence split (joined with single spaces).
// This reproduces the synthesizers' output byte for byte because they build
// their output through the exact same joins. Throws std::invalid_argument
// on out-of-range positions, on a list mixing token and sentence edits, or
// on an empty payload for an insert/add edit.
std::string replay_edits(const std::string& original_source,
                         const std::vector<EditRecord>& edits,
                         const std::string& lang);

}  // namespace otut

#endif  // OTUT_EDITS_HPP_
