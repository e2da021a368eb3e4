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

#include "otut/edits.hpp"

#include <stdexcept>

#include "otut/sentence_split.hpp"
#include "otut/tokenizer.hpp"

namespace otut {

namespace {

bool is_token_edit(EditKind kind) {
  return kind == EditKind::insert_token || kind == EditKind::omit_token;
}

}  // namespace

std::string to_string(EditKind kind) {
  switch (kind) {
    case EditKind::insert_token:
      return "insert_token";
    case EditKind::omit_token:
      return "omit_token";
    case EditKind::add_sentence:
      return "add_sentence";
    case EditKind::remove_sentence:
      return "remove_sentence";
  }
  throw std::invalid_argument("invalid edit kind value");
}

EditKind edit_kind_from_string(const std::string& name) {
  if (name == "insert_token") return EditKind::insert_token;
  if (name == "omit_token") return EditKind::omit_token;
  if (name == "add_sentence") return EditKind::add_sentence;
  if (name == "remove_sentence") return EditKind::remove_sentence;
  throw std::invalid_argument("unknown edit kind \"" + name + "\"");
}

nlohmann::ordered_json to_json(const EditRecord& edit) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(edit.kind);
  j["position"] = edit.position;
  j["payload"] = edit.payload;
  return j;
}

EditRecord edit_from_json(const nlohmann::json& j) {
  EditRecord edit;
  edit.kind = edit_kind_from_string(j.at("kind").get<std::string>());
  edit.position = j.at("position").get<std::size_t>();
  edit.payload = j.at("payload").get<std::string>();
  return edit;
}

std::string replay_edits(const std::string& original_source,
                         const std::vector<EditRecord>& edits,
                         const std::string& lang) {
  if (edits.empty()) return original_source;

  bool token_mode = is_token_edit(edits.front().kind);
  for (const EditRecord& edit : edits) {
    if (is_token_edit(edit.kind) != token_mode) {
      throw std::invalid_argument(
          "replay_edits: token and sentence edits cannot mix in one sample");
    }
    bool needs_payload =
        edit.kind == EditKind::insert_token || edit.kind == EditKind::add_sentence;
    if (needs_payload && edit.payload.empty()) {
      throw std::invalid_argument("replay_edits: " + to_string(edit.kind) +
                                  " requires a payload");
    }
  }

  if (token_mode) {
    TokenSequence seq = tokenize(original_source, lang);
    for (const EditRecord& edit : edits) {
      if (edit.kind == EditKind::insert_token) {
        if (edit.position > seq.tokens.size()) {
          throw std::invalid_argument("replay_edits: insert position " +
                                      std::to_string(edit.position) +
                                      " out of range");
        }
        seq.tokens.insert(
            seq.tokens.begin() + static_cast<std::ptrdiff_t>(edit.position),
            edit.payload);
      } else {
        if (edit.position >= seq.tokens.size()) {
          throw std::invalid_argument("replay_edits: omit position " +
                                      std::to_string(edit.position) +
                                      " out of range");
        }
        seq.tokens.erase(seq.tokens.begin() +
                         static_cast<std::ptrdiff_t>(edit.position));
      }
    }
    return detokenize(seq);
  }

  std::vector<std::string> sentences = split_sentences(original_source);
  for (const EditRecord& edit : edits) {
    if (edit.kind == EditKind::add_sentence) {
      if (edit.position > sentences.size()) {
        throw std::invalid_argument("replay_edits: add position " +
                                    std::to_string(edit.position) +
                                    " out of range");
      }
      sentences.insert(
          sentences.begin() + static_cast<std::ptrdiff_t>(edit.position),
          edit.payload);
    } else {
      if (edit.position >= sentences.size()) {
        throw std::invalid_argument("replay_edits: remove position " +
                                    std::to_string(edit.position) +
                                    " out of range");
      }
      sentences.erase(sentences.begin() +
                      static_cast<std::ptrdiff_t>(edit.position));
    }
  }
  return join_sentences(sentences);
}

}  // namespace otut
