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

#ifndef OTUT_CORPUS_IO_HPP_
#define OTUT_CORPUS_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "otut/subtitle_pair.hpp"

namespace otut {

// One rejected input record: where it came from and why it was dropped.
struct RecordError {
  std::string location;  // "file:line" or "file#cue"
  std::string message;
};

struct ReadResult {
  std::vector<SubtitlePair> pairs;
  std::vector<RecordError> errors;
};

// Reads parallel pairs from a JSONL file. Each line is an object with at
// least "src" and "tgt" string fields; "id" and "tgt_lang" are optional
// ("id" defaults to "<filename>:<line>", "tgt_lang" to `default_tgt_lang`).
// Any other fields are preserved verbatim on the pair and written back out
// by write_jsonl. Malformed lines are reported in `errors` rather than
// aborting the whole read; blank lines are skipped silently.
ReadResult read_jsonl(const std::string& path,
                      const std::string& default_tgt_lang = "");

// Same, but from an already-open stream. `name` labels error locations.
ReadResult read_jsonl_stream(std::istream& in, const std::string& name,
                             const std::string& default_tgt_lang = "");

// Reads a pair of SRT subtitle files and aligns them cue-by-cue: the Nth cue
// of the source file pairs with the Nth cue of the target file. Cue payload
// lines are joined with single spaces. A cue count mismatch between the two
// files is a hard error (std::runtime_error): ordinal alignment is
// meaningless once the files drift.
ReadResult read_srt_pair(const std::string& src_path,
                         const std::string& tgt_path,
                         const std::string& tgt_lang);

// Parses one SRT document into cue texts (payload lines joined by spaces).
// Index and timing lines are consumed and discarded. Cues with empty payload
// are reported in `errors` and skipped.
struct SrtDocument {
  std::vector<std::string> cues;
  std::vector<RecordError> errors;
};
SrtDocument parse_srt(std::istream& in, const std::string& name);

// Writes pairs as JSONL: {"id", "src", "tgt", "tgt_lang", ...extra fields}.
void write_jsonl(std::ostream& out, const std::vector<SubtitlePair>& pairs);
void write_jsonl(const std::string& path,
                 const std::vector<SubtitlePair>& pairs);

}  // namespace otut

#endif  // OTUT_CORPUS_IO_HPP_
