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

#include "otut/corpus_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "otut/tokenizer.hpp"

namespace otut {

namespace {

std::string location_of(const std::string& name, std::size_t line) {
  return name + ":" + std::to_string(line);
}

// Strips a single trailing '\r' so CRLF files parse like LF files.
void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool looks_like_timing(const std::string& line) {
  return line.find("-->") != std::string::npos;
}

bool is_integer_line(const std::string& line) {
  if (line.empty()) return false;
  for (char c : line) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

ReadResult read_jsonl_stream(std::istream& in, const std::string& name,
                             const std::string& default_tgt_lang) {
  ReadResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) continue;
    nlohmann::ordered_json record;
    try {
      record = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      result.errors.push_back({location_of(name, line_no), e.what()});
      continue;
    }
    if (!record.is_object()) {
      result.errors.push_back(
          {location_of(name, line_no), "record is not a JSON object"});
      continue;
    }
    if (!record.contains("src") || !record["src"].is_string()) {
      result.errors.push_back(
          {location_of(name, line_no), "missing string field \"src\""});
      continue;
    }
    if (!record.contains("tgt") || !record["tgt"].is_string()) {
      result.errors.push_back(
          {location_of(name, line_no), "missing string field \"tgt\""});
      continue;
    }
    SubtitlePair pair;
    pair.source_text = record["src"].get<std::string>();
    pair.target_text = record["tgt"].get<std::string>();
    if (record.contains("id") && record["id"].is_string()) {
      pair.id = record["id"].get<std::string>();
    } else {
      pair.id = location_of(name, line_no);
    }
    if (record.contains("tgt_lang") && record["tgt_lang"].is_string()) {
      pair.target_lang = record["tgt_lang"].get<std::string>();
    } else {
      pair.target_lang = default_tgt_lang;
    }
    for (auto it = record.begin(); it != record.end(); ++it) {
      const std::string& key = it.key();
      if (key == "id" || key == "src" || key == "tgt" || key == "tgt_lang") {
        continue;
      }
      pair.extra[key] = it.value();
    }
    result.pairs.push_back(std::move(pair));
  }
  return result;
}

ReadResult read_jsonl(const std::string& path,
                      const std::string& default_tgt_lang) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_jsonl_stream(in, path, default_tgt_lang);
}

SrtDocument parse_srt(std::istream& in, const std::string& name) {
  SrtDocument doc;
  std::string line;
  std::size_t line_no = 0;
  std::size_t cue_no = 0;
  // Skip a UTF-8 BOM if the file starts with one.
  std::istream::int_type first = in.peek();
  if (first == 0xEF) {
    char bom[3];
    in.read(bom, 3);
  }
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) continue;
    // A cue starts at its (optional) numeric index followed by the timing
    // line. Some files omit the index, so accept a bare timing line too.
    std::size_t cue_start_line = line_no;
    if (is_integer_line(line)) {
      if (!std::getline(in, line)) break;
      ++line_no;
      chomp(line);
    }
    if (!looks_like_timing(line)) {
      doc.errors.push_back({location_of(name, line_no),
                            "expected timing line, got \"" + line + "\""});
      // Resync: skip until the next blank line.
      while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty()) break;
      }
      continue;
    }
    ++cue_no;
    std::vector<std::string> payload;
    while (std::getline(in, line)) {
      ++line_no;
      chomp(line);
      if (line.empty()) break;
      payload.push_back(line);
    }
    std::string text;
    for (std::size_t i = 0; i < payload.size(); ++i) {
      if (i > 0) text.push_back(' ');
      text += payload[i];
    }
    text = normalize_whitespace(text);
    if (text.empty()) {
      doc.errors.push_back({name + "#" + std::to_string(cue_no) + " (line " +
                                std::to_string(cue_start_line) + ")",
                            "cue has no payload text"});
      continue;
    }
    doc.cues.push_back(std::move(text));
  }
  return doc;
}

ReadResult read_srt_pair(const std::string& src_path,
                         const std::string& tgt_path,
                         const std::string& tgt_lang) {
  std::ifstream src_in(src_path);
  if (!src_in) throw std::runtime_error("cannot open " + src_path);
  std::ifstream tgt_in(tgt_path);
  if (!tgt_in) throw std::runtime_error("cannot open " + tgt_path);

  SrtDocument src_doc = parse_srt(src_in, src_path);
  SrtDocument tgt_doc = parse_srt(tgt_in, tgt_path);
  if (src_doc.cues.size() != tgt_doc.cues.size()) {
    throw std::runtime_error(
        "cue count mismatch: " + src_path + " has " +
        std::to_string(src_doc.cues.size()) + " cues, " + tgt_path + " has " +
        std::to_string(tgt_doc.cues.size()));
  }

  ReadResult result;
  result.errors = std::move(src_doc.errors);
  result.errors.insert(result.errors.end(), tgt_doc.errors.begin(),
                       tgt_doc.errors.end());
  result.pairs.reserve(src_doc.cues.size());
  for (std::size_t i = 0; i < src_doc.cues.size(); ++i) {
    SubtitlePair pair;
    pair.id = src_path + "#" + std::to_string(i + 1);
    pair.source_text = src_doc.cues[i];
    pair.target_text = tgt_doc.cues[i];
    pair.target_lang = tgt_lang;
    result.pairs.push_back(std::move(pair));
  }
  return result;
}

void write_jsonl(std::ostream& out, const std::vector<SubtitlePair>& pairs) {
  for (const SubtitlePair& pair : pairs) {
    nlohmann::ordered_json record;
    record["id"] = pair.id;
    record["src"] = pair.source_text;
    record["tgt"] = pair.target_text;
    record["tgt_lang"] = pair.target_lang;
    for (auto it = pair.extra.begin(); it != pair.extra.end(); ++it) {
      record[it.key()] = it.value();
    }
    out << record.dump() << '\n';
  }
}

void write_jsonl(const std::string& path,
                 const std::vector<SubtitlePair>& pairs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_jsonl(out, pairs);
}

}  // namespace otut
