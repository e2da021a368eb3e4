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

#include "otut/annotations.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace otut {
namespace {

constexpr char kHeader[] = "pair_id,annotator_id,mark";

}  // namespace

std::string to_string(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::incomplete:
      return "incomplete";
    case ExclusionReason::abstention:
      return "abstention";
    case ExclusionReason::disagreement:
      return "disagreement";
  }
  return "?";
}

CollationResult collate_unanimous(const std::vector<AnnotationRecord>& records,
                                  int annotators_required) {
  if (annotators_required < 1) {
    throw std::invalid_argument(
        "collate_unanimous: annotators_required must be >= 1");
  }
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<std::optional<ClassLabel>>>
      marks;
  std::unordered_set<std::string> seen;
  seen.reserve(records.size());
  for (const AnnotationRecord& rec : records) {
    // \x1f never occurs in ids read from CSV, so the joint key is unique.
    if (!seen.insert(rec.pair_id + '\x1f' + rec.annotator_id).second) {
      throw std::invalid_argument(
          "collate_unanimous: duplicate record for pair \"" + rec.pair_id +
          "\", annotator \"" + rec.annotator_id + "\"");
    }
    auto [it, inserted] = marks.try_emplace(rec.pair_id);
    if (inserted) order.push_back(rec.pair_id);
    it->second.push_back(rec.mark);
  }

  CollationResult result;
  for (const std::string& pair_id : order) {
    const auto& ms = marks[pair_id];
    if (ms.size() != static_cast<std::size_t>(annotators_required)) {
      result.excluded.emplace_back(pair_id, ExclusionReason::incomplete);
      continue;
    }
    if (std::any_of(ms.begin(), ms.end(),
                    [](const auto& m) { return !m.has_value(); })) {
      result.excluded.emplace_back(pair_id, ExclusionReason::abstention);
      continue;
    }
    const ClassLabel first = *ms.front();
    if (std::any_of(ms.begin(), ms.end(),
                    [first](const auto& m) { return *m != first; })) {
      result.excluded.emplace_back(pair_id, ExclusionReason::disagreement);
      continue;
    }
    result.included.emplace_back(pair_id, first);
  }
  return result;
}

std::vector<AnnotationRecord> read_annotations_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("read_annotations_csv: cannot read " + path);
  }
  std::vector<AnnotationRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == kHeader) continue;

    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string::npos
                               ? std::string::npos
                               : line.find(',', c1 + 1);
    const auto fail = [&](const std::string& why) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               why);
    };
    if (c2 == std::string::npos) fail("expected 3 comma-separated fields");
    if (line.find(',', c2 + 1) != std::string::npos) {
      fail("expected 3 comma-separated fields");
    }

    AnnotationRecord rec;
    rec.pair_id = line.substr(0, c1);
    rec.annotator_id = line.substr(c1 + 1, c2 - c1 - 1);
    const std::string mark = line.substr(c2 + 1);
    if (rec.pair_id.empty()) fail("empty pair_id");
    if (rec.annotator_id.empty()) fail("empty annotator_id");
    if (!mark.empty()) {
      try {
        rec.mark = class_label_from_string(mark);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_annotations_csv(const std::string& path,
                           const std::vector<AnnotationRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_annotations_csv: cannot write " + path);
  }
  out << kHeader << '\n';
  for (const AnnotationRecord& rec : records) {
    out << rec.pair_id << ',' << rec.annotator_id << ','
        << (rec.mark ? to_string(*rec.mark) : "") << '\n';
  }
  if (!out) {
    throw std::runtime_error("write_annotations_csv: write failed for " +
                             path);
  }
}

}  // namespace otut
