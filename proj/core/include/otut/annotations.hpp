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
//
// Multi-annotator judgments and their collation into a gold evaluation
// set. Only pairs where every annotator marked the same non-abstain class
// are kept; everything else is excluded with a reason.

#ifndef OTUT_ANNOTATIONS_HPP_
#define OTUT_ANNOTATIONS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "otut/labels.hpp"

namespace otut {

struct AnnotationRecord {
  std::string pair_id;
  std::string annotator_id;
  // Absent means the annotator abstained (marked nothing).
  std::optional<ClassLabel> mark;
};

enum class ExclusionReason { incomplete, abstention, disagreement };

std::string to_string(ExclusionReason reason);

struct CollationResult {
  // Pairs with a unanimous non-abstain mark, in first-appearance order.
  std::vector<std::pair<std::string, ClassLabel>> included;
  // Everything else, also in first-appearance order. A pair gets exactly
  // one reason, checked in the order incomplete, abstention, disagreement.
  std::vector<std::pair<std::string, ExclusionReason>> excluded;
};

// Throws std::invalid_argument on a duplicate (pair_id, annotator_id) or
// annotators_required < 1. A pair with any record count other than
// annotators_required is excluded as incomplete.
CollationResult collate_unanimous(const std::vector<AnnotationRecord>& records,
                                  int annotators_required = 3);

// CSV with columns pair_id, annotator_id, mark where mark is NE, OT, UT or
// empty for abstention. A first line reading exactly
// "pair_id,annotator_id,mark" is treated as a header. Malformed lines
// throw std::runtime_error naming "path:line".
std::vector<AnnotationRecord> read_annotations_csv(const std::string& path);
void write_annotations_csv(const std::string& path,
                           const std::vector<AnnotationRecord>& records);

}  // namespace otut

#endif  // OTUT_ANNOTATIONS_HPP_
