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
// Per-target-language evaluation reports: class counts plus accuracy,
// weighted F1 and error recall for each language and pooled over all of
// them, as machine-readable JSON and an aligned text table.

#ifndef OTUT_REPORT_HPP_
#define OTUT_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "otut/labels.hpp"
#include "otut/synthesis.hpp"

namespace otut {

struct LanguageRow {
  std::string language;
  std::size_t ne_count = 0;
  std::size_t ut_count = 0;
  std::size_t ot_count = 0;
  double accuracy = 0.0;
  double weighted_f1 = 0.0;
  // Unset when the slice has no gold error labels (rendered as "n/a").
  std::optional<double> error_recall;
};

struct EvalReport {
  // One row per language, ordered by language code. Samples whose
  // target_lang is not a plausible language tag are grouped under "other".
  std::vector<LanguageRow> rows;
  // The same metrics over every sample, language "all".
  LanguageRow pooled;
  std::vector<std::string> warnings;
};

// True for lowercase two/three-letter codes with optional alphanumeric
// subtags ("de", "pt-BR"); anything else lands in the "other" row.
bool plausible_language_tag(std::string_view tag);

// predictions[i] is the predicted class of eval_set[i]. Throws
// std::invalid_argument on empty or unequal-length inputs.
EvalReport per_language_report(const std::vector<LabeledSample>& eval_set,
                               const std::vector<ClassLabel>& predictions);

nlohmann::ordered_json to_json(const EvalReport& report);
std::string to_text_table(const EvalReport& report);

}  // namespace otut

#endif  // OTUT_REPORT_HPP_
