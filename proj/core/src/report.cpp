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

#include "otut/report.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "otut/metrics.hpp"

namespace otut {
namespace {

LanguageRow make_row(const std::string& language,
                     const std::vector<ClassLabel>& gold,
                     const std::vector<ClassLabel>& pred) {
  LanguageRow row;
  row.language = language;
  for (ClassLabel g : gold) {
    switch (g) {
      case ClassLabel::NE:
        ++row.ne_count;
        break;
      case ClassLabel::UT:
        ++row.ut_count;
        break;
      case ClassLabel::OT:
        ++row.ot_count;
        break;
    }
  }
  row.accuracy = accuracy(gold, pred);
  row.weighted_f1 = weighted_f1(gold, pred);
  if (row.ut_count + row.ot_count > 0) {
    row.error_recall = error_recall(gold, pred);
  }
  return row;
}

std::string format_metric(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

}  // namespace

bool plausible_language_tag(std::string_view tag) {
  std::size_t i = 0;
  while (i < tag.size() && tag[i] >= 'a' && tag[i] <= 'z') ++i;
  if (i < 2 || i > 3) return false;
  // Optional subtags like the region in "pt-BR": separator plus 1..8
  // alphanumerics each.
  while (i < tag.size()) {
    if (tag[i] != '-' && tag[i] != '_') return false;
    ++i;
    std::size_t run = 0;
    while (i < tag.size() && tag[i] != '-' && tag[i] != '_') {
      if (!std::isalnum(static_cast<unsigned char>(tag[i]))) return false;
      ++i;
      ++run;
    }
    if (run < 1 || run > 8) return false;
  }
  return true;
}

EvalReport per_language_report(const std::vector<LabeledSample>& eval_set,
                               const std::vector<ClassLabel>& predictions) {
  if (eval_set.empty()) {
    throw std::invalid_argument("per_language_report: empty evaluation set");
  }
  if (eval_set.size() != predictions.size()) {
    throw std::invalid_argument(
        "per_language_report: " + std::to_string(eval_set.size()) +
        " samples but " + std::to_string(predictions.size()) + " predictions");
  }

  EvalReport report;
  std::map<std::string, std::pair<std::vector<ClassLabel>,
                                  std::vector<ClassLabel>>>
      groups;
  std::vector<ClassLabel> all_gold, all_pred;
  all_gold.reserve(eval_set.size());
  all_pred.reserve(eval_set.size());
  for (std::size_t i = 0; i < eval_set.size(); ++i) {
    std::string key = eval_set[i].pair.target_lang;
    if (!plausible_language_tag(key)) {
      const std::string warning =
          "unknown language tag \"" + key + "\" grouped under \"other\"";
      if (std::find(report.warnings.begin(), report.warnings.end(),
                    warning) == report.warnings.end()) {
        report.warnings.push_back(warning);
      }
      key = "other";
    }
    auto& [gold, pred] = groups[key];
    gold.push_back(eval_set[i].label);
    pred.push_back(predictions[i]);
    all_gold.push_back(eval_set[i].label);
    all_pred.push_back(predictions[i]);
  }

  for (const auto& [language, slices] : groups) {
    report.rows.push_back(
        make_row(language, slices.first, slices.second));
  }
  report.pooled = make_row("all", all_gold, all_pred);
  return report;
}

nlohmann::ordered_json to_json(const EvalReport& report) {
  auto row_json = [](const LanguageRow& row) {
    nlohmann::ordered_json j;
    j["language"] = row.language;
    nlohmann::ordered_json counts;
    counts["NE"] = row.ne_count;
    counts["UT"] = row.ut_count;
    counts["OT"] = row.ot_count;
    j["counts"] = std::move(counts);
    j["accuracy"] = row.accuracy;
    j["weighted_f1"] = row.weighted_f1;
    if (row.error_recall) {
      j["error_recall"] = *row.error_recall;
    } else {
      j["error_recall"] = nullptr;
    }
    return j;
  };
  nlohmann::ordered_json j;
  auto rows = nlohmann::ordered_json::array();
  for (const LanguageRow& row : report.rows) rows.push_back(row_json(row));
  j["languages"] = std::move(rows);
  j["pooled"] = row_json(report.pooled);
  j["warnings"] = report.warnings;
  return j;
}

std::string to_text_table(const EvalReport& report) {
  constexpr int kCols = 7;
  std::vector<std::array<std::string, kCols>> cells;
  cells.push_back({"language", "#NE", "#UT", "#OT", "accuracy", "weighted_f1",
                   "error_recall"});
  auto add_row = [&cells](const LanguageRow& row) {
    cells.push_back({row.language, std::to_string(row.ne_count),
                     std::to_string(row.ut_count),
                     std::to_string(row.ot_count),
                     format_metric(row.accuracy),
                     format_metric(row.weighted_f1),
                     row.error_recall ? format_metric(*row.error_recall)
                                      : "n/a"});
  };
  for (const LanguageRow& row : report.rows) add_row(row);
  add_row(report.pooled);

  std::array<std::size_t, kCols> width{};
  for (const auto& row : cells) {
    for (int c = 0; c < kCols; ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : cells) {
    for (int c = 0; c < kCols; ++c) {
      if (c > 0) out += "  ";
      // The language column reads left-aligned, numbers right-aligned.
      const std::size_t pad = width[c] - row[c].size();
      if (c == 0) {
        out += row[c];
        out.append(pad, ' ');
      } else {
        out.append(pad, ' ');
        out += row[c];
      }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

}  // namespace otut
