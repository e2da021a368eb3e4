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
// Error synthesizers. All corruption happens on the SOURCE side while the
// target stays untouched: inserting source tokens makes the target
// under-translate it (UT), omitting source tokens makes the target
// over-translate it (OT). Subtle variants edit 1..max_token_edits tokens;
// gross variants add or remove one whole sentence.

#ifndef OTUT_SYNTHESIS_HPP_
#define OTUT_SYNTHESIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "otut/edits.hpp"
#include "otut/encoders.hpp"
#include "otut/labels.hpp"
#include "otut/rng.hpp"
#include "otut/subtitle_pair.hpp"

namespace otut {

struct SynthesisConfig {
  int max_token_edits = 5;
  int candidates_per_pair = 20;
  double percentile_drop_fraction = 0.4;
  int mask_top_k = 50;
  double ot_fraction = 0.30;
  double ut_fraction = 0.30;
  double ne_fraction = 0.40;
  double subtle_fraction_of_errors = 0.83;
  double train_fraction = 0.80;
  std::uint64_t seed = 0;
  // How many labeled samples assemble_dataset should emit in total.
  std::size_t sample_count = 0;
};

// Throws std::invalid_argument on out-of-range fields (fractions outside
// (0,1), class mix not summing to 1, max_token_edits < 1, ...).
void validate(const SynthesisConfig& cfg);

nlohmann::ordered_json to_json(const SynthesisConfig& cfg);
SynthesisConfig synthesis_config_from_json(const nlohmann::json& block);

// A possibly-corrupted pair with its label and full provenance. The edits
// replay on original_source to reproduce pair.source_text exactly.
struct LabeledSample {
  SubtitlePair pair;
  ClassLabel label = ClassLabel::NE;
  Granularity granularity = Granularity::none;
  std::vector<EditRecord> edits;
  std::string original_source;
  // Cosine between the original and corrupted source sentence vectors.
  // Meaningless for NE samples (kept at 1). Gross samples get it filled by
  // assemble_dataset, which owns the word-vector backend.
  double similarity_to_original = 1.0;
};

// Under-translation, subtle: k ~ uniform{1..max_token_edits} incremental
// insertions. Each round picks a uniform random slot, asks the mask filler
// for suggestions there, and inserts the highest-scoring one passing
// token_filter; when a slot offers no passable suggestion the remaining
// slots are tried, and a round with no insertable slot abandons that
// candidate. candidates_per_pair candidates are built, scored by cosine to
// the original sentence vector, thinned by percentile_filter, and one
// survivor is drawn uniformly. Returns nothing when no candidate survives.
std::optional<LabeledSample> make_ut_subtle(const SubtitlePair& pair,
                                            const EncoderBundle& bundle,
                                            const SynthesisConfig& cfg,
                                            Rng& rng);

// Over-translation, subtle: same shape, but each round removes one
// uniformly chosen token. Requires |tokenize(source)| > max_token_edits so
// the source can never be emptied; throws std::invalid_argument otherwise.
std::optional<LabeledSample> make_ot_subtle(const SubtitlePair& pair,
                                            const EncoderBundle& bundle,
                                            const SynthesisConfig& cfg,
                                            Rng& rng);

enum class GrossDirection { ot, ut };

// Gross edits: ot removes one uniformly chosen sentence (returns nothing on
// a single-sentence source: the caller falls back to a subtle edit); ut
// inserts the donor sentence at a uniformly chosen boundary and throws
// std::invalid_argument when no donor is given. Either way the result must
// re-split to exactly one sentence more or fewer than the original;
// sentences that merge on joining (e.g. an unterminated fragment absorbing
// its neighbor) fail that check and return nothing.
std::optional<LabeledSample> make_gross(const SubtitlePair& pair,
                                        GrossDirection direction,
                                        const std::optional<std::string>& donor,
                                        Rng& rng);

}  // namespace otut

#endif  // OTUT_SYNTHESIS_HPP_
