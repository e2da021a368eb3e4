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

#include "otut/synthesis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "otut/percentile_filter.hpp"
#include "otut/sentence_split.hpp"
#include "otut/token_filter.hpp"
#include "otut/tokenizer.hpp"

namespace otut {

namespace {

struct Candidate {
  std::vector<std::string> tokens;
  std::vector<EditRecord> edits;
  double score = 0.0;
};

// A suggestion may only enter a token list if the tokenizer would hand it
// back unchanged; otherwise the emitted source would re-tokenize to a
// different count than the edits claim. Vocabulary coming from our own
// tokenizer always passes; entries of external frequency tables may not.
bool tokenizer_stable(const std::string& token, const std::string& lang) {
  TokenSequence seq = tokenize(token, lang);
  return seq.size() == 1 && seq.tokens[0] == token;
}

// One insertion round: try the uniformly chosen slot first, then the
// remaining slots in shuffled order, inserting the best passing suggestion
// at the first slot that has one. Returns false when no slot works.
bool insert_round(std::vector<std::string>& tokens,
                  std::vector<EditRecord>& edits, const EncoderBundle& bundle,
                  const SynthesisConfig& cfg, const std::string& lang,
                  Rng& rng) {
  TokenSequence seq{tokens, lang};
  std::vector<std::size_t> slots(tokens.size() + 1);
  std::iota(slots.begin(), slots.end(), 0);
  rng.shuffle(slots);

  const std::string marker = bundle.mask_filler->subword_marker();
  for (std::size_t slot : slots) {
    auto suggestions = bundle.mask_filler->fill_mask(
        seq, slot, static_cast<std::size_t>(cfg.mask_top_k));
    std::optional<std::string> prev =
        slot > 0 ? std::optional<std::string>(tokens[slot - 1]) : std::nullopt;
    std::optional<std::string> next =
        slot < tokens.size() ? std::optional<std::string>(tokens[slot])
                             : std::nullopt;
    for (const MaskSuggestion& suggestion : suggestions) {
      if (!token_filter(suggestion.token, prev, next, marker).keep) continue;
      if (!tokenizer_stable(suggestion.token, lang)) continue;
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(slot),
                    suggestion.token);
      edits.push_back({EditKind::insert_token, slot, suggestion.token});
      return true;
    }
  }
  return false;
}

LabeledSample finish_subtle(const SubtitlePair& pair, ClassLabel label,
                            Candidate candidate) {
  LabeledSample sample;
  sample.pair = pair;
  sample.pair.source_text = detokenize({candidate.tokens, pair.source_lang});
  sample.label = label;
  sample.granularity = Granularity::subtle;
  sample.edits = std::move(candidate.edits);
  sample.original_source = pair.source_text;
  sample.similarity_to_original = candidate.score;
  return sample;
}

// Shared tail of the two subtle synthesizers: score, thin, draw.
std::optional<LabeledSample> pick_candidate(const SubtitlePair& pair,
                                            ClassLabel label,
                                            std::vector<Candidate> candidates,
                                            const SynthesisConfig& cfg,
                                            Rng& rng) {
  if (candidates.empty()) return std::nullopt;
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const Candidate& c : candidates) scores.push_back(c.score);
  std::vector<std::size_t> survivors =
      percentile_survivors(scores, cfg.percentile_drop_fraction);
  if (survivors.empty()) return std::nullopt;
  std::size_t pick = survivors[rng.uniform_index(survivors.size())];
  return finish_subtle(pair, label, std::move(candidates[pick]));
}

}  // namespace

void validate(const SynthesisConfig& cfg) {
  if (cfg.max_token_edits < 1) {
    throw std::invalid_argument("synthesis: max_token_edits must be >= 1");
  }
  if (cfg.candidates_per_pair < 1) {
    throw std::invalid_argument("synthesis: candidates_per_pair must be >= 1");
  }
  if (!(cfg.percentile_drop_fraction >= 0.0 &&
        cfg.percentile_drop_fraction < 1.0)) {
    throw std::invalid_argument(
        "synthesis: percentile_drop_fraction must be in [0, 1)");
  }
  if (cfg.mask_top_k < 0) {
    throw std::invalid_argument("synthesis: mask_top_k must be >= 0");
  }
  auto fraction_ok = [](double f) { return f > 0.0 && f < 1.0; };
  if (!fraction_ok(cfg.ot_fraction) || !fraction_ok(cfg.ut_fraction) ||
      !fraction_ok(cfg.ne_fraction)) {
    throw std::invalid_argument("synthesis: class fractions must be in (0, 1)");
  }
  if (std::abs(cfg.ot_fraction + cfg.ut_fraction + cfg.ne_fraction - 1.0) >
      1e-9) {
    throw std::invalid_argument("synthesis: class mix must sum to 1");
  }
  if (!fraction_ok(cfg.subtle_fraction_of_errors)) {
    throw std::invalid_argument(
        "synthesis: subtle_fraction_of_errors must be in (0, 1)");
  }
  if (!fraction_ok(cfg.train_fraction)) {
    throw std::invalid_argument("synthesis: train_fraction must be in (0, 1)");
  }
}

nlohmann::ordered_json to_json(const SynthesisConfig& cfg) {
  nlohmann::ordered_json j;
  j["max_token_edits"] = cfg.max_token_edits;
  j["candidates_per_pair"] = cfg.candidates_per_pair;
  j["percentile_drop_fraction"] = cfg.percentile_drop_fraction;
  j["mask_top_k"] = cfg.mask_top_k;
  j["ot_fraction"] = cfg.ot_fraction;
  j["ut_fraction"] = cfg.ut_fraction;
  j["ne_fraction"] = cfg.ne_fraction;
  j["subtle_fraction_of_errors"] = cfg.subtle_fraction_of_errors;
  j["train_fraction"] = cfg.train_fraction;
  j["seed"] = cfg.seed;
  j["sample_count"] = cfg.sample_count;
  return j;
}

SynthesisConfig synthesis_config_from_json(const nlohmann::json& block) {
  static const std::vector<std::string> known = {
      "max_token_edits", "candidates_per_pair", "percentile_drop_fraction",
      "mask_top_k",      "ot_fraction",         "ut_fraction",
      "ne_fraction",     "subtle_fraction_of_errors", "train_fraction",
      "seed",            "sample_count"};
  if (!block.is_object()) {
    throw std::invalid_argument("synthesis config must be a JSON object");
  }
  for (auto it = block.begin(); it != block.end(); ++it) {
    bool ok = false;
    for (const std::string& k : known) ok = ok || k == it.key();
    if (!ok) {
      throw std::invalid_argument("synthesis config: unknown key \"" +
                                  it.key() + "\"");
    }
  }
  SynthesisConfig cfg;
  if (block.contains("max_token_edits")) {
    cfg.max_token_edits = block["max_token_edits"].get<int>();
  }
  if (block.contains("candidates_per_pair")) {
    cfg.candidates_per_pair = block["candidates_per_pair"].get<int>();
  }
  if (block.contains("percentile_drop_fraction")) {
    cfg.percentile_drop_fraction =
        block["percentile_drop_fraction"].get<double>();
  }
  if (block.contains("mask_top_k")) {
    cfg.mask_top_k = block["mask_top_k"].get<int>();
  }
  if (block.contains("ot_fraction")) {
    cfg.ot_fraction = block["ot_fraction"].get<double>();
  }
  if (block.contains("ut_fraction")) {
    cfg.ut_fraction = block["ut_fraction"].get<double>();
  }
  if (block.contains("ne_fraction")) {
    cfg.ne_fraction = block["ne_fraction"].get<double>();
  }
  if (block.contains("subtle_fraction_of_errors")) {
    cfg.subtle_fraction_of_errors =
        block["subtle_fraction_of_errors"].get<double>();
  }
  if (block.contains("train_fraction")) {
    cfg.train_fraction = block["train_fraction"].get<double>();
  }
  if (block.contains("seed")) cfg.seed = block["seed"].get<std::uint64_t>();
  if (block.contains("sample_count")) {
    cfg.sample_count = block["sample_count"].get<std::size_t>();
  }
  validate(cfg);
  return cfg;
}

std::optional<LabeledSample> make_ut_subtle(const SubtitlePair& pair,
                                            const EncoderBundle& bundle,
                                            const SynthesisConfig& cfg,
                                            Rng& rng) {
  validate(cfg);
  TokenSequence original = tokenize(pair.source_text, pair.source_lang);
  if (original.empty()) {
    throw std::invalid_argument("make_ut_subtle: source has no tokens");
  }
  Vector original_vec = sentence_vector(original, *bundle.word_vectors);

  std::vector<Candidate> candidates;
  for (int c = 0; c < cfg.candidates_per_pair; ++c) {
    std::size_t k =
        1 + rng.uniform_index(static_cast<std::size_t>(cfg.max_token_edits));
    Candidate candidate{original.tokens, {}, 0.0};
    bool ok = true;
    for (std::size_t round = 0; round < k; ++round) {
      if (!insert_round(candidate.tokens, candidate.edits, bundle, cfg,
                        pair.source_lang, rng)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    candidate.score = cosine(
        original_vec,
        sentence_vector({candidate.tokens, pair.source_lang},
                        *bundle.word_vectors));
    candidates.push_back(std::move(candidate));
  }
  return pick_candidate(pair, ClassLabel::UT, std::move(candidates), cfg, rng);
}

std::optional<LabeledSample> make_ot_subtle(const SubtitlePair& pair,
                                            const EncoderBundle& bundle,
                                            const SynthesisConfig& cfg,
                                            Rng& rng) {
  validate(cfg);
  TokenSequence original = tokenize(pair.source_text, pair.source_lang);
  if (original.size() <= static_cast<std::size_t>(cfg.max_token_edits)) {
    throw std::invalid_argument(
        "make_ot_subtle: source must have more than " +
        std::to_string(cfg.max_token_edits) + " tokens, has " +
        std::to_string(original.size()));
  }
  Vector original_vec = sentence_vector(original, *bundle.word_vectors);

  std::vector<Candidate> candidates;
  for (int c = 0; c < cfg.candidates_per_pair; ++c) {
    std::size_t k =
        1 + rng.uniform_index(static_cast<std::size_t>(cfg.max_token_edits));
    Candidate candidate{original.tokens, {}, 0.0};
    for (std::size_t round = 0; round < k; ++round) {
      std::size_t victim = rng.uniform_index(candidate.tokens.size());
      candidate.tokens.erase(candidate.tokens.begin() +
                             static_cast<std::ptrdiff_t>(victim));
      candidate.edits.push_back({EditKind::omit_token, victim, ""});
    }
    candidate.score = cosine(
        original_vec,
        sentence_vector({candidate.tokens, pair.source_lang},
                        *bundle.word_vectors));
    candidates.push_back(std::move(candidate));
  }
  return pick_candidate(pair, ClassLabel::OT, std::move(candidates), cfg, rng);
}

std::optional<LabeledSample> make_gross(const SubtitlePair& pair,
                                        GrossDirection direction,
                                        const std::optional<std::string>& donor,
                                        Rng& rng) {
  std::vector<std::string> sentences = split_sentences(pair.source_text);
  const std::size_t original_count = sentences.size();

  LabeledSample sample;
  sample.pair = pair;
  sample.granularity = Granularity::gross;
  sample.original_source = pair.source_text;

  if (direction == GrossDirection::ot) {
    if (original_count < 2) return std::nullopt;
    std::size_t victim = rng.uniform_index(original_count);
    sentences.erase(sentences.begin() + static_cast<std::ptrdiff_t>(victim));
    sample.label = ClassLabel::OT;
    sample.edits.push_back({EditKind::remove_sentence, victim, ""});
  } else {
    if (!donor || donor->empty()) {
      throw std::invalid_argument("make_gross: ut direction requires a donor");
    }
    std::size_t slot = rng.uniform_index(original_count + 1);
    sentences.insert(sentences.begin() + static_cast<std::ptrdiff_t>(slot),
                     *donor);
    sample.label = ClassLabel::UT;
    sample.edits.push_back({EditKind::add_sentence, slot, *donor});
  }

  sample.pair.source_text = join_sentences(sentences);
  const std::size_t expected = direction == GrossDirection::ot
                                   ? original_count - 1
                                   : original_count + 1;
  // Joining can merge an unterminated fragment into its neighbor; such a
  // result would not carry the advertised one-sentence asymmetry.
  if (split_sentences(sample.pair.source_text).size() != expected) {
    return std::nullopt;
  }
  sample.similarity_to_original = 0.0;  // assemble_dataset fills this in
  return sample;
}

}  // namespace otut
