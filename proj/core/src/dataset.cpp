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

#include "otut/dataset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "otut/rng.hpp"
#include "otut/sentence_split.hpp"
#include "otut/tokenizer.hpp"

namespace otut {
namespace {

// Roles in assignment priority order. The rare capabilities go first so
// the pairs that can fill them are not wasted on roles any pair can fill.
enum Role : int { kOtGross = 0, kUtGross, kOtSubtle, kUtSubtle, kNe, kRoles };

constexpr std::array<Role, kRoles> kPriority = {kOtGross, kUtGross, kOtSubtle,
                                                kUtSubtle, kNe};

const char* role_name(Role r) {
  switch (r) {
    case kOtGross:
      return "ot_gross";
    case kUtGross:
      return "ut_gross";
    case kOtSubtle:
      return "ot_subtle";
    case kUtSubtle:
      return "ut_subtle";
    case kNe:
      return "ne";
    default:
      return "?";
  }
}

// Pairs are pulled in waves of this many; assignment and bookkeeping run
// serially per wave while generation may fan out to workers.
constexpr std::size_t kWaveSize = 256;

struct PairTraits {
  std::size_t source_tokens = 0;
  std::size_t sentences = 0;
};

bool capable(const PairTraits& t, Role role, std::size_t corpus_size,
             int max_token_edits) {
  switch (role) {
    case kOtGross:
      return t.sentences >= 2;
    case kUtGross:
      return corpus_size >= 2;
    case kOtSubtle:
      return t.source_tokens > static_cast<std::size_t>(max_token_edits);
    case kUtSubtle:
      return t.source_tokens >= 1;
    case kNe:
      return true;
    default:
      return false;
  }
}

std::optional<std::string> pick_donor(const std::vector<SubtitlePair>& corpus,
                                      std::size_t self, Rng& rng) {
  if (corpus.size() < 2) return std::nullopt;
  std::size_t j = rng.uniform_index(corpus.size() - 1);
  if (j >= self) ++j;
  std::vector<std::string> sentences =
      split_sentences(corpus[j].source_text);
  if (sentences.empty()) return std::nullopt;
  return sentences[rng.uniform_index(sentences.size())];
}

LabeledSample make_untouched(const SubtitlePair& pair) {
  LabeledSample s;
  s.pair = pair;
  s.label = ClassLabel::NE;
  s.granularity = Granularity::none;
  s.original_source = pair.source_text;
  s.similarity_to_original = 1.0;
  return s;
}

struct Generator {
  const std::vector<SubtitlePair>& corpus;
  const EncoderBundle& bundle;
  const SynthesisConfig& cfg;
  const Rng& root;

  std::optional<LabeledSample> operator()(std::size_t pair_index,
                                          Role role) const {
    const SubtitlePair& pair = corpus[pair_index];
    Rng rng = root.child("pair/" + pair.id + "/role/" + role_name(role));
    switch (role) {
      case kOtGross:
        return make_gross(pair, GrossDirection::ot, std::nullopt, rng);
      case kUtGross: {
        Rng donor_rng = root.child("donor/" + pair.id);
        std::optional<std::string> donor =
            pick_donor(corpus, pair_index, donor_rng);
        if (!donor) return std::nullopt;
        return make_gross(pair, GrossDirection::ut, donor, rng);
      }
      case kOtSubtle:
        return make_ot_subtle(pair, bundle, cfg, rng);
      case kUtSubtle:
        return make_ut_subtle(pair, bundle, cfg, rng);
      case kNe:
        return make_untouched(pair);
      default:
        return std::nullopt;
    }
  }
};

// Gross edits are produced without encoder access, so their similarity to
// the original source is filled in here.
double source_similarity(const LabeledSample& s, const WordVectors& wv) {
  TokenSequence before = tokenize(s.original_source, s.pair.source_lang);
  TokenSequence after = tokenize(s.pair.source_text, s.pair.source_lang);
  if (before.empty() || after.empty()) return 0.0;
  try {
    return cosine(sentence_vector(before, wv), sentence_vector(after, wv));
  } catch (const std::invalid_argument&) {
    // A degenerate word-vector file can produce an all-zero sentence mean.
    return 0.0;
  }
}

}  // namespace

AssembledDataset assemble_dataset(const std::vector<SubtitlePair>& corpus,
                                  const EncoderBundle& bundle,
                                  const SynthesisConfig& cfg, int workers) {
  validate(cfg);
  if (cfg.sample_count == 0) {
    throw std::invalid_argument("assemble_dataset: sample_count must be >= 1");
  }
  if (!bundle.word_vectors || !bundle.mask_filler) {
    throw std::invalid_argument("assemble_dataset: incomplete encoder bundle");
  }
  if (workers < 1) workers = 1;

  const auto n_total = static_cast<long long>(cfg.sample_count);
  const long long n_ot = std::llround(cfg.ot_fraction * n_total);
  const long long n_ut = std::llround(cfg.ut_fraction * n_total);
  const long long n_ne = n_total - n_ot - n_ut;
  const long long ot_subtle =
      std::llround(cfg.subtle_fraction_of_errors * n_ot);
  const long long ut_subtle =
      std::llround(cfg.subtle_fraction_of_errors * n_ut);

  std::array<long long, kRoles> remaining{};
  remaining[kOtGross] = n_ot - ot_subtle;
  remaining[kUtGross] = n_ut - ut_subtle;
  remaining[kOtSubtle] = ot_subtle;
  remaining[kUtSubtle] = ut_subtle;
  remaining[kNe] = n_ne;
  const std::array<long long, kRoles> quota = remaining;

  const Rng root(cfg.seed);
  const Generator generate{corpus, bundle, cfg, root};

  std::vector<LabeledSample> accepted;
  accepted.reserve(cfg.sample_count);
  std::array<long long, kRoles> produced{};

  auto open_total = [&remaining] {
    return std::accumulate(remaining.begin(), remaining.end(), 0LL);
  };
  auto accept = [&](LabeledSample&& sample, Role role) {
    if (sample.granularity == Granularity::gross) {
      sample.similarity_to_original =
          source_similarity(sample, *bundle.word_vectors);
    }
    accepted.push_back(std::move(sample));
    --remaining[role];
    ++produced[role];
  };

  struct WaveItem {
    std::size_t pair_index = 0;
    PairTraits traits;
    bool has_role = false;
    Role provisional = kNe;
    std::optional<LabeledSample> result;
  };

  std::size_t cursor = 0;
  while (open_total() > 0 && cursor < corpus.size()) {
    const std::size_t wave_end =
        std::min(cursor + kWaveSize, corpus.size());
    std::vector<WaveItem> wave;
    wave.reserve(wave_end - cursor);
    for (std::size_t i = cursor; i < wave_end; ++i) {
      WaveItem item;
      item.pair_index = i;
      item.traits.source_tokens =
          tokenize(corpus[i].source_text, corpus[i].source_lang).size();
      item.traits.sentences = split_sentences(corpus[i].source_text).size();
      wave.push_back(std::move(item));
    }
    cursor = wave_end;

    // Plan the wave against a scratch copy of the open quotas.
    std::array<long long, kRoles> available = remaining;
    for (WaveItem& item : wave) {
      for (Role r : kPriority) {
        if (available[r] > 0 &&
            capable(item.traits, r, corpus.size(), cfg.max_token_edits)) {
          item.has_role = true;
          item.provisional = r;
          --available[r];
          break;
        }
      }
    }

    // Generate the planned samples. Each one only touches its own slot and
    // its randomness is a pure function of (seed, pair id, role), so
    // slicing across threads cannot change the output.
    auto run_slice = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        if (wave[i].has_role) {
          wave[i].result = generate(wave[i].pair_index, wave[i].provisional);
        }
      }
    };
    if (workers == 1 || wave.size() < 2) {
      run_slice(0, wave.size());
    } else {
      const std::size_t slices =
          std::min(static_cast<std::size_t>(workers), wave.size());
      const std::size_t chunk = (wave.size() + slices - 1) / slices;
      std::vector<std::future<void>> futures;
      for (std::size_t s = 0; s < slices; ++s) {
        const std::size_t begin = s * chunk;
        const std::size_t end = std::min(begin + chunk, wave.size());
        if (begin >= end) break;
        futures.push_back(
            std::async(std::launch::async, run_slice, begin, end));
      }
      for (auto& f : futures) f.get();
    }

    // Reconcile serially in wave order. A planned sample is taken when its
    // role still has quota; otherwise the pair falls through the priority
    // list, regenerating for the first open role it can serve.
    for (WaveItem& item : wave) {
      if (item.has_role && item.result && remaining[item.provisional] > 0) {
        accept(std::move(*item.result), item.provisional);
        continue;
      }
      for (Role r : kPriority) {
        if (item.has_role && r == item.provisional) continue;
        if (remaining[r] <= 0 ||
            !capable(item.traits, r, corpus.size(), cfg.max_token_edits)) {
          continue;
        }
        std::optional<LabeledSample> retry = generate(item.pair_index, r);
        if (retry) {
          accept(std::move(*retry), r);
          break;
        }
      }
    }
  }

  if (open_total() > 0) {
    // Project how large a dataset this corpus could have filled, from the
    // rate each role was actually produced at.
    const std::array<double, kRoles> fraction = {
        cfg.ot_fraction * (1.0 - cfg.subtle_fraction_of_errors),
        cfg.ut_fraction * (1.0 - cfg.subtle_fraction_of_errors),
        cfg.ot_fraction * cfg.subtle_fraction_of_errors,
        cfg.ut_fraction * cfg.subtle_fraction_of_errors, cfg.ne_fraction};
    long long achievable = n_total;
    std::string short_roles;
    for (Role r : kPriority) {
      if (fraction[r] <= 0.0) continue;
      achievable = std::min(
          achievable, static_cast<long long>(std::floor(
                          static_cast<double>(produced[r]) / fraction[r])));
      if (remaining[r] > 0) {
        if (!short_roles.empty()) short_roles += ", ";
        short_roles += std::string(role_name(r)) + " " +
                       std::to_string(produced[r]) + "/" +
                       std::to_string(quota[r]);
      }
    }
    throw std::runtime_error(
        "assemble_dataset: corpus exhausted after " +
        std::to_string(accepted.size()) + " of " + std::to_string(n_total) +
        " samples (" + short_roles + "); at most about " +
        std::to_string(std::max(achievable, 0LL)) +
        " samples are achievable from this corpus");
  }

  // Seeded 80/20-style split, stratified by class so each label keeps the
  // configured proportion on both sides.
  std::array<std::vector<std::size_t>, kNumClasses> strata;
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    strata[static_cast<int>(accepted[i].label)].push_back(i);
  }
  std::vector<char> in_train(accepted.size(), 0);
  for (int c = 0; c < kNumClasses; ++c) {
    auto& idx = strata[c];
    Rng split_rng =
        root.child("split/" + to_string(static_cast<ClassLabel>(c)));
    split_rng.shuffle(idx);
    const auto take = static_cast<std::size_t>(std::min<long long>(
        std::llround(cfg.train_fraction * static_cast<double>(idx.size())),
        static_cast<long long>(idx.size())));
    for (std::size_t i = 0; i < take; ++i) in_train[idx[i]] = 1;
  }

  AssembledDataset out;
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    (in_train[i] ? out.train : out.validation).push_back(accepted[i]);
  }

  std::array<long long, kNumClasses> class_counts{};
  std::array<long long, 3> granularity_counts{};
  std::map<std::tuple<int, int, std::string>, long long> cell_counts;
  for (const LabeledSample& s : accepted) {
    ++class_counts[static_cast<int>(s.label)];
    ++granularity_counts[static_cast<int>(s.granularity)];
    ++cell_counts[{static_cast<int>(s.label), static_cast<int>(s.granularity),
                   s.pair.target_lang}];
  }

  nlohmann::ordered_json manifest;
  manifest["seed"] = cfg.seed;
  manifest["requested_samples"] = cfg.sample_count;
  manifest["config"] = to_json(cfg);
  manifest["encoder_fingerprint"] = bundle.fingerprint;
  manifest["train_samples"] = out.train.size();
  manifest["validation_samples"] = out.validation.size();
  nlohmann::ordered_json classes;
  for (int c = 0; c < kNumClasses; ++c) {
    classes[to_string(static_cast<ClassLabel>(c))] = class_counts[c];
  }
  manifest["class_counts"] = std::move(classes);
  nlohmann::ordered_json grans;
  for (int g = 0; g < 3; ++g) {
    grans[to_string(static_cast<Granularity>(g))] = granularity_counts[g];
  }
  manifest["granularity_counts"] = std::move(grans);
  auto cells = nlohmann::ordered_json::array();
  for (const auto& [key, count] : cell_counts) {
    nlohmann::ordered_json cell;
    cell["label"] = to_string(static_cast<ClassLabel>(std::get<0>(key)));
    cell["granularity"] =
        to_string(static_cast<Granularity>(std::get<1>(key)));
    cell["tgt_lang"] = std::get<2>(key);
    cell["count"] = count;
    cells.push_back(std::move(cell));
  }
  manifest["counts"] = std::move(cells);
  out.manifest = std::move(manifest);
  return out;
}

nlohmann::ordered_json sample_to_json(const LabeledSample& sample) {
  nlohmann::ordered_json j;
  j["id"] = sample.pair.id;
  j["src"] = sample.pair.source_text;
  j["tgt"] = sample.pair.target_text;
  j["tgt_lang"] = sample.pair.target_lang;
  j["label"] = to_string(sample.label);
  j["granularity"] = to_string(sample.granularity);
  auto edits = nlohmann::ordered_json::array();
  for (const EditRecord& e : sample.edits) edits.push_back(to_json(e));
  j["edits"] = std::move(edits);
  j["orig_src"] = sample.original_source;
  if (sample.label != ClassLabel::NE) {
    j["sim"] = sample.similarity_to_original;
  }
  return j;
}

LabeledSample sample_from_json(const nlohmann::json& row) {
  if (!row.is_object()) {
    throw std::invalid_argument("dataset row must be a JSON object");
  }
  LabeledSample s;
  s.pair.id = row.at("id").get<std::string>();
  s.pair.source_text = row.at("src").get<std::string>();
  s.pair.target_text = row.at("tgt").get<std::string>();
  s.pair.target_lang = row.at("tgt_lang").get<std::string>();
  s.label = class_label_from_string(row.at("label").get<std::string>());
  s.granularity =
      granularity_from_string(row.at("granularity").get<std::string>());
  if (row.contains("edits")) {
    for (const auto& e : row["edits"]) s.edits.push_back(edit_from_json(e));
  }
  s.original_source = row.at("orig_src").get<std::string>();
  s.similarity_to_original = row.value("sim", 1.0);
  return s;
}

void write_samples_jsonl(const std::string& path,
                         const std::vector<LabeledSample>& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_samples_jsonl: cannot write " + path);
  }
  for (const LabeledSample& s : samples) {
    out << sample_to_json(s).dump() << '\n';
  }
  if (!out) {
    throw std::runtime_error("write_samples_jsonl: write failed for " + path);
  }
}

std::vector<LabeledSample> read_samples_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("read_samples_jsonl: cannot read " + path);
  }
  std::vector<LabeledSample> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      samples.push_back(
          sample_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return samples;
}

}  // namespace otut
