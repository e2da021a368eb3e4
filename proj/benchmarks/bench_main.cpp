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
// Microbenchmarks for the hot paths: tokenization, hashing, candidate
// scoring, and head forward passes. Run with --benchmark_filter=... to
// narrow. Numbers are indicative, not a regression gate.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "otut/dataset.hpp"
#include "otut/encoder_factory.hpp"
#include "otut/heads.hpp"
#include "otut/metrics.hpp"
#include "otut/percentile_filter.hpp"
#include "otut/reference_backends.hpp"
#include "otut/rng.hpp"
#include "otut/sentence_split.hpp"
#include "otut/synthesis.hpp"
#include "otut/tokenizer.hpp"

namespace {

using namespace otut;

const std::string kSentence =
    "The quiet captain visits that harbor. A gentle doctor repairs the "
    "ancient engine near the crowded market!";

std::vector<SubtitlePair> bench_corpus(std::size_t count) {
  std::vector<SubtitlePair> corpus;
  Rng rng(77);
  static const std::vector<std::string> nouns = {
      "garden", "station", "letter", "window", "captain", "harbor"};
  for (std::size_t i = 0; i < count; ++i) {
    SubtitlePair pair;
    pair.id = "b" + std::to_string(i);
    pair.target_lang = "de";
    std::string a = nouns[rng.uniform_index(nouns.size())];
    std::string b = nouns[rng.uniform_index(nouns.size())];
    pair.source_text =
        "The " + a + " follows that " + b + ". This " + b + " waits.";
    TokenSequence seq = tokenize(pair.source_text, "en");
    rng.shuffle(seq.tokens);
    pair.target_text = detokenize(seq);
    corpus.push_back(std::move(pair));
  }
  return corpus;
}

void BM_Tokenize(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tokenize(kSentence, "en"));
  }
}
BENCHMARK(BM_Tokenize);

void BM_SplitSentences(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_sentences(kSentence));
  }
}
BENCHMARK(BM_SplitSentences);

void BM_HashedTokenVector(benchmark::State& state) {
  Eigen::Index dim = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hashed_token_vector("translation", 1, dim));
  }
}
BENCHMARK(BM_HashedTokenVector)->Arg(64)->Arg(256);

void BM_FillMaskTopK(benchmark::State& state) {
  auto corpus = bench_corpus(500);
  UnigramMaskFiller filler = UnigramMaskFiller::from_sources(corpus);
  TokenSequence seq = tokenize(kSentence, "en");
  for (auto _ : state) {
    benchmark::DoNotOptimize(filler.fill_mask(seq, 3, 50));
  }
}
BENCHMARK(BM_FillMaskTopK);

void BM_PercentileSurvivors(benchmark::State& state) {
  Rng rng(5);
  std::vector<double> scores(static_cast<std::size_t>(state.range(0)));
  for (double& s : scores) s = rng.uniform_real01();
  for (auto _ : state) {
    benchmark::DoNotOptimize(percentile_survivors(scores, 0.4));
  }
}
BENCHMARK(BM_PercentileSurvivors)->Arg(20)->Arg(200);

void BM_MakeUtSubtle(benchmark::State& state) {
  auto corpus = bench_corpus(200);
  EncoderBundle bundle = make_bundle(EncoderConfig{}, corpus);
  SynthesisConfig cfg;
  std::size_t i = 0;
  for (auto _ : state) {
    const SubtitlePair& pair = corpus[i++ % corpus.size()];
    Rng rng = Rng(3).child(pair.id);
    benchmark::DoNotOptimize(make_ut_subtle(pair, bundle, cfg, rng));
  }
}
BENCHMARK(BM_MakeUtSubtle);

void BM_HeadForward(benchmark::State& state, const std::string& arch) {
  HeadConfig cfg;
  cfg.arch = arch;
  cfg.hidden_dim = 48;
  cfg.cnn_channels = 32;
  auto head = build_head(cfg, 64, 1);
  Rng rng(9);
  Matrix x(24, 64);
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      x(r, c) = rng.uniform_symmetric();
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(head->logits(x));
  }
}
BENCHMARK_CAPTURE(BM_HeadForward, weighted_gru, std::string("weighted_gru"));
BENCHMARK_CAPTURE(BM_HeadForward, gru_cnn, std::string("gru_cnn"));
BENCHMARK_CAPTURE(BM_HeadForward, cnn, std::string("cnn"));
BENCHMARK_CAPTURE(BM_HeadForward, hybrid, std::string("hybrid"));

void BM_WeightedF1(benchmark::State& state) {
  Rng rng(13);
  std::vector<ClassLabel> gold(10000), pred(10000);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    gold[i] = static_cast<ClassLabel>(rng.uniform_index(3));
    pred[i] = static_cast<ClassLabel>(rng.uniform_index(3));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_f1(gold, pred));
  }
}
BENCHMARK(BM_WeightedF1);

}  // namespace

BENCHMARK_MAIN();
