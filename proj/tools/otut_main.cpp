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
// The otut command line: filter a parallel corpus, synthesize a labeled
// error dataset from it, train a classifier, and use that classifier to
// evaluate against gold labels or to flag fresh pairs. Every command
// writes a manifest carrying the tool version and a hash of the effective
// config, and is byte-for-byte reproducible given the same inputs and
// seed.

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "otut/annotations.hpp"
#include "otut/checkpoint.hpp"
#include "otut/config.hpp"
#include "otut/corpus_io.hpp"
#include "otut/dataset.hpp"
#include "otut/encoder_factory.hpp"
#include "otut/log.hpp"
#include "otut/metrics.hpp"
#include "otut/report.hpp"
#include "otut/seed_filter.hpp"
#include "otut/train.hpp"
#include "otut/version.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  std::string log_level = "info";
};

otut::PipelineConfig effective_config(const GlobalOptions& global) {
  otut::PipelineConfig cfg;
  if (!global.config_path.empty()) {
    cfg = otut::load_pipeline_config(global.config_path);
  }
  // --seed overrides whichever seed the command at hand consumes. The
  // encoder seed is deliberately left alone: changing it would change the
  // feature space and break checkpoint/encoder fingerprint matching.
  if (global.seed) {
    cfg.synthesis.seed = *global.seed;
    cfg.train.seed = *global.seed;
  }
  return cfg;
}

ordered_json base_manifest(const std::string& command,
                           const otut::PipelineConfig& cfg) {
  ordered_json m;
  m["tool"] = otut::kToolName;
  m["version"] = otut::kToolVersion;
  m["command"] = command;
  m["config_hash"] = otut::config_hash(cfg);
  return m;
}

void write_json_file(const std::string& path, const ordered_json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

void report_read_errors(const std::vector<otut::RecordError>& errors) {
  for (const otut::RecordError& e : errors) {
    otut::log_warning(e.location + ": " + e.message);
  }
}

// ---------------------------------------------------------------------------
// filter

struct FilterArgs {
  std::string in_path;
  std::string src_srt;
  std::string tgt_srt;
  std::string tgt_lang;
  std::string out_path;
  std::string rejects_path;
};

int cmd_filter(const GlobalOptions& global, const FilterArgs& args) {
  const otut::PipelineConfig cfg = effective_config(global);
  const bool jsonl = !args.in_path.empty();
  const bool srt = !args.src_srt.empty() || !args.tgt_srt.empty();
  if (jsonl == srt) {
    otut::log_error("filter needs either --in or --src-srt/--tgt-srt");
    return 2;
  }
  if (srt && (args.src_srt.empty() || args.tgt_srt.empty())) {
    otut::log_error("--src-srt and --tgt-srt must be given together");
    return 2;
  }
  if (srt && args.tgt_lang.empty()) {
    otut::log_error("--tgt-lang is required with SRT input");
    return 2;
  }

  // Read everything before the first output file is created, so a broken
  // input never leaves partial results behind.
  otut::ReadResult input;
  if (jsonl) {
    input = otut::read_jsonl(args.in_path, args.tgt_lang);
  } else {
    input = otut::read_srt_pair(args.src_srt, args.tgt_srt, args.tgt_lang);
  }
  report_read_errors(input.errors);

  const otut::EncoderBundle bundle = otut::make_bundle(cfg.encoder, {});

  std::vector<otut::SubtitlePair> accepted;
  std::vector<std::pair<std::string, otut::SeedRejectReason>> rejected;
  for (const otut::SubtitlePair& pair : input.pairs) {
    const otut::SeedDecision decision =
        otut::seed_filter(pair, cfg.seed_filter, *bundle.xsim);
    if (decision.accepted) {
      accepted.push_back(pair);
    } else {
      rejected.emplace_back(pair.id, decision.reason);
    }
  }

  const std::string rejects_path = args.rejects_path.empty()
                                       ? args.out_path + ".rejects.jsonl"
                                       : args.rejects_path;
  otut::write_jsonl(args.out_path, accepted);
  {
    std::ofstream out(rejects_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write " + rejects_path);
    }
    for (const auto& [id, reason] : rejected) {
      ordered_json line;
      line["id"] = id;
      line["reason"] = otut::to_string(reason);
      out << line.dump() << '\n';
    }
  }

  std::map<std::string, std::size_t> reject_counts;
  for (const auto& [id, reason] : rejected) {
    ++reject_counts[otut::to_string(reason)];
  }
  ordered_json manifest = base_manifest("filter", cfg);
  manifest["input"] =
      jsonl ? args.in_path : args.src_srt + " + " + args.tgt_srt;
  manifest["read_errors"] = input.errors.size();
  manifest["accepted"] = accepted.size();
  manifest["rejected"] = rejected.size();
  manifest["rejected_by_reason"] = reject_counts;
  manifest["encoder_fingerprint"] = bundle.fingerprint;
  write_json_file(args.out_path + ".manifest.json", manifest);

  otut::log_info("filter: accepted " + std::to_string(accepted.size()) +
                 " of " + std::to_string(input.pairs.size()) + " pairs");
  return 0;
}

// ---------------------------------------------------------------------------
// synthesize

struct SynthesizeArgs {
  std::string in_path;
  std::string out_dir;
  std::optional<std::size_t> samples;
};

int cmd_synthesize(const GlobalOptions& global, const SynthesizeArgs& args) {
  otut::PipelineConfig cfg = effective_config(global);
  if (args.samples) cfg.synthesis.sample_count = *args.samples;
  if (cfg.synthesis.sample_count == 0) {
    otut::log_error(
        "no sample count: set --samples or synthesis.sample_count");
    return 2;
  }

  otut::ReadResult input = otut::read_jsonl(args.in_path);
  report_read_errors(input.errors);

  const otut::EncoderBundle bundle =
      otut::make_bundle(cfg.encoder, input.pairs);
  const otut::AssembledDataset dataset = otut::assemble_dataset(
      input.pairs, bundle, cfg.synthesis, global.workers);

  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path dir(args.out_dir);
  otut::write_samples_jsonl((dir / "train.jsonl").string(), dataset.train);
  otut::write_samples_jsonl((dir / "validation.jsonl").string(),
                            dataset.validation);

  ordered_json manifest = base_manifest("synthesize", cfg);
  manifest["input"] = args.in_path;
  manifest["corpus_pairs"] = input.pairs.size();
  for (const auto& [key, value] : dataset.manifest.items()) {
    manifest[key] = value;
  }
  write_json_file((dir / "manifest.json").string(), manifest);

  otut::log_info("synthesize: wrote " + std::to_string(dataset.train.size()) +
                 " train and " + std::to_string(dataset.validation.size()) +
                 " validation samples to " + args.out_dir);
  return 0;
}

// ---------------------------------------------------------------------------
// train

struct TrainArgs {
  std::string dataset_dir;
  std::string checkpoint_path;
  std::string arch;
};

int cmd_train(const GlobalOptions& global, const TrainArgs& args) {
  otut::PipelineConfig cfg = effective_config(global);
  if (!args.arch.empty()) cfg.head.arch = args.arch;
  otut::validate(cfg.head);  // a bad --arch should fail before any IO

  const std::filesystem::path dir(args.dataset_dir);
  const std::vector<otut::LabeledSample> train_set =
      otut::read_samples_jsonl((dir / "train.jsonl").string());
  const std::vector<otut::LabeledSample> val_set =
      otut::read_samples_jsonl((dir / "validation.jsonl").string());

  const otut::EncoderBundle bundle = otut::make_bundle(cfg.encoder, {});
  otut::TrainHistory history;
  const otut::Model model =
      otut::train(train_set, val_set, bundle, cfg.head, cfg.train, &history);
  otut::save_checkpoint(args.checkpoint_path, model);

  ordered_json history_json;
  auto epochs = ordered_json::array();
  for (std::size_t i = 0; i < history.epochs.size(); ++i) {
    const otut::EpochStats& s = history.epochs[i];
    ordered_json e;
    e["epoch"] = i + 1;
    e["train_loss"] = s.train_loss;
    e["train_accuracy"] = s.train_accuracy;
    e["val_loss"] = s.val_loss;
    e["val_accuracy"] = s.val_accuracy;
    epochs.push_back(std::move(e));
  }
  history_json["epochs"] = std::move(epochs);
  history_json["best_epoch"] = history.best_epoch;
  write_json_file(args.checkpoint_path + ".history.json", history_json);

  ordered_json manifest = base_manifest("train", cfg);
  manifest["dataset_dir"] = args.dataset_dir;
  manifest["train_samples"] = train_set.size();
  manifest["validation_samples"] = val_set.size();
  manifest["arch"] = cfg.head.arch;
  manifest["head"] = otut::to_json(cfg.head);
  manifest["train_config"] = otut::to_json(cfg.train);
  manifest["encoder_fingerprint"] = bundle.fingerprint;
  manifest["epochs_run"] = history.epochs.size();
  manifest["best_epoch"] = history.best_epoch;
  if (history.best_epoch >= 1 &&
      history.best_epoch <= history.epochs.size()) {
    manifest["best_val_accuracy"] =
        history.epochs[history.best_epoch - 1].val_accuracy;
  }
  write_json_file(args.checkpoint_path + ".manifest.json", manifest);

  otut::log_info("train: checkpoint written to " + args.checkpoint_path);
  return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
  std::string checkpoint_path;
  std::string eval_path;
  std::string annotations_path;
  std::string out_dir;
  int annotators = 3;
};

int cmd_evaluate(const GlobalOptions& global, const EvaluateArgs& args) {
  const otut::PipelineConfig cfg = effective_config(global);
  const otut::EncoderBundle bundle = otut::make_bundle(cfg.encoder, {});
  const otut::Model model =
      otut::load_checkpoint(args.checkpoint_path, bundle.fingerprint);

  std::vector<otut::LabeledSample> eval_set;
  std::size_t excluded_pairs = 0;
  if (args.annotations_path.empty()) {
    eval_set = otut::read_samples_jsonl(args.eval_path);
  } else {
    // Pairs come from the corpus file; gold labels come from unanimous
    // annotator agreement.
    otut::ReadResult input = otut::read_jsonl(args.eval_path);
    report_read_errors(input.errors);
    std::unordered_map<std::string, const otut::SubtitlePair*> by_id;
    for (const otut::SubtitlePair& pair : input.pairs) {
      by_id.emplace(pair.id, &pair);
    }
    const otut::CollationResult collation = otut::collate_unanimous(
        otut::read_annotations_csv(args.annotations_path), args.annotators);
    excluded_pairs = collation.excluded.size();
    for (const auto& [pair_id, gold] : collation.included) {
      auto it = by_id.find(pair_id);
      if (it == by_id.end()) {
        otut::log_warning("annotated pair \"" + pair_id +
                          "\" not present in " + args.eval_path +
                          ", skipped");
        continue;
      }
      otut::LabeledSample sample;
      sample.pair = *it->second;
      sample.label = gold;
      sample.original_source = it->second->source_text;
      eval_set.push_back(std::move(sample));
    }
  }
  if (eval_set.empty()) {
    otut::log_error("evaluation set is empty");
    return 1;
  }

  std::vector<otut::ClassLabel> predictions;
  predictions.reserve(eval_set.size());
  for (const otut::LabeledSample& sample : eval_set) {
    predictions.push_back(otut::predict(model, sample.pair, bundle).label);
  }

  const otut::EvalReport report =
      otut::per_language_report(eval_set, predictions);
  for (const std::string& warning : report.warnings) {
    otut::log_warning(warning);
  }

  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path dir(args.out_dir);
  write_json_file((dir / "report.json").string(), otut::to_json(report));
  const std::string table = otut::to_text_table(report);
  {
    const std::string path = (dir / "report.txt").string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << table;
  }
  std::cout << table;

  ordered_json manifest = base_manifest("evaluate", cfg);
  manifest["checkpoint"] = args.checkpoint_path;
  manifest["eval_input"] = args.eval_path;
  if (!args.annotations_path.empty()) {
    manifest["annotations"] = args.annotations_path;
    manifest["annotators_required"] = args.annotators;
    manifest["excluded_pairs"] = excluded_pairs;
  }
  manifest["evaluated_pairs"] = eval_set.size();
  manifest["encoder_fingerprint"] = bundle.fingerprint;
  write_json_file((dir / "manifest.json").string(), manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// flag

struct FlagArgs {
  std::string checkpoint_path;
  std::string in_path;
  std::string out_path;
};

int cmd_flag(const GlobalOptions& global, const FlagArgs& args) {
  const otut::PipelineConfig cfg = effective_config(global);
  const otut::EncoderBundle bundle = otut::make_bundle(cfg.encoder, {});
  const otut::Model model =
      otut::load_checkpoint(args.checkpoint_path, bundle.fingerprint);

  otut::ReadResult input = otut::read_jsonl(args.in_path);
  report_read_errors(input.errors);

  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + args.out_path);
  }
  std::map<std::string, std::size_t> label_counts;
  std::size_t failures = 0;
  for (const otut::SubtitlePair& pair : input.pairs) {
    ordered_json line;
    line["id"] = pair.id;
    try {
      const otut::Prediction verdict = otut::predict(model, pair, bundle);
      line["label"] = otut::to_string(verdict.label);
      line["probs"] = verdict.probs;
      ++label_counts[otut::to_string(verdict.label)];
    } catch (const std::exception& e) {
      // One bad pair (say, over the encoder's length capacity) should not
      // sink the batch.
      line["error"] = e.what();
      ++failures;
      otut::log_warning("pair \"" + pair.id + "\": " + e.what());
    }
    out << line.dump() << '\n';
  }

  ordered_json manifest = base_manifest("flag", cfg);
  manifest["checkpoint"] = args.checkpoint_path;
  manifest["input"] = args.in_path;
  manifest["flagged_pairs"] = input.pairs.size();
  manifest["label_counts"] = label_counts;
  manifest["failed_pairs"] = failures;
  manifest["encoder_fingerprint"] = bundle.fingerprint;
  write_json_file(args.out_path + ".manifest.json", manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// collate

struct CollateArgs {
  std::string annotations_path;
  std::string out_dir;
  int annotators = 3;
};

int cmd_collate(const GlobalOptions& global, const CollateArgs& args) {
  const otut::PipelineConfig cfg = effective_config(global);
  const otut::CollationResult result = otut::collate_unanimous(
      otut::read_annotations_csv(args.annotations_path), args.annotators);

  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path dir(args.out_dir);
  {
    const std::string path = (dir / "labeled.jsonl").string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& [pair_id, label] : result.included) {
      ordered_json line;
      line["pair_id"] = pair_id;
      line["label"] = otut::to_string(label);
      out << line.dump() << '\n';
    }
  }
  {
    const std::string path = (dir / "exclusions.jsonl").string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& [pair_id, reason] : result.excluded) {
      ordered_json line;
      line["pair_id"] = pair_id;
      line["reason"] = otut::to_string(reason);
      out << line.dump() << '\n';
    }
  }

  std::map<std::string, std::size_t> label_counts;
  for (const auto& [pair_id, label] : result.included) {
    ++label_counts[otut::to_string(label)];
  }
  std::map<std::string, std::size_t> exclusion_counts;
  for (const auto& [pair_id, reason] : result.excluded) {
    ++exclusion_counts[otut::to_string(reason)];
  }
  ordered_json manifest = base_manifest("collate", cfg);
  manifest["annotations"] = args.annotations_path;
  manifest["annotators_required"] = args.annotators;
  manifest["included"] = result.included.size();
  manifest["excluded"] = result.excluded.size();
  manifest["included_by_label"] = label_counts;
  manifest["excluded_by_reason"] = exclusion_counts;
  write_json_file((dir / "manifest.json").string(), manifest);

  otut::log_info("collate: " + std::to_string(result.included.size()) +
                 " pairs kept, " + std::to_string(result.excluded.size()) +
                 " excluded");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesize, detect and evaluate over/under-translation "
               "errors in parallel subtitle corpora"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(otut::kToolVersion));

  GlobalOptions global;
  app.add_option("--config", global.config_path,
                 "Pipeline config file (JSON)");
  app.add_option("--seed", global.seed,
                 "Override the seed used by the invoked command");
  app.add_option("--workers", global.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--log-level", global.log_level,
                 "debug, info, warning, error or quiet");

  auto* filter = app.add_subcommand(
      "filter", "Keep only length- and similarity-clean pairs");
  FilterArgs filter_args;
  filter->add_option("--in", filter_args.in_path, "Input corpus JSONL");
  filter->add_option("--src-srt", filter_args.src_srt, "Source SRT file");
  filter->add_option("--tgt-srt", filter_args.tgt_srt, "Target SRT file");
  filter->add_option("--tgt-lang", filter_args.tgt_lang,
                     "Target language tag (required for SRT input)");
  filter->add_option("--out", filter_args.out_path, "Accepted pairs JSONL")
      ->required();
  filter->add_option("--rejects", filter_args.rejects_path,
                     "Rejection log (default: <out>.rejects.jsonl)");

  auto* synthesize = app.add_subcommand(
      "synthesize", "Build a labeled error dataset from a clean corpus");
  SynthesizeArgs synthesize_args;
  synthesize->add_option("--in", synthesize_args.in_path, "Clean corpus JSONL")
      ->required();
  synthesize->add_option("--out-dir", synthesize_args.out_dir,
                         "Output directory")
      ->required();
  synthesize->add_option("--samples", synthesize_args.samples,
                         "Total samples to synthesize");

  auto* train = app.add_subcommand("train", "Train a classifier head");
  TrainArgs train_args;
  train->add_option("--dataset-dir", train_args.dataset_dir,
                    "Directory with train.jsonl and validation.jsonl")
      ->required();
  train->add_option("--checkpoint", train_args.checkpoint_path,
                    "Checkpoint output path")
      ->required();
  train->add_option("--arch", train_args.arch,
                    "Head architecture (overrides config)");

  auto* evaluate = app.add_subcommand(
      "evaluate", "Score a checkpoint against gold labels");
  EvaluateArgs evaluate_args;
  evaluate->add_option("--checkpoint", evaluate_args.checkpoint_path,
                       "Trained checkpoint")
      ->required();
  evaluate->add_option("--eval", evaluate_args.eval_path,
                       "Labeled samples JSONL, or pairs JSONL when "
                       "--annotations is given")
      ->required();
  evaluate->add_option("--annotations", evaluate_args.annotations_path,
                       "Annotations CSV to collate into gold labels");
  evaluate->add_option("--annotators", evaluate_args.annotators,
                       "Annotators required per pair")
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--out-dir", evaluate_args.out_dir, "Output directory")
      ->required();

  auto* flag = app.add_subcommand(
      "flag", "Label fresh pairs with a trained checkpoint");
  FlagArgs flag_args;
  flag->add_option("--checkpoint", flag_args.checkpoint_path,
                   "Trained checkpoint")
      ->required();
  flag->add_option("--in", flag_args.in_path, "Pairs JSONL")->required();
  flag->add_option("--out", flag_args.out_path, "Verdicts JSONL")->required();

  auto* collate = app.add_subcommand(
      "collate", "Collate annotator judgments by unanimous agreement");
  CollateArgs collate_args;
  collate->add_option("--annotations", collate_args.annotations_path,
                      "Annotations CSV")
      ->required();
  collate->add_option("--annotators", collate_args.annotators,
                      "Annotators required per pair")
      ->check(CLI::PositiveNumber);
  collate->add_option("--out-dir", collate_args.out_dir, "Output directory")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    otut::set_log_level(otut::log_level_from_string(global.log_level));
    if (app.got_subcommand(filter)) return cmd_filter(global, filter_args);
    if (app.got_subcommand(synthesize)) {
      return cmd_synthesize(global, synthesize_args);
    }
    if (app.got_subcommand(train)) return cmd_train(global, train_args);
    if (app.got_subcommand(evaluate)) {
      return cmd_evaluate(global, evaluate_args);
    }
    if (app.got_subcommand(flag)) return cmd_flag(global, flag_args);
    if (app.got_subcommand(collate)) return cmd_collate(global, collate_args);
  } catch (const std::exception& e) {
    otut::log_error(e.what());
    return 1;
  }
  return 2;
}
