// Copyright 2026 The convseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// convseg: command-line front end for the segmentation toolkit.
//
//   convseg ingest   --in recipes.jsonl --out DIR
//   convseg split    --corpus corpus.jsonl --annotated annotated.jsonl --out DIR
//   convseg stats    --corpus corpus.jsonl --out DIR
//   convseg train    --train train.jsonl --validation validation.jsonl --out DIR
//   convseg segment  --corpus test.jsonl --method rand --p 0.5 --runs 3 --out DIR
//   convseg evaluate --gold test.jsonl --pred DIR/segmentation.jsonl --out DIR
//   convseg compare  --a A/report.json --b B/report.json

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

#include "convseg/convseg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace convseg::cli {
namespace {

// Reads flat or nested JSON objects into CLI11 config items; nested objects
// address subcommands, e.g. {"seed": 3, "segment": {"method": "rand"}}.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw CLI::ConversionError(std::string("config file: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    collect(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  static void collect(const json& obj, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) {
        std::vector<std::string> next = parents;
        next.push_back(key);
        collect(value, next, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const json& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    if (in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

// Collects what the manifest records about one command invocation and writes
// each output file under the output directory.
class Run {
 public:
  Run(const CLI::App& command, std::string out_dir, std::vector<std::string> inputs,
      std::optional<std::uint64_t> seed)
      : command_(command.get_name()), out_dir_(std::move(out_dir)), seed_(seed),
        start_(std::chrono::steady_clock::now()) {
    for (const CLI::Option* opt : command.get_options()) {
      const std::string name = opt->get_single_name();
      if (name == "help" || name.empty()) continue;
      const auto& results = opt->results();
      if (results.empty()) {
        config_[name] = opt->get_default_str();
      } else if (results.size() == 1) {
        config_[name] = results.front();
      } else {
        config_[name] = results;
      }
    }
    for (const std::string& path : inputs) {
      if (!path.empty()) digests_[path] = sha256_file(path);
    }
    if (!out_dir_.empty()) {
      std::error_code ec;
      fs::create_directories(out_dir_, ec);
      if (ec) throw Error(ErrorKind::kIo, "cannot create " + out_dir_ + ": " + ec.message());
    }
  }

  bool has_output_dir() const { return !out_dir_.empty(); }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    const std::string path = (fs::path(out_dir_) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
    body(out);
    out.flush();
    if (!out) throw Error(ErrorKind::kIo, "write failed: " + path);
    outputs_.push_back(name);
  }

  void write_json(const std::string& name, const json& j) {
    write(name, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
  }

  void finish() {
    if (out_dir_.empty()) return;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json manifest{{"command", command_},
                  {"config", config_},
                  {"inputs", digests_},
                  {"seed", seed_ ? json(*seed_) : json(nullptr)},
                  {"version", CONVSEG_VERSION},
                  {"outputs", outputs_},
                  {"duration_seconds", seconds}};
    const std::string path = (fs::path(out_dir_) / "manifest.json").string();
    std::ofstream out(path);
    if (!(out << manifest.dump(2) << '\n')) throw Error(ErrorKind::kIo, "cannot write " + path);
  }

 private:
  std::string command_;
  std::string out_dir_;
  std::optional<std::uint64_t> seed_;
  std::chrono::steady_clock::time_point start_;
  json config_ = json::object();
  std::map<std::string, std::string> digests_;
  std::vector<std::string> outputs_;
};

PosLexicon lexicon_from(const std::string& path) {
  return path.empty() ? PosLexicon::builtin() : PosLexicon::load(path);
}

void write_docs(Run& run, const std::string& name, std::span<const Document> docs) {
  run.write(name, [&](std::ostream& out) { write_corpus(out, docs); });
}

// ---------------------------------------------------------------------------

struct IngestArgs {
  std::string in, out;
  std::size_t min_steps = 3;
  int dedup_hamming = kDefaultMaxHamming;
};

int cmd_ingest(const CLI::App& cmd, const IngestArgs& a) {
  Run run(cmd, a.out, {a.in}, std::nullopt);
  std::vector<RawRecipe> recipes = ingest_file(a.in);
  const std::size_t read = recipes.size();
  recipes = filter_min_steps(std::move(recipes), a.min_steps);
  const std::size_t after_filter = recipes.size();
  recipes = dedup(std::move(recipes), a.dedup_hamming);
  std::vector<Document> docs;
  docs.reserve(recipes.size());
  for (const RawRecipe& r : recipes) docs.push_back(build_document(r));
  write_docs(run, "corpus.jsonl", docs);
  run.finish();
  std::cout << "read " << read << " kept " << docs.size() << " dropped_short "
            << read - after_filter << " dropped_dup " << after_filter - docs.size() << '\n';
  return 0;
}

struct SplitArgs {
  std::string corpus, annotated, out;
  double ratio = 0.82;
  std::uint64_t seed = 0;
  std::optional<double> threshold;
};

int cmd_split(const CLI::App& cmd, const SplitArgs& a) {
  Run run(cmd, a.out, {a.corpus, a.annotated}, a.seed);
  const auto unannotated = read_corpus_file(a.corpus);
  auto annotated = read_corpus_file(a.annotated, true);
  const CorpusSplit split = make_split(
      std::move(annotated), unannotated,
      SplitOptions{.train_ratio = a.ratio, .seed = a.seed, .threshold = a.threshold});
  run.write_json("split.json", split_manifest(split));
  write_docs(run, "train.jsonl", split.train);
  write_docs(run, "validation.jsonl", split.validation);
  write_docs(run, "test.jsonl", split.test);
  run.finish();
  std::printf("threshold %.6g train %zu validation %zu test %zu\n",
              split.threshold_sentences_per_step, split.train.size(), split.validation.size(),
              split.test.size());
  return 0;
}

struct StatsArgs {
  std::string corpus, segmentation, lexicon, out;
  std::size_t n = 3;
  std::size_t top_k = 10;
};

int cmd_stats(const CLI::App& cmd, const StatsArgs& a) {
  Run run(cmd, a.out, {a.corpus, a.segmentation, a.lexicon}, std::nullopt);
  const auto docs = read_corpus_file(a.corpus);
  StepLists steps;
  if (a.segmentation.empty()) {
    steps = gold_step_lists(docs);
  } else {
    std::vector<Segmentation> segs;
    std::optional<std::uint64_t> first_seed;
    bool first = true;
    for (SegmentationRecord& r : read_segmentations_file(a.segmentation)) {
      if (first) first_seed = r.seed;
      first = false;
      if (r.seed == first_seed) segs.push_back(std::move(r.segmentation));
    }
    steps = predicted_step_lists(docs, segs);
  }
  const CorpusStats stats = corpus_stats(steps, lexicon_from(a.lexicon));
  const NgramTable starting = boundary_ngrams(steps, NgramPosition::kStarting, a.n, a.top_k);
  const NgramTable ending = boundary_ngrams(steps, NgramPosition::kEnding, a.n, a.top_k);

  json uniqueness = json::object();
  for (std::size_t n : {std::size_t{2}, std::size_t{3}, a.n}) {
    try {
      uniqueness[std::to_string(n)] = uniqueness_fraction(steps, n);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kEmpty) throw;
      uniqueness[std::to_string(n)] = nullptr;
    }
  }
  json out = stats_to_json(stats);
  out["ngrams"] = {{"starting", ngram_table_to_json(starting)},
                   {"ending", ngram_table_to_json(ending)},
                   {"uniqueness", uniqueness}};
  run.write_json("stats.json", out);
  run.write("stats.csv", [&](std::ostream& os) { write_stats_csv(os, stats); });
  for (const auto& [name, dist] : stats.named()) {
    run.write("hist_" + name + ".csv", [&](std::ostream& os) { write_histogram_csv(os, *dist); });
  }
  run.write("ngrams_starting.csv", [&](std::ostream& os) { write_ngram_csv(os, starting); });
  run.write("ngrams_ending.csv", [&](std::ostream& os) { write_ngram_csv(os, ending); });
  run.finish();

  std::printf("documents %zu steps %zu\n", stats.doc_steps.values.size(),
              stats.step_tokens.values.size());
  for (const auto& [name, dist] : stats.named()) {
    std::printf("%-15s mean %.4f variance %.4f\n", name.c_str(), dist->mean(), dist->variance());
  }
  for (const NgramTable* t : {&starting, &ending}) {
    std::printf("top %s %zu-grams:\n",
                t->position == NgramPosition::kStarting ? "starting" : "ending", t->n);
    for (const auto& [gram, count] : t->entries) {
      std::printf("  %6zu  %s\n", count, join(gram).c_str());
    }
  }
  return 0;
}

struct TrainArgs {
  std::string train, validation, lexicon, out;
  TrainConfig config;
};

int cmd_train(const CLI::App& cmd, const TrainArgs& a) {
  Run run(cmd, a.out, {a.train, a.validation, a.lexicon}, a.config.seed);
  const PosLexicon lexicon = lexicon_from(a.lexicon);
  const auto train_docs = read_corpus_file(a.train);
  const auto val_docs = read_corpus_file(a.validation);
  const auto train_set = labeled_examples(train_docs, lexicon);
  const auto val_set = labeled_examples(val_docs, lexicon);
  if (train_set.empty()) throw Error(ErrorKind::kEmpty, "training corpus has no candidates");
  const TrainReport report = train(train_set, val_set, a.config, fs::path(a.train).filename());
  run.write_json("model.json", model_to_json(report.model));
  run.write_json("train_report.json", train_report_to_json(report, a.config));
  run.finish();
  for (const EpochRecord& e : report.epochs) {
    std::printf("epoch %2zu loss %.6f val_p %.4f val_r %.4f val_f1 %.4f%s\n", e.epoch,
                e.train_loss, e.validation.precision, e.validation.recall, e.validation.f1,
                e.epoch == report.best_epoch ? " *" : "");
  }
  std::printf("best epoch %zu\n", report.best_epoch);
  return 0;
}

struct SegmentArgs {
  std::string corpus, out, model, lexicon;
  SegmenterSpec spec;
  std::uint64_t seed = 0;
  std::size_t runs = 1;
};

int cmd_segment(const CLI::App& cmd, SegmentArgs a) {
  Run run(cmd, a.out, {a.corpus, a.model, a.lexicon}, a.seed);
  if (a.runs < 1) throw Error(ErrorKind::kInvalidArgument, "--runs must be >= 1");
  if (!a.model.empty()) a.spec.model = load_model(a.model);
  a.spec.lexicon = lexicon_from(a.lexicon);
  const auto segmenter = make_segmenter(a.spec);
  const auto docs = read_corpus_file(a.corpus);
  std::ostringstream lines;
  std::size_t breaks = 0;
  for (std::size_t r = 0; r < a.runs; ++r) {
    const std::uint64_t seed = a.seed + r;
    for (const Document& d : docs) {
      const Segmentation s = segmenter->segment(d, seed);
      breaks += s.breaks.size();
      lines << segmentation_to_json(s, segmenter->name(), seed).dump() << '\n';
    }
  }
  run.write("segmentation.jsonl", [&](std::ostream& out) { out << lines.str(); });
  run.finish();
  std::printf("%s: %zu documents x %zu runs, %zu breaks\n", segmenter->name().c_str(),
              docs.size(), a.runs, breaks);
  return 0;
}

struct EvaluateArgs {
  std::string gold, pred, out;
  std::optional<std::size_t> runs;
};

void print_report(const EvalReport& report) {
  for (const auto& [key, header] : metric_columns()) {
    const std::string cell =
        is_rate_column(key)
            ? format_mean_std(report.mean.at(key), report.stddev.at(key))
            : format_mean_std(report.mean.at(key), report.stddev.at(key), 1.0, 2);
    std::printf("%-11s %s\n", header.c_str(), cell.c_str());
  }
}

int cmd_evaluate(const CLI::App& cmd, const EvaluateArgs& a) {
  Run run(cmd, a.out, {a.gold, a.pred}, std::nullopt);
  const auto gold = read_corpus_file(a.gold);
  std::map<std::uint64_t, std::map<std::string, Segmentation>> by_seed;
  for (SegmentationRecord& r : read_segmentations_file(a.pred)) {
    auto& group = by_seed[r.seed.value_or(0)];
    const std::string id = r.segmentation.doc_id;
    if (!group.emplace(id, std::move(r.segmentation)).second) {
      throw Error(ErrorKind::kFormat, "duplicate prediction for " + id);
    }
  }
  if (by_seed.empty()) throw Error(ErrorKind::kEmpty, "no predictions in " + a.pred);
  if (a.runs && *a.runs != by_seed.size()) {
    throw Error(ErrorKind::kMismatch, "expected " + std::to_string(*a.runs) + " runs, found " +
                                          std::to_string(by_seed.size()));
  }
  std::set<std::string> gold_ids;
  for (const Document& d : gold) gold_ids.insert(d.id);

  std::vector<std::vector<DocRecord>> runs;
  std::vector<std::uint64_t> seeds;
  for (const auto& [seed, preds] : by_seed) {
    for (const auto& [id, s] : preds) {
      if (!gold_ids.contains(id)) throw Error(ErrorKind::kMismatch, "prediction for unknown document " + id);
    }
    std::vector<DocRecord> records;
    for (const Document& d : gold) {
      auto it = preds.find(d.id);
      if (it == preds.end()) throw Error(ErrorKind::kMismatch, "no prediction for " + d.id);
      records.push_back(evaluate_document(d, it->second));
    }
    runs.push_back(std::move(records));
    seeds.push_back(seed);
  }
  const EvalReport report = make_report(std::move(runs), std::move(seeds));
  run.write_json("report.json", report_to_json(report));
  run.write("report.csv", [&](std::ostream& out) { write_report_csv(out, report); });
  run.finish();
  std::printf("documents %zu runs %zu\n", gold.size(), report.runs.size());
  print_report(report);
  return 0;
}

struct CompareArgs {
  std::string a, b, out;
  std::string label_a = "A", label_b = "B";
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kFormat, path + ": " + e.what());
  }
}

int cmd_compare(const CLI::App& cmd, const CompareArgs& a) {
  Run run(cmd, a.out, {a.a, a.b}, std::nullopt);
  const auto rows = compare_reports(read_json_file(a.a), read_json_file(a.b));
  std::printf("%-11s %12s %12s %12s\n", "Metric", a.label_a.c_str(), a.label_b.c_str(), "Delta");
  json out = json::array();
  for (const ComparisonRow& r : rows) {
    std::printf("%-11s %12.4f %12.4f %+12.4f\n", r.header.c_str(), r.a, r.b, r.delta);
    out.push_back({{"metric", r.key}, {a.label_a, r.a}, {a.label_b, r.b}, {"delta", r.delta}});
  }
  if (run.has_output_dir()) {
    run.write_json("comparison.json", out);
    run.write("comparison.csv", [&](std::ostream& os) {
      os << "metric," << a.label_a << ',' << a.label_b << ",delta\n";
      for (const ComparisonRow& r : rows) {
        os << r.header << ',' << json(r.a).dump() << ',' << json(r.b).dump() << ','
           << json(r.delta).dump() << '\n';
      }
    });
  }
  run.finish();
  return 0;
}

}  // namespace
}  // namespace convseg::cli

int main(int argc, char** argv) {
  using namespace convseg;
  using namespace convseg::cli;

  CLI::App app{"Instructional-text step segmentation toolkit"};
  app.set_version_flag("--version", std::string(CONVSEG_VERSION));
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file; command-line flags take precedence");
  app.require_subcommand(1);

  auto seed_option = [](CLI::App* cmd, std::uint64_t& seed) {
    cmd->add_option("--seed", seed, "random seed")->envname("CONVSEG_SEED")->capture_default_str();
  };

  IngestArgs ingest_args;
  CLI::App* ingest = app.add_subcommand("ingest", "Parse, filter and deduplicate raw recipes");
  ingest->add_option("--in", ingest_args.in, "raw recipe JSONL")->required();
  ingest->add_option("--out", ingest_args.out, "output directory")->required();
  ingest->add_option("--min-steps", ingest_args.min_steps)->capture_default_str();
  ingest->add_option("--dedup-hamming", ingest_args.dedup_hamming)
      ->check(CLI::Range(0, 64))
      ->capture_default_str();

  SplitArgs split_args;
  CLI::App* split = app.add_subcommand("split", "Build train/validation/test partitions");
  split->add_option("--corpus", split_args.corpus, "unannotated corpus JSONL")->required();
  split->add_option("--annotated", split_args.annotated, "annotated corpus JSONL")->required();
  split->add_option("--out", split_args.out, "output directory")->required();
  split->add_option("--ratio", split_args.ratio, "train fraction")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  split->add_option("--threshold", split_args.threshold,
                    "sentences-per-step cap (default: annotated mean)");
  seed_option(split, split_args.seed);

  StatsArgs stats_args;
  CLI::App* stats = app.add_subcommand("stats", "Corpus statistics and boundary n-grams");
  stats->add_option("--corpus", stats_args.corpus, "corpus JSONL")->required();
  stats->add_option("--segmentation", stats_args.segmentation,
                    "segmentation JSONL to use instead of the gold steps");
  stats->add_option("--lexicon", stats_args.lexicon, "verb/noun lexicon file");
  stats->add_option("--out", stats_args.out, "output directory")->required();
  stats->add_option("--n", stats_args.n, "n-gram size")->check(CLI::PositiveNumber)->capture_default_str();
  stats->add_option("--top-k", stats_args.top_k)->check(CLI::PositiveNumber)->capture_default_str();

  TrainArgs train_args;
  CLI::App* train_cmd = app.add_subcommand("train", "Train the boundary classifier");
  train_cmd->add_option("--train", train_args.train, "training corpus JSONL")->required();
  train_cmd->add_option("--validation", train_args.validation, "validation corpus JSONL")->required();
  train_cmd->add_option("--lexicon", train_args.lexicon, "verb/noun lexicon file");
  train_cmd->add_option("--out", train_args.out, "output directory")->required();
  train_cmd->add_option("--epochs", train_args.config.epochs)->capture_default_str();
  train_cmd->add_option("--batch-size", train_args.config.batch_size)->capture_default_str();
  train_cmd->add_option("--lr", train_args.config.learning_rate)->capture_default_str();
  train_cmd->add_option("--momentum", train_args.config.momentum)->capture_default_str();
  train_cmd->add_option("--l2", train_args.config.l2)->capture_default_str();
  train_cmd->add_option("--positive-weight", train_args.config.positive_weight)->capture_default_str();
  train_cmd->add_option("--threshold", train_args.config.decision_threshold)->capture_default_str();
  seed_option(train_cmd, train_args.config.seed);

  SegmentArgs segment_args;
  CLI::App* segment = app.add_subcommand("segment", "Predict step breaks");
  segment->add_option("--corpus", segment_args.corpus, "corpus JSONL")->required();
  segment->add_option("--out", segment_args.out, "output directory")->required();
  segment->add_option("--method", segment_args.spec.method,
                      "rand | every | texttiling | classifier | external")
      ->required();
  segment->add_option("--p", segment_args.spec.p, "rand: break probability")->capture_default_str();
  segment->add_option("--n", segment_args.spec.n, "every: break every n-th candidate")
      ->capture_default_str();
  segment->add_option("--w", segment_args.spec.texttiling.pseudosentence_size,
                      "texttiling: pseudosentence size")
      ->capture_default_str();
  segment->add_option("--k", segment_args.spec.texttiling.block_size, "texttiling: block size")
      ->capture_default_str();
  segment->add_option("--smoothing", segment_args.spec.texttiling.smoothing_width,
                      "texttiling: smoothing width")
      ->capture_default_str();
  segment->add_option("--model", segment_args.model, "classifier: model.json");
  segment->add_option("--lexicon", segment_args.lexicon, "classifier: verb/noun lexicon file");
  segment->add_option("--endpoint", segment_args.spec.endpoint,
                      "external: http://host:port[/path] or exec:command");
  segment->add_option("--threshold", segment_args.spec.threshold,
                      "external: break probability threshold")
      ->capture_default_str();
  segment->add_option("--runs", segment_args.runs, "number of seeds (seed, seed+1, ...)")
      ->capture_default_str();
  seed_option(segment, segment_args.seed);

  EvaluateArgs evaluate_args;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions against gold breaks");
  evaluate->add_option("--gold", evaluate_args.gold, "gold corpus JSONL")->required();
  evaluate->add_option("--pred", evaluate_args.pred, "segmentation JSONL")->required();
  evaluate->add_option("--out", evaluate_args.out, "output directory")->required();
  evaluate->add_option("--runs", evaluate_args.runs, "expected number of seeded runs");

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand("compare", "Side-by-side comparison of two reports");
  compare->add_option("--a", compare_args.a, "first report.json")->required();
  compare->add_option("--b", compare_args.b, "second report.json")->required();
  compare->add_option("--label-a", compare_args.label_a)->capture_default_str();
  compare->add_option("--label-b", compare_args.label_b)->capture_default_str();
  compare->add_option("--out", compare_args.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    std::cerr << "convseg: " << e.what() << '\n';
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ingest) return cmd_ingest(*ingest, ingest_args);
    if (*split) return cmd_split(*split, split_args);
    if (*stats) return cmd_stats(*stats, stats_args);
    if (*train_cmd) return cmd_train(*train_cmd, train_args);
    if (*segment) return cmd_segment(*segment, segment_args);
    if (*evaluate) return cmd_evaluate(*evaluate, evaluate_args);
    if (*compare) return cmd_compare(*compare, compare_args);
  } catch (const Error& e) {
    std::cerr << "convseg: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "convseg: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
