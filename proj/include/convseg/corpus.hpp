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

#ifndef CONVSEG_CORPUS_HPP_
#define CONVSEG_CORPUS_HPP_

#include <cmath>
#include <concepts>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "convseg/error.hpp"
#include "convseg/hash.hpp"
#include "convseg/random.hpp"
#include "convseg/textproc.hpp"

namespace convseg {

struct RawRecipe {
  std::string id;
  std::string title;
  std::vector<std::string> steps;
  bool annotated = false;

  bool operator==(const RawRecipe&) const = default;
};

// Steps joined by a single space. step_offsets hold the end of every step but
// the last; candidates hold every sentence end but the one at text.size().
struct Document {
  std::string id;
  std::string title;
  std::string text;
  std::vector<std::size_t> step_offsets;
  std::vector<std::size_t> candidates;
  std::size_t n_tokens = 0;
  std::size_t n_sentences = 0;
  bool annotated = false;

  std::size_t n_steps() const { return step_offsets.size() + 1; }

  double sentences_per_step() const {
    return static_cast<double>(n_sentences) / static_cast<double>(n_steps());
  }

  bool operator==(const Document&) const = default;
};

struct CorpusSplit {
  std::vector<Document> train;
  std::vector<Document> validation;
  std::vector<Document> test;
  double threshold_sentences_per_step = 0.0;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Ingestion

inline RawRecipe parse_recipe_line(std::string_view line, std::size_t line_no) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(line_no, "record is not an object");
  auto require_string = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(line_no, std::string("missing \"") + key + "\"");
    if (!it->is_string()) throw ParseError(line_no, std::string("\"") + key + "\" is not a string");
    return it->get<std::string>();
  };
  RawRecipe r;
  r.id = require_string("id");
  r.title = require_string("title");
  auto steps = j.find("steps");
  if (steps == j.end()) throw ParseError(line_no, "missing \"steps\"");
  if (!steps->is_array() || steps->empty()) {
    throw ParseError(line_no, "\"steps\" must be a non-empty array");
  }
  for (const auto& s : *steps) {
    if (!s.is_string()) throw ParseError(line_no, "step is not a string");
    std::string_view trimmed = trim(s.get_ref<const std::string&>());
    if (trimmed.empty()) throw ParseError(line_no, "empty step");
    r.steps.emplace_back(trimmed);
  }
  if (auto a = j.find("annotated"); a != j.end()) {
    if (!a->is_boolean()) throw ParseError(line_no, "\"annotated\" is not a boolean");
    r.annotated = a->get<bool>();
  }
  return r;
}

// Blank lines are skipped; line numbers still count them.
inline std::vector<RawRecipe> ingest(std::istream& in) {
  std::vector<RawRecipe> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    RawRecipe r = parse_recipe_line(line, line_no);
    if (!seen.insert(r.id).second) {
      throw ParseError(line_no, "duplicate id \"" + r.id + "\"");
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<RawRecipe> ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return ingest(in);
}

inline std::vector<RawRecipe> filter_min_steps(std::vector<RawRecipe> recipes,
                                               std::size_t min_steps = 3) {
  if (min_steps < 1) throw Error(ErrorKind::kInvalidArgument, "min_steps must be >= 1");
  std::erase_if(recipes, [&](const RawRecipe& r) { return r.steps.size() < min_steps; });
  return recipes;
}

// ---------------------------------------------------------------------------
// Near-duplicate detection

// Weighted bit-vote SimHash over lowercased word unigrams and bigrams, each
// feature weighted by its term frequency.
inline std::uint64_t simhash(std::string_view text) {
  std::vector<std::string> words;
  for (const Token& t : tokenize(text)) {
    if (t.kind != TokenKind::kPunctuation) words.push_back(to_lower(t.text));
  }
  std::map<std::string, long> tf;
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++tf[words[i]];
    if (i + 1 < words.size()) ++tf[words[i] + ' ' + words[i + 1]];
  }
  long votes[64] = {};
  for (const auto& [feature, weight] : tf) {
    const std::uint64_t h = feature_hash(feature);
    for (int b = 0; b < 64; ++b) votes[b] += ((h >> b) & 1U) ? weight : -weight;
  }
  std::uint64_t fp = 0;
  for (int b = 0; b < 64; ++b) {
    if (votes[b] > 0) fp |= std::uint64_t{1} << b;
  }
  return fp;
}

inline std::string joined_steps(const RawRecipe& r) {
  return join(std::span<const std::string>(r.steps));
}

inline constexpr int kDefaultMaxHamming = 3;

// Greedy first-wins scan: a recipe is dropped when its fingerprint is within
// max_hamming bits of any recipe kept before it.
inline std::vector<RawRecipe> dedup(std::vector<RawRecipe> recipes,
                                    int max_hamming = kDefaultMaxHamming) {
  if (max_hamming < 0 || max_hamming > 64) {
    throw Error(ErrorKind::kInvalidArgument, "max_hamming must be in [0, 64]");
  }
  std::vector<std::uint64_t> kept_fps;
  std::vector<RawRecipe> kept;
  for (RawRecipe& r : recipes) {
    const std::uint64_t fp = simhash(joined_steps(r));
    bool duplicate = false;
    for (std::uint64_t k : kept_fps) {
      if (hamming(fp, k) <= max_hamming) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      kept_fps.push_back(fp);
      kept.push_back(std::move(r));
    }
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Documents

template <typename F>
concept SentenceSplitter = requires(const F& f, std::string_view text) {
  { f(text) } -> std::convertible_to<std::vector<SentenceSpan>>;
};

struct DefaultSplitter {
  std::vector<SentenceSpan> operator()(std::string_view text) const {
    return split_sentences(text);
  }
};

template <SentenceSplitter Splitter = DefaultSplitter>
Document build_document(const RawRecipe& recipe, const Splitter& splitter = {}) {
  if (recipe.steps.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "recipe " + recipe.id + " has no steps");
  }
  Document doc;
  doc.id = recipe.id;
  doc.title = recipe.title;
  doc.annotated = recipe.annotated;
  for (std::size_t i = 0; i < recipe.steps.size(); ++i) {
    if (i) {
      doc.step_offsets.push_back(doc.text.size());
      doc.text += ' ';
    }
    doc.text += recipe.steps[i];
  }

  std::vector<SentenceSpan> spans;
  try {
    spans = splitter(doc.text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::kFormat,
                "sentence splitter failed on recipe " + recipe.id + ": " + e.what());
  }
  std::size_t prev_end = 0;
  for (const SentenceSpan& s : spans) {
    if (s.start >= s.end || s.start < prev_end || s.end > doc.text.size()) {
      throw Error(ErrorKind::kFormat,
                  "sentence splitter returned invalid spans for recipe " + recipe.id);
    }
    prev_end = s.end;
    if (s.end < doc.text.size()) doc.candidates.push_back(s.end);
  }
  doc.n_sentences = spans.size();
  doc.n_tokens = count_words(tokenize(doc.text));
  return doc;
}

// Cuts text at the given offsets and trims whitespace around each piece.
inline std::vector<std::string> cut_at(std::string_view text,
                                       std::span<const std::size_t> offsets) {
  std::vector<std::string> pieces;
  pieces.reserve(offsets.size() + 1);
  std::size_t prev = 0;
  for (std::size_t off : offsets) {
    pieces.emplace_back(trim(text.substr(prev, off - prev)));
    prev = off;
  }
  pieces.emplace_back(trim(text.substr(prev)));
  return pieces;
}

inline std::vector<std::string> gold_steps(const Document& doc) {
  return cut_at(doc.text, doc.step_offsets);
}

// ---------------------------------------------------------------------------
// Corpus file I/O

inline nlohmann::json document_to_json(const Document& d) {
  return nlohmann::json{{"id", d.id},
                        {"title", d.title},
                        {"text", d.text},
                        {"step_offsets", d.step_offsets},
                        {"candidates", d.candidates}};
}

namespace detail {

inline void check_offsets(const std::vector<std::size_t>& offsets,
                          std::size_t text_size, std::size_t line_no,
                          const char* what) {
  std::size_t prev = 0;
  for (std::size_t off : offsets) {
    if (off <= prev || off >= text_size) {
      throw ParseError(line_no, std::string(what) +
                                    " must be strictly increasing and inside (0, len(text))");
    }
    prev = off;
  }
}

}  // namespace detail

// Token and sentence counts are recomputed from the text with the default
// tokenizer and splitter.
inline Document document_from_json(const nlohmann::json& j, std::size_t line_no,
                                   bool annotated = false) {
  Document d;
  try {
    d.id = j.at("id").get<std::string>();
    d.title = j.value("title", std::string());
    d.text = j.at("text").get<std::string>();
    d.step_offsets = j.at("step_offsets").get<std::vector<std::size_t>>();
    d.candidates = j.at("candidates").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, e.what());
  }
  detail::check_offsets(d.step_offsets, d.text.size(), line_no, "step_offsets");
  detail::check_offsets(d.candidates, d.text.size(), line_no, "candidates");
  d.n_sentences = split_sentences(d.text).size();
  d.n_tokens = count_words(tokenize(d.text));
  d.annotated = annotated;
  return d;
}

inline std::vector<Document> read_corpus(std::istream& in, bool annotated = false) {
  std::vector<Document> docs;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
    }
    Document d = document_from_json(j, line_no, annotated);
    if (!seen.insert(d.id).second) throw ParseError(line_no, "duplicate id \"" + d.id + "\"");
    docs.push_back(std::move(d));
  }
  return docs;
}

inline std::vector<Document> read_corpus_file(const std::string& path,
                                              bool annotated = false) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return read_corpus(in, annotated);
}

inline void write_corpus(std::ostream& out, std::span<const Document> docs) {
  for (const Document& d : docs) out << document_to_json(d).dump() << '\n';
}

// ---------------------------------------------------------------------------
// Splits

struct SplitOptions {
  double train_ratio = 0.82;
  std::uint64_t seed = 0;
  // When unset, the mean sentences-per-step of the annotated pool.
  std::optional<double> threshold;
};

// Pooled over steps: total sentences / total steps.
inline double mean_sentences_per_step(std::span<const Document> docs) {
  std::size_t sentences = 0, steps = 0;
  for (const Document& d : docs) {
    sentences += d.n_sentences;
    steps += d.n_steps();
  }
  if (steps == 0) throw Error(ErrorKind::kEmpty, "no documents to compute threshold from");
  return static_cast<double>(sentences) / static_cast<double>(steps);
}

// Test = annotated pool. Unannotated documents whose sentences-per-step is
// within the threshold (inclusive) are shuffled with the seed and cut into
// train/validation at train_ratio. Unannotated ids that collide with a test id
// are left out.
inline CorpusSplit make_split(std::vector<Document> annotated,
                              std::span<const Document> unannotated,
                              const SplitOptions& options = {}) {
  if (!(options.train_ratio >= 0.0 && options.train_ratio <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "train ratio must be in [0, 1]");
  }
  CorpusSplit split;
  split.seed = options.seed;
  split.threshold_sentences_per_step =
      options.threshold ? *options.threshold : mean_sentences_per_step(annotated);

  std::unordered_set<std::string> test_ids;
  for (Document& d : annotated) {
    d.annotated = true;
    test_ids.insert(d.id);
  }

  std::vector<Document> eligible;
  for (const Document& d : unannotated) {
    if (test_ids.contains(d.id)) continue;
    if (d.sentences_per_step() <= split.threshold_sentences_per_step) {
      eligible.push_back(d);
      eligible.back().annotated = false;
    }
  }
  if (eligible.empty()) {
    throw Error(ErrorKind::kEmpty, "no unannotated document satisfies the threshold");
  }
  Rng rng(options.seed);
  shuffle(std::span<Document>(eligible), rng);
  const auto n_train = static_cast<std::size_t>(
      std::llround(options.train_ratio * static_cast<double>(eligible.size())));
  for (std::size_t i = 0; i < eligible.size(); ++i) {
    (i < n_train ? split.train : split.validation).push_back(std::move(eligible[i]));
  }
  split.test = std::move(annotated);
  return split;
}

inline nlohmann::json split_manifest(const CorpusSplit& split) {
  auto ids = [](const std::vector<Document>& docs) {
    std::vector<std::string> out;
    out.reserve(docs.size());
    for (const Document& d : docs) out.push_back(d.id);
    return out;
  };
  return nlohmann::json{{"threshold", split.threshold_sentences_per_step},
                        {"seed", split.seed},
                        {"train", ids(split.train)},
                        {"validation", ids(split.validation)},
                        {"test", ids(split.test)}};
}

}  // namespace convseg

#endif  // CONVSEG_CORPUS_HPP_
