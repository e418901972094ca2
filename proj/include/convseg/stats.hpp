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

#ifndef CONVSEG_STATS_HPP_
#define CONVSEG_STATS_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "convseg/corpus.hpp"
#include "convseg/error.hpp"
#include "convseg/segmentation.hpp"
#include "convseg/textproc.hpp"

namespace convseg {

// A segmented corpus as plain step lists, one per document.
using StepLists = std::vector<std::vector<std::string>>;

inline StepLists gold_step_lists(std::span<const Document> docs) {
  StepLists out;
  out.reserve(docs.size());
  for (const Document& d : docs) out.push_back(gold_steps(d));
  return out;
}

// Steps of each document under a predicted segmentation, matched by id.
inline StepLists predicted_step_lists(std::span<const Document> docs,
                                      std::span<const Segmentation> segs) {
  std::map<std::string, const Segmentation*> by_id;
  for (const Segmentation& s : segs) by_id[s.doc_id] = &s;
  StepLists out;
  for (const Document& d : docs) {
    auto it = by_id.find(d.id);
    if (it == by_id.end()) throw Error(ErrorKind::kMismatch, "no segmentation for " + d.id);
    out.push_back(cut_at(d.text, it->second->breaks));
  }
  return out;
}

struct Distribution {
  std::vector<std::size_t> values;

  double mean() const {
    if (values.empty()) return 0.0;
    unsigned __int128 sum = 0;
    for (std::size_t v : values) sum += v;
    return static_cast<double>(sum) / static_cast<double>(values.size());
  }

  // Population variance, (n * sum(x^2) - sum(x)^2) / n^2 in exact integers.
  double variance() const {
    if (values.empty()) return 0.0;
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    for (std::size_t v : values) {
      sum += v;
      sum_sq += static_cast<unsigned __int128>(v) * v;
    }
    const unsigned __int128 n = values.size();
    const long double num = static_cast<long double>(n * sum_sq - sum * sum);
    const long double den = static_cast<long double>(n) * static_cast<long double>(n);
    return static_cast<double>(num / den);
  }

  std::map<std::size_t, std::size_t> histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (std::size_t v : values) ++h[v];
    return h;
  }
};

struct CorpusStats {
  Distribution doc_steps;
  Distribution doc_tokens;
  Distribution doc_sentences;
  Distribution step_tokens;
  Distribution step_sentences;
  Distribution step_verbs;
  Distribution step_nouns;

  std::vector<std::pair<std::string, const Distribution*>> named() const {
    return {{"doc_steps", &doc_steps},         {"doc_tokens", &doc_tokens},
            {"doc_sentences", &doc_sentences}, {"step_tokens", &step_tokens},
            {"step_sentences", &step_sentences}, {"step_verbs", &step_verbs},
            {"step_nouns", &step_nouns}};
  }
};

// Tokens are non-punctuation tokens. Document sentence counts come from the
// joined step text, so they do not depend on where the steps were cut.
inline CorpusStats corpus_stats(const StepLists& corpus,
                                const PosLexicon& lexicon = PosLexicon::builtin()) {
  if (corpus.empty()) throw Error(ErrorKind::kEmpty, "corpus_stats: empty corpus");
  CorpusStats s;
  for (const auto& steps : corpus) {
    std::size_t doc_tokens = 0;
    for (const std::string& step : steps) {
      const std::vector<Token> tokens = tokenize(step);
      const std::size_t n_tokens = count_words(tokens);
      const PosCounts pos = pos_counts(tokens, lexicon);
      s.step_tokens.values.push_back(n_tokens);
      s.step_sentences.values.push_back(split_sentences(step).size());
      s.step_verbs.values.push_back(pos.verbs);
      s.step_nouns.values.push_back(pos.nouns);
      doc_tokens += n_tokens;
    }
    s.doc_steps.values.push_back(steps.size());
    s.doc_tokens.values.push_back(doc_tokens);
    s.doc_sentences.values.push_back(split_sentences(join(steps)).size());
  }
  return s;
}

inline CorpusStats corpus_stats(std::span<const Document> docs,
                                const PosLexicon& lexicon = PosLexicon::builtin()) {
  return corpus_stats(gold_step_lists(docs), lexicon);
}

inline nlohmann::json stats_to_json(const CorpusStats& s) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, dist] : s.named()) {
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [bin, count] : dist->histogram()) hist.push_back({bin, count});
    j[name] = {{"count", dist->values.size()},
               {"mean", dist->mean()},
               {"variance", dist->variance()},
               {"histogram", hist}};
  }
  return j;
}

inline void write_histogram_csv(std::ostream& out, const Distribution& dist) {
  out << "bin,count\n";
  for (const auto& [bin, count] : dist.histogram()) out << bin << ',' << count << '\n';
}

inline void write_stats_csv(std::ostream& out, const CorpusStats& s) {
  out << "quantity,count,mean,variance\n";
  for (const auto& [name, dist] : s.named()) {
    out << name << ',' << dist->values.size() << ',' << nlohmann::json(dist->mean()).dump()
        << ',' << nlohmann::json(dist->variance()).dump() << '\n';
  }
}

// ---------------------------------------------------------------------------
// Boundary n-grams

enum class NgramPosition { kStarting, kEnding };

struct NgramTable {
  NgramPosition position = NgramPosition::kStarting;
  std::size_t n = 0;
  // Frequency descending, then lexicographic.
  std::vector<std::pair<Ngram, std::size_t>> entries;
};

// Normalized words of a step: punctuation dropped, numbers as "[N]".
inline std::vector<std::string> step_words(const std::string& step) {
  return normalized_words(step);
}

inline std::map<Ngram, std::size_t> count_boundary_ngrams(const StepLists& corpus,
                                                          NgramPosition position,
                                                          std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "n must be >= 1");
  std::map<Ngram, std::size_t> counts;
  for (const auto& steps : corpus) {
    for (const std::string& step : steps) {
      const std::vector<std::string> words = step_words(step);
      if (words.size() < n) continue;
      const auto first = position == NgramPosition::kStarting
                             ? words.begin()
                             : words.end() - static_cast<std::ptrdiff_t>(n);
      ++counts[Ngram(first, first + static_cast<std::ptrdiff_t>(n))];
    }
  }
  return counts;
}

inline NgramTable boundary_ngrams(const StepLists& corpus, NgramPosition position,
                                  std::size_t n, std::size_t top_k) {
  if (top_k == 0) throw Error(ErrorKind::kInvalidArgument, "top_k must be >= 1");
  NgramTable table;
  table.position = position;
  table.n = n;
  for (auto& [gram, count] : count_boundary_ngrams(corpus, position, n)) {
    table.entries.emplace_back(gram, count);
  }
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (table.entries.size() > top_k) table.entries.resize(top_k);
  return table;
}

inline NgramTable boundary_ngrams(std::span<const Document> docs, NgramPosition position,
                                  std::size_t n, std::size_t top_k) {
  return boundary_ngrams(gold_step_lists(docs), position, n, top_k);
}

// Fraction of distinct boundary n-grams (starting and ending counts pooled
// into one table) that occur exactly once.
inline double uniqueness_fraction(const StepLists& corpus, std::size_t n) {
  std::map<Ngram, std::size_t> pooled = count_boundary_ngrams(corpus, NgramPosition::kStarting, n);
  for (auto& [gram, count] : count_boundary_ngrams(corpus, NgramPosition::kEnding, n)) {
    pooled[gram] += count;
  }
  if (pooled.empty()) throw Error(ErrorKind::kEmpty, "uniqueness_fraction: no n-grams");
  std::size_t singletons = 0;
  for (const auto& [gram, count] : pooled) singletons += count == 1;
  return static_cast<double>(singletons) / static_cast<double>(pooled.size());
}

inline double uniqueness_fraction(std::span<const Document> docs, std::size_t n) {
  return uniqueness_fraction(gold_step_lists(docs), n);
}

inline nlohmann::json ngram_table_to_json(const NgramTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [gram, count] : t.entries) {
    entries.push_back({{"ngram", join(gram)}, {"frequency", count}});
  }
  return nlohmann::json{{"position", t.position == NgramPosition::kStarting ? "starting" : "ending"},
                        {"n", t.n},
                        {"entries", entries}};
}

inline void write_ngram_csv(std::ostream& out, const NgramTable& t) {
  out << "ngram,frequency\n";
  for (const auto& [gram, count] : t.entries) {
    std::string field = join(gram);
    for (std::size_t pos = 0; (pos = field.find('"', pos)) != std::string::npos; pos += 2) {
      field.insert(pos, 1, '"');
    }
    out << '"' << field << "\"," << count << '\n';
  }
}

}  // namespace convseg

#endif  // CONVSEG_STATS_HPP_
