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

#ifndef CONVSEG_SEGMENTERS_HPP_
#define CONVSEG_SEGMENTERS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "convseg/corpus.hpp"
#include "convseg/error.hpp"
#include "convseg/hash.hpp"
#include "convseg/random.hpp"
#include "convseg/segmentation.hpp"
#include "convseg/textproc.hpp"

namespace convseg {

// A boundary predictor over a document's candidate offsets. Implementations
// must be deterministic given (document, parameters, seed).
class Segmenter {
 public:
  virtual ~Segmenter() = default;

  virtual std::string name() const = 0;

  Segmentation segment(const Document& doc, std::uint64_t seed = 0) const {
    if (doc.candidates.empty()) return make_segmentation(doc, {});
    return make_segmentation(doc, choose_breaks(doc, seed));
  }

 protected:
  // Called only for documents with at least one candidate. Must return a
  // strictly increasing subset of doc.candidates.
  virtual std::vector<std::size_t> choose_breaks(const Document& doc,
                                                 std::uint64_t seed) const = 0;
};

inline std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Bernoulli(p) per candidate, drawn in candidate order from a generator
// seeded by (seed, document id).
class RandSegmenter final : public Segmenter {
 public:
  explicit RandSegmenter(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::kInvalidArgument, "rand: p must be in [0, 1]");
    }
  }

  std::string name() const override { return "Rand_" + format_param(p_); }

 protected:
  std::vector<std::size_t> choose_breaks(const Document& doc,
                                         std::uint64_t seed) const override {
    Rng rng(derive_seed(seed, doc.id));
    std::vector<std::size_t> breaks;
    for (std::size_t c : doc.candidates) {
      if (uniform01(rng) < p_) breaks.push_back(c);
    }
    return breaks;
  }

 private:
  double p_;
};

// Breaks at every n-th candidate (1-based index divisible by n).
class EveryNSegmenter final : public Segmenter {
 public:
  explicit EveryNSegmenter(std::size_t n) : n_(n) {
    if (n == 0) throw Error(ErrorKind::kInvalidArgument, "every: n must be >= 1");
  }

  std::string name() const override { return "Every_" + std::to_string(n_); }

 protected:
  std::vector<std::size_t> choose_breaks(const Document& doc,
                                         std::uint64_t) const override {
    std::vector<std::size_t> breaks;
    for (std::size_t i = n_; i <= doc.candidates.size(); i += n_) {
      breaks.push_back(doc.candidates[i - 1]);
    }
    return breaks;
  }

 private:
  std::size_t n_;
};

inline Segmentation rand_p(const Document& doc, double p, std::uint64_t seed) {
  return RandSegmenter(p).segment(doc, seed);
}

inline Segmentation every_n(const Document& doc, std::size_t n) {
  return EveryNSegmenter(n).segment(doc);
}

// ---------------------------------------------------------------------------
// TextTiling

struct TextTilingParams {
  std::size_t pseudosentence_size = 10;
  std::size_t block_size = 3;
  std::size_t smoothing_width = 2;
};

namespace texttiling {

using TermVector = std::map<std::string, double>;

inline double cosine(const TermVector& a, const TermVector& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [term, v] : a) {
    na += v * v;
    if (auto it = b.find(term); it != b.end()) dot += v * it->second;
  }
  for (const auto& [term, v] : b) nb += v * v;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// Similarity at gap i (between pseudosentences i and i+1) compares the
// block_size pseudosentences on each side, truncated at the document edges.
inline std::vector<double> gap_similarities(std::span<const TermVector> pseudo,
                                            std::size_t block_size) {
  std::vector<double> sims;
  if (pseudo.size() < 2) return sims;
  for (std::size_t gap = 0; gap + 1 < pseudo.size(); ++gap) {
    TermVector left, right;
    const std::size_t lo = gap + 1 >= block_size ? gap + 1 - block_size : 0;
    for (std::size_t j = lo; j <= gap; ++j) {
      for (const auto& [t, v] : pseudo[j]) left[t] += v;
    }
    const std::size_t hi = std::min(pseudo.size(), gap + 1 + block_size);
    for (std::size_t j = gap + 1; j < hi; ++j) {
      for (const auto& [t, v] : pseudo[j]) right[t] += v;
    }
    sims.push_back(cosine(left, right));
  }
  return sims;
}

// Centered moving average with radius width / 2, truncated at the edges.
inline std::vector<double> smooth(std::span<const double> values,
                                  std::size_t width) {
  const std::size_t radius = width / 2;
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t lo = i >= radius ? i - radius : 0;
    const std::size_t hi = std::min(values.size() - 1, i + radius);
    double sum = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) sum += values[j];
    out[i] = sum / static_cast<double>(hi - lo + 1);
  }
  return out;
}

// d(i) = (hl - s(i)) + (hr - s(i)), with hl / hr the peaks reached by
// climbing left / right from i while the sequence does not decrease.
inline std::vector<double> depth_scores(std::span<const double> s) {
  std::vector<double> depth(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t l = i;
    while (l > 0 && s[l - 1] >= s[l]) --l;
    std::size_t r = i;
    while (r + 1 < s.size() && s[r + 1] >= s[r]) ++r;
    depth[i] = (s[l] - s[i]) + (s[r] - s[i]);
  }
  return depth;
}

// Depths below this are rounding residue from smoothing a flat run.
inline constexpr double kMinDepth = 1e-9;

// Gaps at valley bottoms whose depth exceeds mean(d) - stddev(d) / 2. A
// plateau at the bottom of a valley yields its leftmost gap only.
inline std::vector<std::size_t> select_gaps(std::span<const double> smoothed,
                                            std::span<const double> depth) {
  std::vector<std::size_t> gaps;
  if (depth.empty()) return gaps;
  double mean = 0.0;
  for (double d : depth) mean += d;
  mean /= static_cast<double>(depth.size());
  double var = 0.0;
  for (double d : depth) var += (d - mean) * (d - mean);
  var /= static_cast<double>(depth.size());
  const double cutoff = mean - std::sqrt(var) / 2.0;
  for (std::size_t i = 0; i < depth.size(); ++i) {
    const bool valley = (i == 0 || smoothed[i - 1] > smoothed[i]) &&
                        (i + 1 == smoothed.size() || smoothed[i + 1] >= smoothed[i]);
    if (valley && depth[i] > kMinDepth && depth[i] > cutoff) gaps.push_back(i);
  }
  return gaps;
}

struct Trace {
  // Content tokens (lowercased, stopwords removed) with their end offsets.
  std::vector<std::string> tokens;
  std::vector<std::size_t> token_ends;
  std::vector<double> similarities;
  std::vector<double> smoothed;
  std::vector<double> depths;
  std::vector<std::size_t> gaps;
  // Content-token position of each gap after sub-gap refinement.
  std::vector<double> positions;
  std::vector<std::size_t> breaks;
};

// Gap i sits after (i + 1) * w content tokens. A parabola through the
// smoothed scores at i - 1, i, i + 1 moves it by at most half a gap toward
// the interpolated minimum.
inline double refined_position(std::span<const double> s, std::size_t i, std::size_t w) {
  double offset = 0.0;
  if (i > 0 && i + 1 < s.size()) {
    const double curvature = s[i - 1] - 2.0 * s[i] + s[i + 1];
    if (curvature > kMinDepth) {
      offset = std::clamp(0.5 * (s[i - 1] - s[i + 1]) / curvature, -0.5, 0.5);
    }
  }
  return (static_cast<double>(i) + 1.0 + offset) * static_cast<double>(w);
}

inline const Stopwords& default_stopwords() {
  static const Stopwords stopwords;
  return stopwords;
}

// Full pipeline with intermediates. Gaps are snapped to the candidate whose
// count of preceding content tokens is nearest the gap's, ties to the earlier
// candidate, so stopword-only edits leave the result unchanged.
inline Trace run(const Document& doc, const TextTilingParams& params,
                 const Stopwords& stopwords = default_stopwords()) {
  if (params.pseudosentence_size == 0 || params.block_size == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "texttiling: pseudosentence and block size must be >= 1");
  }
  Trace trace;
  for (const Token& t : tokenize(doc.text)) {
    if (t.kind != TokenKind::kWord) continue;
    std::string lower = to_lower(t.text);
    if (stopwords.contains(lower)) continue;
    trace.tokens.push_back(std::move(lower));
    trace.token_ends.push_back(t.end);
  }
  const std::size_t w = params.pseudosentence_size;
  const std::size_t n_pseudo = (trace.tokens.size() + w - 1) / w;
  if (n_pseudo < 2 * params.block_size || doc.candidates.empty()) return trace;

  std::vector<TermVector> pseudo(n_pseudo);
  for (std::size_t i = 0; i < trace.tokens.size(); ++i) pseudo[i / w][trace.tokens[i]] += 1.0;

  trace.similarities = gap_similarities(pseudo, params.block_size);
  trace.smoothed = smooth(trace.similarities, params.smoothing_width);
  trace.depths = depth_scores(trace.smoothed);
  trace.gaps = select_gaps(trace.smoothed, trace.depths);

  // Content tokens ending at or before each candidate.
  std::vector<std::size_t> cand_pos(doc.candidates.size());
  for (std::size_t c = 0; c < doc.candidates.size(); ++c) {
    cand_pos[c] = static_cast<std::size_t>(
        std::upper_bound(trace.token_ends.begin(), trace.token_ends.end(),
                         doc.candidates[c]) -
        trace.token_ends.begin());
  }
  for (std::size_t gap : trace.gaps) {
    const double pos = refined_position(trace.smoothed, gap, w);
    trace.positions.push_back(pos);
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < cand_pos.size(); ++c) {
      const double dist = std::abs(static_cast<double>(cand_pos[c]) - pos);
      if (dist < best_dist) {
        best = c;
        best_dist = dist;
      }
    }
    trace.breaks.push_back(doc.candidates[best]);
  }
  std::sort(trace.breaks.begin(), trace.breaks.end());
  trace.breaks.erase(std::unique(trace.breaks.begin(), trace.breaks.end()),
                     trace.breaks.end());
  return trace;
}

}  // namespace texttiling

class TextTilingSegmenter final : public Segmenter {
 public:
  explicit TextTilingSegmenter(TextTilingParams params = {}) : params_(params) {
    if (params.pseudosentence_size == 0 || params.block_size == 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "texttiling: pseudosentence and block size must be >= 1");
    }
  }

  std::string name() const override { return "TextTiling"; }

 protected:
  std::vector<std::size_t> choose_breaks(const Document& doc,
                                         std::uint64_t) const override {
    return texttiling::run(doc, params_).breaks;
  }

 private:
  TextTilingParams params_;
};

inline Segmentation texttiling_segment(const Document& doc,
                                       const TextTilingParams& params = {}) {
  return TextTilingSegmenter(params).segment(doc);
}

}  // namespace convseg

#endif  // CONVSEG_SEGMENTERS_HPP_
