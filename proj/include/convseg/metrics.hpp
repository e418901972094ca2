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

#ifndef CONVSEG_METRICS_HPP_
#define CONVSEG_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "convseg/corpus.hpp"
#include "convseg/error.hpp"
#include "convseg/segmentation.hpp"
#include "convseg/textproc.hpp"

namespace convseg {

// ---------------------------------------------------------------------------
// P_k

// Units are the spans delimited by the sorted union of candidates and gold
// breaks. reference[u] / hypothesis[u] are segment ids of unit u.
struct UnitSequence {
  std::vector<std::size_t> boundaries;
  std::vector<std::size_t> reference;
  std::vector<std::size_t> hypothesis;

  std::size_t size() const { return boundaries.size() + 1; }
};

namespace detail {

inline std::vector<std::size_t> segment_ids(std::span<const std::size_t> boundaries,
                                            std::span<const std::size_t> breaks,
                                            const char* which) {
  for (std::size_t b : breaks) {
    if (!std::binary_search(boundaries.begin(), boundaries.end(), b)) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(which) + " break " + std::to_string(b) +
                      " is not on the unit lattice");
    }
  }
  std::vector<std::size_t> ids(boundaries.size() + 1);
  std::size_t id = 0, next = 0;
  for (std::size_t u = 1; u < ids.size(); ++u) {
    while (next < breaks.size() && breaks[next] < boundaries[u - 1]) ++next;
    if (next < breaks.size() && breaks[next] == boundaries[u - 1]) ++id;
    ids[u] = id;
  }
  return ids;
}

}  // namespace detail

inline UnitSequence make_unit_sequence(std::span<const std::size_t> candidates,
                                       std::span<const std::size_t> gold_breaks,
                                       std::span<const std::size_t> hypothesis_breaks) {
  UnitSequence units;
  std::set_union(candidates.begin(), candidates.end(), gold_breaks.begin(),
                 gold_breaks.end(), std::back_inserter(units.boundaries));
  units.boundaries.erase(std::unique(units.boundaries.begin(), units.boundaries.end()),
                         units.boundaries.end());
  units.reference = detail::segment_ids(units.boundaries, gold_breaks, "reference");
  units.hypothesis = detail::segment_ids(units.boundaries, hypothesis_breaks, "hypothesis");
  return units;
}

// Half the mean reference segment length in units, at least 1.
inline std::size_t default_pk_window(const UnitSequence& units) {
  const double segments = static_cast<double>(units.reference.back() + 1);
  const double half = static_cast<double>(units.size()) / segments / 2.0;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(half)));
}

inline double pk(const UnitSequence& units, std::optional<std::size_t> k = {}) {
  const std::size_t n = units.size();
  const std::size_t window = k ? *k : default_pk_window(units);
  if (window == 0) throw Error(ErrorKind::kInvalidArgument, "pk: k must be >= 1");
  if (n <= window) {
    throw Error(ErrorKind::kInvalidArgument,
                "pk: document has " + std::to_string(n) + " units, too short for k=" +
                    std::to_string(window));
  }
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i + window < n; ++i) {
    const bool ref_same = units.reference[i] == units.reference[i + window];
    const bool hyp_same = units.hypothesis[i] == units.hypothesis[i + window];
    if (ref_same != hyp_same) ++disagreements;
  }
  return static_cast<double>(disagreements) / static_cast<double>(n - window);
}

inline double pk(const Document& doc, const Segmentation& hypothesis,
                 std::optional<std::size_t> k = {}) {
  return pk(make_unit_sequence(doc.candidates, doc.step_offsets, hypothesis.breaks), k);
}

// ---------------------------------------------------------------------------
// Boundary precision / recall / F1

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const Prf&) const = default;
};

// Empty prediction: precision 1 if gold is empty too, else 0. Empty gold:
// recall 1.
inline Prf prf_from_counts(std::size_t true_positives, std::size_t n_pred,
                           std::size_t n_gold) {
  Prf r;
  r.precision = n_pred == 0 ? (n_gold == 0 ? 1.0 : 0.0)
                            : static_cast<double>(true_positives) / static_cast<double>(n_pred);
  r.recall = n_gold == 0 ? 1.0
                         : static_cast<double>(true_positives) / static_cast<double>(n_gold);
  r.f1 = r.precision + r.recall == 0.0
             ? 0.0
             : 2.0 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

inline std::size_t count_matches(std::span<const std::size_t> gold,
                                 std::span<const std::size_t> pred) {
  std::vector<std::size_t> g(gold.begin(), gold.end()), p(pred.begin(), pred.end());
  std::sort(g.begin(), g.end());
  std::sort(p.begin(), p.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  std::vector<std::size_t> both;
  std::set_intersection(g.begin(), g.end(), p.begin(), p.end(), std::back_inserter(both));
  return both.size();
}

// Exact-offset matching.
inline Prf prf(std::span<const std::size_t> gold, std::span<const std::size_t> pred) {
  std::vector<std::size_t> g(gold.begin(), gold.end()), p(pred.begin(), pred.end());
  std::sort(g.begin(), g.end());
  std::sort(p.begin(), p.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return prf_from_counts(count_matches(g, p), p.size(), g.size());
}

// ---------------------------------------------------------------------------
// Step-count statistics

enum class StepCategory { kEqual, kMore, kLess };

inline const char* category_symbol(StepCategory c) {
  switch (c) {
    case StepCategory::kEqual: return "=";
    case StepCategory::kMore: return "+";
    case StepCategory::kLess: return "-";
  }
  return "?";
}

struct StepStats {
  std::size_t n_gold_steps = 0;
  std::size_t n_pred_steps = 0;
  bool exact_match = false;
  StepCategory category = StepCategory::kEqual;
  bool within_one = false;
  double tokens_per_pred_step = 0.0;
};

inline StepStats step_stats(const Segmentation& gold, const Segmentation& pred) {
  StepStats s;
  s.n_gold_steps = gold.n_steps();
  s.n_pred_steps = pred.n_steps();
  s.exact_match = gold.breaks == pred.breaks;
  s.category = s.n_pred_steps == s.n_gold_steps  ? StepCategory::kEqual
               : s.n_pred_steps > s.n_gold_steps ? StepCategory::kMore
                                                 : StepCategory::kLess;
  const std::size_t diff = s.n_pred_steps > s.n_gold_steps ? s.n_pred_steps - s.n_gold_steps
                                                           : s.n_gold_steps - s.n_pred_steps;
  s.within_one = diff <= 1;
  std::size_t tokens = 0;
  for (const std::string& step : pred.steps) tokens += count_words(tokenize(step));
  s.tokens_per_pred_step = static_cast<double>(tokens) / static_cast<double>(s.n_pred_steps);
  return s;
}

// ---------------------------------------------------------------------------
// Per-document records and aggregation

struct DocRecord {
  std::string doc_id;
  // Unset when the document has too few units for the P_k window.
  std::optional<double> pk;
  Prf prf;
  std::size_t true_positives = 0;
  std::size_t n_pred_breaks = 0;
  std::size_t n_gold_breaks = 0;
  StepStats steps;
};

inline DocRecord evaluate_document(const Document& doc, const Segmentation& pred) {
  if (pred.doc_id != doc.id) {
    throw Error(ErrorKind::kMismatch, "prediction " + pred.doc_id + " evaluated against " + doc.id);
  }
  DocRecord r;
  r.doc_id = doc.id;
  const UnitSequence units = make_unit_sequence(doc.candidates, doc.step_offsets, pred.breaks);
  if (units.size() > default_pk_window(units)) r.pk = pk(units);
  r.true_positives = count_matches(doc.step_offsets, pred.breaks);
  r.n_pred_breaks = pred.breaks.size();
  r.n_gold_breaks = doc.step_offsets.size();
  r.prf = prf(doc.step_offsets, pred.breaks);
  Segmentation pred_with_steps = pred;
  if (pred_with_steps.steps.size() != pred.breaks.size() + 1) {
    pred_with_steps.steps = cut_at(doc.text, pred.breaks);
  }
  r.steps = step_stats(gold_segmentation(doc), pred_with_steps);
  return r;
}

// Column keys in reporting order, with their table headers.
inline const std::vector<std::pair<std::string, std::string>>& metric_columns() {
  static const std::vector<std::pair<std::string, std::string>> kColumns = {
      {"pk", "Pk"},
      {"precision", "Precision"},
      {"recall", "Recall"},
      {"f1", "F1"},
      {"steps", "#Steps"},
      {"tokens", "#Tokens"},
      {"exact_match", "ExactMatch"},
      {"equal_steps", "=Steps"},
      {"more_steps", "+Steps"},
      {"less_steps", "-Steps"},
      {"delta_le1", "Delta<=1"}};
  return kColumns;
}

// Macro P_k; micro P/R/F1 over pooled break counts; fractions of documents
// for the categorical fields.
struct Aggregate {
  double pk = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double steps = 0.0;
  double tokens = 0.0;
  double exact_match = 0.0;
  double equal_steps = 0.0;
  double more_steps = 0.0;
  double less_steps = 0.0;
  double delta_le1 = 0.0;
  std::size_t n_docs = 0;
  std::size_t n_pk_docs = 0;

  std::map<std::string, double> values() const {
    return {{"pk", pk},
            {"precision", precision},
            {"recall", recall},
            {"f1", f1},
            {"steps", steps},
            {"tokens", tokens},
            {"exact_match", exact_match},
            {"equal_steps", equal_steps},
            {"more_steps", more_steps},
            {"less_steps", less_steps},
            {"delta_le1", delta_le1}};
  }
};

inline Aggregate aggregate(std::span<const DocRecord> records) {
  if (records.empty()) throw Error(ErrorKind::kEmpty, "aggregate: no records");
  Aggregate a;
  a.n_docs = records.size();
  std::size_t tp = 0, n_pred = 0, n_gold = 0;
  double pk_sum = 0.0;
  for (const DocRecord& r : records) {
    if (r.pk) {
      pk_sum += *r.pk;
      ++a.n_pk_docs;
    }
    tp += r.true_positives;
    n_pred += r.n_pred_breaks;
    n_gold += r.n_gold_breaks;
    a.steps += static_cast<double>(r.steps.n_pred_steps);
    a.tokens += r.steps.tokens_per_pred_step;
    a.exact_match += r.steps.exact_match ? 1.0 : 0.0;
    a.equal_steps += r.steps.category == StepCategory::kEqual ? 1.0 : 0.0;
    a.more_steps += r.steps.category == StepCategory::kMore ? 1.0 : 0.0;
    a.less_steps += r.steps.category == StepCategory::kLess ? 1.0 : 0.0;
    a.delta_le1 += r.steps.within_one ? 1.0 : 0.0;
  }
  const double n = static_cast<double>(records.size());
  a.pk = a.n_pk_docs ? pk_sum / static_cast<double>(a.n_pk_docs) : 0.0;
  const Prf micro = prf_from_counts(tp, n_pred, n_gold);
  a.precision = micro.precision;
  a.recall = micro.recall;
  a.f1 = micro.f1;
  for (double* v : {&a.steps, &a.tokens, &a.exact_match, &a.equal_steps, &a.more_steps,
                    &a.less_steps, &a.delta_le1}) {
    *v /= n;
  }
  return a;
}

// "35.4 ± 0.3"; rates are shown as percentages.
inline std::string format_mean_std(double mean, double stddev, double scale = 100.0,
                                   int precision = 1) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f \xC2\xB1 %.*f", precision, mean * scale, precision,
                stddev * scale);
  return buf;
}

inline bool is_rate_column(const std::string& key) { return key != "steps" && key != "tokens"; }

// Several runs (e.g. seeds) of one method over the same documents.
struct EvalReport {
  std::vector<std::vector<DocRecord>> runs;
  std::vector<std::uint64_t> seeds;
  std::map<std::string, double> mean;
  // Sample standard deviation across runs; 0 for a single run.
  std::map<std::string, double> stddev;
};

inline EvalReport make_report(std::vector<std::vector<DocRecord>> runs,
                              std::vector<std::uint64_t> seeds) {
  if (runs.empty()) throw Error(ErrorKind::kEmpty, "report: no runs");
  EvalReport report;
  std::vector<std::map<std::string, double>> per_run;
  for (const auto& run : runs) per_run.push_back(aggregate(run).values());
  for (const auto& [key, header] : metric_columns()) {
    double sum = 0.0;
    for (const auto& v : per_run) sum += v.at(key);
    const double mean = sum / static_cast<double>(per_run.size());
    double ss = 0.0;
    for (const auto& v : per_run) ss += (v.at(key) - mean) * (v.at(key) - mean);
    report.mean[key] = mean;
    report.stddev[key] =
        per_run.size() > 1 ? std::sqrt(ss / static_cast<double>(per_run.size() - 1)) : 0.0;
  }
  report.runs = std::move(runs);
  report.seeds = std::move(seeds);
  return report;
}

inline nlohmann::json record_to_json(const DocRecord& r) {
  nlohmann::json j{{"doc_id", r.doc_id},
                   {"precision", r.prf.precision},
                   {"recall", r.prf.recall},
                   {"f1", r.prf.f1},
                   {"n_pred_steps", r.steps.n_pred_steps},
                   {"n_gold_steps", r.steps.n_gold_steps},
                   {"exact_match", r.steps.exact_match},
                   {"category", category_symbol(r.steps.category)},
                   {"delta_le1", r.steps.within_one},
                   {"tokens_per_step", r.steps.tokens_per_pred_step}};
  j["pk"] = r.pk ? nlohmann::json(*r.pk) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json report_to_json(const EvalReport& report) {
  nlohmann::json per_doc = nlohmann::json::array();
  for (std::size_t run = 0; run < report.runs.size(); ++run) {
    for (const DocRecord& r : report.runs[run]) {
      nlohmann::json j = record_to_json(r);
      j["run"] = run;
      per_doc.push_back(std::move(j));
    }
  }
  nlohmann::json formatted = nlohmann::json::object();
  for (const auto& [key, header] : metric_columns()) {
    formatted[key] = is_rate_column(key)
                         ? format_mean_std(report.mean.at(key), report.stddev.at(key))
                         : format_mean_std(report.mean.at(key), report.stddev.at(key), 1.0, 2);
  }
  return nlohmann::json{{"per_doc", per_doc},
                        {"aggregate", report.mean},
                        {"aggregate_std", report.stddev},
                        {"formatted", formatted},
                        {"runs", report.runs.size()},
                        {"seed_list", report.seeds}};
}

inline void write_report_csv(std::ostream& out, const EvalReport& report) {
  out << "statistic";
  for (const auto& [key, header] : metric_columns()) out << ',' << header;
  out << '\n';
  for (const auto* row : {&report.mean, &report.stddev}) {
    out << (row == &report.mean ? "mean" : "std");
    for (const auto& [key, header] : metric_columns()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", row->at(key));
      out << ',' << buf;
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Report comparison

struct ComparisonRow {
  std::string key;
  std::string header;
  double a = 0.0;
  double b = 0.0;
  double delta = 0.0;
};

inline std::map<std::string, double> report_aggregate(const nlohmann::json& report,
                                                      const std::string& label) {
  if (!report.is_object() || !report.contains("aggregate") ||
      !report["aggregate"].is_object()) {
    throw Error(ErrorKind::kFormat, label + ": missing \"aggregate\" object");
  }
  std::map<std::string, double> out;
  for (const auto& [key, header] : metric_columns()) {
    const auto& agg = report["aggregate"];
    if (!agg.contains(key) || !agg[key].is_number()) {
      throw Error(ErrorKind::kFormat, label + ": missing column \"" + key + "\"");
    }
    out[key] = agg[key].get<double>();
  }
  return out;
}

// delta = b - a per metric.
inline std::vector<ComparisonRow> compare_reports(const nlohmann::json& a,
                                                  const nlohmann::json& b) {
  const auto va = report_aggregate(a, "report A");
  const auto vb = report_aggregate(b, "report B");
  std::vector<ComparisonRow> rows;
  for (const auto& [key, header] : metric_columns()) {
    rows.push_back({key, header, va.at(key), vb.at(key), vb.at(key) - va.at(key)});
  }
  return rows;
}

}  // namespace convseg

#endif  // CONVSEG_METRICS_HPP_
