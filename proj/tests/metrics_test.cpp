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

#include "convseg/metrics.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "convseg/random.hpp"
#include "convseg/segmenters.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace convseg {
namespace {

using Offsets = std::vector<std::size_t>;

Segmentation seg(const std::string& id, Offsets breaks) {
  return Segmentation{id, std::move(breaks), {}};
}

Offsets random_subset(Rng& rng, const Offsets& from, double p) {
  Offsets out;
  for (std::size_t x : from) {
    if (uniform01(rng) < p) out.push_back(x);
  }
  return out;
}

TEST(PkTest, IdenticalIsZero) {
  const Offsets cands{10, 20, 30, 40, 50};
  const Offsets gold{20, 40};
  EXPECT_EQ(pk(make_unit_sequence(cands, gold, gold), 1), 0.0);
  EXPECT_EQ(pk(make_unit_sequence(cands, gold, gold)), 0.0);
}

TEST(PkTest, SixUnitsOneReferenceBreakAgainstNone) {
  const Offsets cands{10, 20, 30, 40, 50};
  const Offsets gold{30};
  const UnitSequence u = make_unit_sequence(cands, gold, {});
  ASSERT_EQ(u.size(), 6u);
  const double oracle = testing::oracle_pk(cands, {30}, {}, 1);
  EXPECT_EQ(oracle, 1.0 / 5.0);
  EXPECT_EQ(pk(u, 1), oracle);
}

TEST(PkTest, TotalDisagreement) {
  const Offsets cands{10, 20, 30, 40};
  EXPECT_EQ(pk(make_unit_sequence(cands, cands, {}), 1), 1.0);
}

TEST(PkTest, GoldOffLatticeStillShapesReference) {
  const Offsets cands{10, 30};
  const Offsets gold{20};
  const UnitSequence u = make_unit_sequence(cands, gold, cands);
  EXPECT_EQ(u.boundaries, (Offsets{10, 20, 30}));
  EXPECT_EQ(u.reference, (Offsets{0, 0, 1, 1}));
  EXPECT_EQ(u.hypothesis, (Offsets{0, 1, 1, 2}));
  EXPECT_THROW(make_unit_sequence(cands, gold, Offsets{25}), Error);
}

TEST(PkTest, WindowTooLarge) {
  const UnitSequence u = make_unit_sequence(Offsets{10}, Offsets{}, Offsets{});
  EXPECT_THROW(pk(u, 2), Error);
  EXPECT_THROW(pk(u, 0), Error);
}

TEST(PkTest, DefaultWindow) {
  // 9 units, 3 reference segments: half the mean length is 1.5, rounded to 2.
  const UnitSequence u =
      make_unit_sequence(Offsets{1, 2, 3, 4, 5, 6, 7, 8}, Offsets{3, 6}, Offsets{});
  EXPECT_EQ(default_pk_window(u), 2u);
  EXPECT_EQ(pk(u), testing::oracle_pk(u.boundaries, {3, 6}, {}, 2));
}

TEST(PkTest, MatchesBruteForceOracleProperty) {
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t units = 2 + uniform_index(rng, 11);
    Offsets lattice;
    for (std::size_t i = 1; i < units; ++i) lattice.push_back(i * 7);
    const Offsets gold = random_subset(rng, lattice, 0.35);
    Offsets cands;
    for (std::size_t b : lattice) {
      if (!std::binary_search(gold.begin(), gold.end(), b) || uniform01(rng) < 0.8) {
        cands.push_back(b);
      }
    }
    const Offsets hyp = random_subset(rng, cands, uniform01(rng));
    const UnitSequence u = make_unit_sequence(cands, gold, hyp);
    ASSERT_EQ(u.boundaries, lattice);
    const std::size_t k = 1 + uniform_index(rng, units - 1);
    const std::set<std::size_t> g(gold.begin(), gold.end()), h(hyp.begin(), hyp.end());
    const double expected = testing::oracle_pk(lattice, g, h, k);
    ASSERT_EQ(pk(u, k), expected);
    ASSERT_GE(expected, 0.0);
    ASSERT_LE(expected, 1.0);
  }
}

TEST(PrfTest, Definition) {
  EXPECT_EQ(prf(Offsets{10, 25}, Offsets{10, 30}), (Prf{0.5, 0.5, 0.5}));
  EXPECT_EQ(prf(Offsets{10, 25}, Offsets{25, 10}), (Prf{1, 1, 1}));
}

TEST(PrfTest, EmptyConventions) {
  EXPECT_EQ(prf(Offsets{}, Offsets{}), (Prf{1, 1, 1}));
  EXPECT_EQ(prf(Offsets{5}, Offsets{}), (Prf{0, 0, 0}));
  EXPECT_EQ(prf(Offsets{}, Offsets{5}), (Prf{0, 1, 0}));
  EXPECT_EQ(prf(Offsets{5}, Offsets{6}), (Prf{0, 0, 0}));
}

TEST(PrfTest, SwapExchangesPrecisionAndRecallProperty) {
  Rng rng(8);
  const Offsets universe{3, 6, 9, 12, 15, 18, 21, 24};
  for (int trial = 0; trial < 1000; ++trial) {
    Offsets g = random_subset(rng, universe, 0.5);
    Offsets p = random_subset(rng, universe, 0.5);
    // Holds when both sets are non-empty or both are empty; the empty-set
    // conventions are asymmetric by definition.
    if (g.empty() != p.empty()) continue;
    const Prf a = prf(g, p), b = prf(p, g);
    ASSERT_EQ(a.precision, b.recall);
    ASSERT_EQ(a.recall, b.precision);
    ASSERT_EQ(a.f1, b.f1);
  }
}

TEST(PrfTest, EveryOneRecallDropsWhenGoldMissesCandidates) {
  const Document d = build_document(
      RawRecipe{"d", "t", {"Add 2 cups flour", "Stir well.", "Bake."}, false});
  const Prf r = prf(d.step_offsets, every_n(d, 1).breaks);
  EXPECT_LT(r.recall, 1.0);
  EXPECT_EQ(r.recall, 0.5);
}

TEST(StepStatsTest, Categories) {
  const Segmentation gold = seg("d", {10, 20, 30, 40});
  StepStats s = step_stats(gold, gold);
  EXPECT_TRUE(s.exact_match);
  EXPECT_EQ(s.category, StepCategory::kEqual);
  EXPECT_STREQ(category_symbol(s.category), "=");

  s = step_stats(gold, seg("d", {10, 15, 20, 25, 30, 40}));
  EXPECT_EQ(s.n_gold_steps, 5u);
  EXPECT_EQ(s.n_pred_steps, 7u);
  EXPECT_EQ(s.category, StepCategory::kMore);
  EXPECT_FALSE(s.within_one);

  s = step_stats(gold, seg("d", {11, 21, 31}));
  EXPECT_EQ(s.category, StepCategory::kLess);
  EXPECT_FALSE(s.exact_match);
  EXPECT_TRUE(s.within_one);
}

DocRecord record_with_pk(double value) {
  DocRecord r;
  r.pk = value;
  return r;
}

TEST(AggregateTest, MeanPkAndErrors) {
  const std::vector<DocRecord> two{record_with_pk(0.2), record_with_pk(0.4)};
  EXPECT_DOUBLE_EQ(aggregate(two).pk, 0.3);
  EXPECT_THROW(aggregate(std::vector<DocRecord>{}), Error);
}

TEST(AggregateTest, SingleDocumentEqualsItsRecord) {
  Rng rng(6);
  const Document d = testing::cue_document(rng, "one", 0.1);
  const DocRecord r = evaluate_document(d, rand_p(d, 0.5, 1));
  const Aggregate a = aggregate(std::vector<DocRecord>{r});
  ASSERT_TRUE(r.pk);
  EXPECT_EQ(a.pk, *r.pk);
  EXPECT_EQ(a.precision, r.prf.precision);
  EXPECT_EQ(a.recall, r.prf.recall);
  EXPECT_EQ(a.f1, r.prf.f1);
  EXPECT_EQ(a.steps, static_cast<double>(r.steps.n_pred_steps));
}

TEST(AggregateTest, CategoryFractionsSumToOneProperty) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<DocRecord> records;
    for (int i = 0; i < 30; ++i) {
      const Document d = testing::cue_document(rng, "c" + std::to_string(i), 0.2);
      records.push_back(evaluate_document(d, rand_p(d, uniform01(rng), trial)));
    }
    const Aggregate a = aggregate(records);
    ASSERT_NEAR(a.equal_steps + a.more_steps + a.less_steps, 1.0, 1e-9);
    for (const auto& [key, v] : a.values()) {
      if (is_rate_column(key)) {
        ASSERT_GE(v, 0.0) << key;
        ASSERT_LE(v, 1.0) << key;
      }
    }
  }
}

TEST(EvaluateTest, PerfectPredictionAndMismatch) {
  Rng rng(14);
  const Document d = testing::cue_document(rng, "p", 0.0);
  const DocRecord r = evaluate_document(d, make_segmentation(d, d.step_offsets));
  EXPECT_EQ(r.pk, 0.0);
  EXPECT_EQ(r.prf, (Prf{1, 1, 1}));
  EXPECT_TRUE(r.steps.exact_match);
  try {
    evaluate_document(d, seg("other", {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(exit_code_for(e.kind()), 4);
  }
}

TEST(ReportTest, MeanStdFormat) {
  EXPECT_EQ(format_mean_std(0.354, 0.003), "35.4 \xC2\xB1 0.3");
  EXPECT_EQ(format_mean_std(3.8, 0.0, 1.0, 2), "3.80 \xC2\xB1 0.00");
}

TEST(ReportTest, ThreeSeededRunsCarryMeanAndSampleStd) {
  Rng rng(15);
  const auto docs = testing::cue_corpus(rng, "r", 40, 0.1);
  std::vector<std::vector<DocRecord>> runs;
  std::vector<double> recalls;
  for (std::uint64_t seed : {1, 2, 3}) {
    std::vector<DocRecord> run;
    for (const Document& d : docs) run.push_back(evaluate_document(d, rand_p(d, 0.5, seed)));
    recalls.push_back(aggregate(run).recall);
    runs.push_back(std::move(run));
  }
  const EvalReport report = make_report(runs, {1, 2, 3});
  const double mean = (recalls[0] + recalls[1] + recalls[2]) / 3;
  double ss = 0;
  for (double r : recalls) ss += (r - mean) * (r - mean);
  EXPECT_NEAR(report.mean.at("recall"), mean, 1e-15);
  EXPECT_NEAR(report.stddev.at("recall"), std::sqrt(ss / 2), 1e-15);
  EXPECT_GT(report.stddev.at("recall"), 0.0);

  const auto j = report_to_json(report);
  EXPECT_EQ(j["runs"], 3);
  EXPECT_EQ(j["seed_list"], nlohmann::json({1, 2, 3}));
  EXPECT_EQ(j["per_doc"].size(), 120u);
  const std::string formatted = j["formatted"]["recall"];
  EXPECT_NE(formatted.find(" \xC2\xB1 "), std::string::npos);

  std::ostringstream csv;
  write_report_csv(csv, report);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
            "statistic,Pk,Precision,Recall,F1,#Steps,#Tokens,ExactMatch,=Steps,+Steps,-Steps,"
            "Delta<=1");
}

TEST(CompareTest, DeltasAndMissingColumn) {
  Rng rng(16);
  const auto docs = testing::cue_corpus(rng, "c", 20, 0.1);
  auto report_for = [&](double p) {
    std::vector<DocRecord> run;
    for (const Document& d : docs) run.push_back(evaluate_document(d, rand_p(d, p, 1)));
    return report_to_json(make_report({run}, {1}));
  };
  const auto a = report_for(0.5), b = report_for(0.9);
  for (const ComparisonRow& row : compare_reports(a, a)) EXPECT_EQ(row.delta, 0.0) << row.key;
  const auto rows = compare_reports(a, b);
  ASSERT_EQ(rows.size(), metric_columns().size());
  for (const ComparisonRow& row : rows) EXPECT_EQ(row.delta, row.b - row.a);
  auto broken = a;
  broken["aggregate"].erase("f1");
  try {
    compare_reports(broken, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(exit_code_for(e.kind()), 2);
  }
}

}  // namespace
}  // namespace convseg
