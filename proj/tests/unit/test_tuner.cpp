// Copyright 2026 The sentalign Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "sentalign/errors.hpp"
#include "sentalign/metrics.hpp"
#include "sentalign/tuner.hpp"
#include "synthetic.hpp"

namespace sentalign {
namespace {

TuningJob job_from(const synthetic::Parallel& p, std::string_view chain) {
  TuningJob job;
  job.dev_source = p.source;
  job.dev_target = p.target;
  job.dev_trans = p.trans;
  job.gold = p.gold;
  job.chain_template = ComparatorChain::parse(chain);
  return job;
}

// Evaluation cap for one comparator: three probes per halving plus the
// first midpoint.
std::size_t eval_cap(double width, double resolution) {
  return 3 * (static_cast<std::size_t>(std::ceil(std::log2(width / resolution))) + 1);
}

TEST(StepDevSet, ScoresAreAStepFunction) {
  const auto job = job_from(synthetic::step_dev_set(20), "ratio:0.5");
  for (int k = 0; k <= 256; ++k) {
    const double t = k / 256.0;
    const auto chain = job.chain_template.with_threshold(0, SimilarityScore(t));
    ASSERT_EQ(evaluate_chain_on_dev(job, chain), t <= 0.5 ? 100 : 40) << t;
  }
}

TEST(TuneThreshold, StepFunctionFindsTheTop) {
  const auto job = job_from(synthetic::step_dev_set(20), "ratio:0.9");
  const auto r = tune_threshold(job, 0);
  EXPECT_LE(r.threshold, 0.5);
  EXPECT_EQ(r.score, 100);
  EXPECT_LE(r.evaluations, eval_cap(1.0, job.resolution));
  EXPECT_EQ(r.trace.size(), r.evaluations);
}

TEST(TuneThreshold, FlatObjective) {
  // Exact duplicates are accepted at every threshold.
  synthetic::Options o;
  o.lines = 15;
  const auto p = synthetic::generate(o);
  auto job = job_from(p, "ratio:0.5");
  job.dev_trans = p.target;
  const auto r = tune_threshold(job, 0);
  EXPECT_EQ(r.score, 100);
  EXPECT_GE(r.threshold, 0.0);
  EXPECT_LE(r.threshold, 1.0);
  for (const auto& point : r.trace) EXPECT_EQ(point.score, 100);
}

TEST(TuneThreshold, RespectsBounds) {
  auto job = job_from(synthetic::step_dev_set(10), "ratio:0.5");
  job.bounds = {{0.6, 0.9}};
  const auto r = tune_threshold(job, 0);
  EXPECT_GE(r.threshold, 0.6);
  EXPECT_LE(r.threshold, 0.9);
  EXPECT_EQ(r.score, 40);
  for (const auto& point : r.trace) {
    EXPECT_GE(point.threshold, 0.6);
    EXPECT_LE(point.threshold, 0.9);
  }
}

TEST(BinarySearch, NarrowBounds) {
  const double res = kDefaultTuningResolution;
  int calls = 0;
  const auto r = binary_search_threshold(
      [&](double) {
        ++calls;
        return std::int64_t{7};
      },
      {0.3, 0.3 + res}, res);
  EXPECT_LE(calls, 3);
  EXPECT_EQ(r.evaluations, static_cast<std::size_t>(calls));
  EXPECT_EQ(r.score, 7);
}

TEST(BinarySearch, UnimodalWithinOneStepOfGridBest) {
  const double res = 1.0 / 256.0;
  for (double peak : {0.05, 0.21, 0.37, 0.5, 0.66, 0.93}) {
    auto objective = [peak](double t) {
      return static_cast<std::int64_t>(100 - std::floor(300 * std::abs(t - peak)));
    };
    std::int64_t grid_best = 0;
    for (int k = 0; k <= 256; ++k) grid_best = std::max(grid_best, objective(k * res));
    int calls = 0;
    const auto r = binary_search_threshold(
        [&](double t) {
          ++calls;
          return objective(t);
        },
        {0.0, 1.0}, res);
    EXPECT_GE(r.score, objective(peak) - 2 * 300 * res) << peak;
    EXPECT_GE(r.score + static_cast<std::int64_t>(std::ceil(300 * res)), grid_best) << peak;
    EXPECT_LE(static_cast<std::size_t>(calls), eval_cap(1.0, res));
  }
}

TEST(BinarySearch, KeepsBestObservedPoint) {
  // A spike the halving walks away from is still reported.
  const auto r = binary_search_threshold(
      [](double t) { return t == 0.5 ? std::int64_t{90} : std::int64_t{10}; }, {0.0, 1.0},
      1.0 / 64);
  EXPECT_EQ(r.threshold, 0.5);
  EXPECT_EQ(r.score, 90);
}

TEST(BinarySearch, RejectsDegenerateBounds) {
  auto f = [](double) { return std::int64_t{0}; };
  EXPECT_THROW(binary_search_threshold(f, {0.5, 0.5}, 0.01), ConfigError);
  EXPECT_THROW(binary_search_threshold(f, {-0.1, 0.5}, 0.01), ConfigError);
  EXPECT_THROW(binary_search_threshold(f, {0.0, 1.0}, 0.0), ConfigError);
}

TEST(TuneChain, SingleComparatorEqualsTuneThreshold) {
  const auto job = job_from(synthetic::step_dev_set(12), "ratio:0.7");
  const auto single = tune_threshold(job, 0);
  const auto report = tune_chain(job);
  ASSERT_EQ(report.thresholds.size(), 1u);
  EXPECT_EQ(report.thresholds[0], single.threshold);
  EXPECT_EQ(report.achieved_score, single.score);
}

TEST(TuneChain, DuplicatesReachFullScore) {
  synthetic::Options o;
  o.lines = 25;
  o.seed = 9;
  const auto p = synthetic::generate(o);
  auto job = job_from(p, "token_overlap:0.9,matching_blocks_ratio:0.9");
  job.dev_trans = p.target;
  const auto report = tune_chain(job);
  EXPECT_EQ(report.achieved_score, 100);
  ASSERT_EQ(report.thresholds.size(), 2u);
  EXPECT_LE(report.evaluation_count, 2 * eval_cap(1.0, job.resolution) + 1);
}

TEST(TuneChain, AchievedScoreIsReproducible) {
  synthetic::Options o;
  o.lines = 80;
  o.seed = 21;
  o.drop_rate = 0.05;
  o.shuffle_block = 4;
  o.synonym_rate = 0.15;
  const auto p = synthetic::generate(o);
  auto job = job_from(p, "token_overlap:0.9,matching_blocks_ratio:0.75,synonym_ratio:0.8");
  job.resources.lexicon = &p.lexicon;
  const auto report = tune_chain(job);

  AlignmentConfig config;
  config.chain = report.chain;
  const auto rerun = align(p.source, p.target, p.trans, config, job.resources);
  EXPECT_EQ(evaluate_against_gold(rerun, p.gold).score, report.achieved_score);
  for (std::size_t i = 0; i < report.thresholds.size(); ++i) {
    EXPECT_EQ(report.chain.comparators()[i].threshold.value(), report.thresholds[i]);
  }
}

TEST(TuneChain, EmptyGoldFailsBeforeAligning) {
  auto job = job_from(synthetic::step_dev_set(5), "ratio:0.5");
  job.gold.clear();
  int probes = 0;
  job.resources.probe = [&](const Comparator&) { ++probes; };
  EXPECT_THROW(tune_chain(job), DataError);
  EXPECT_EQ(probes, 0);
}

TEST(TuneChain, InconsistentDevSet) {
  auto job = job_from(synthetic::step_dev_set(5), "ratio:0.5");
  job.dev_trans = Corpus::from_lines("en", std::vector<std::string>{"x"});
  EXPECT_THROW(tune_chain(job), DataError);
  job = job_from(synthetic::step_dev_set(5), "ratio:0.5");
  job.bounds = {{0.0, 1.0}, {0.0, 1.0}};
  EXPECT_THROW(tune_chain(job), ConfigError);
}

}  // namespace
}  // namespace sentalign
