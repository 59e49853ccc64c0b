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

#include "sentalign/tuner.hpp"

#include <algorithm>
#include <map>

#include "sentalign/errors.hpp"
#include "sentalign/metrics.hpp"

namespace sentalign {
namespace {

ThresholdBounds bounds_for(const TuningJob& job, std::size_t i) {
  return job.bounds.empty() ? ThresholdBounds{} : job.bounds[i];
}

}  // namespace

ThresholdResult binary_search_threshold(const ThresholdObjective& objective, ThresholdBounds bounds,
                                        double resolution, std::size_t comparator) {
  if (!(bounds.lo >= 0.0 && bounds.lo < bounds.hi && bounds.hi <= 1.0)) {
    throw ConfigError("threshold bounds must satisfy 0 <= lo < hi <= 1");
  }
  if (!(resolution > 0.0)) throw ConfigError("tuning resolution must be positive");

  ThresholdResult result;
  std::map<double, std::int64_t> seen;
  bool have_best = false;
  auto eval = [&](double t) {
    t = std::clamp(t, bounds.lo, bounds.hi);
    if (auto it = seen.find(t); it != seen.end()) return it->second;
    const std::int64_t s = objective(t);
    seen.emplace(t, s);
    ++result.evaluations;
    result.trace.push_back({comparator, t, s});
    if (!have_best || s > result.score) {
      result.threshold = t;
      result.score = s;
      have_best = true;
    }
    return s;
  };

  double lo = bounds.lo;
  double hi = bounds.hi;
  if (hi - lo <= resolution) {
    eval(lo + (hi - lo) / 2);
    return result;
  }
  while (hi - lo > resolution) {
    const double mid = lo + (hi - lo) / 2;
    eval(mid);
    const std::int64_t left = eval(mid - resolution);
    const std::int64_t right = eval(mid + resolution);
    if (right > left) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return result;
}

void validate(const TuningJob& job) {
  if (job.gold.empty()) throw DataError("tuning needs a non-empty gold alignment");
  if (job.dev_source.empty()) throw DataError("tuning needs a non-empty development source");
  if (job.dev_trans.size() != job.dev_source.size()) {
    throw DataError("development translation has " + std::to_string(job.dev_trans.size()) +
                    " lines but the source has " + std::to_string(job.dev_source.size()));
  }
  if (job.gold.size() < job.dev_source.size()) {
    throw DataError("gold covers " + std::to_string(job.gold.size()) + " lines but the source has " +
                    std::to_string(job.dev_source.size()));
  }
  if (!job.bounds.empty() && job.bounds.size() != job.chain_template.size()) {
    throw ConfigError("need one threshold bound per comparator");
  }
  for (const auto& b : job.bounds) {
    if (!(b.lo >= 0.0 && b.lo < b.hi && b.hi <= 1.0)) {
      throw ConfigError("threshold bounds must satisfy 0 <= lo < hi <= 1");
    }
  }
  if (!(job.resolution > 0.0)) throw ConfigError("tuning resolution must be positive");
}

std::int64_t evaluate_chain_on_dev(const TuningJob& job, const ComparatorChain& chain) {
  AlignmentConfig config = job.alignment;
  config.chain = chain;
  const AlignmentResult result = align(job.dev_source, job.dev_target, job.dev_trans, config,
                                       job.resources);
  return evaluate_against_gold(result, job.gold).score;
}

ThresholdResult tune_threshold(const TuningJob& job, std::size_t comparator_position) {
  validate(job);
  if (comparator_position >= job.chain_template.size()) {
    throw ConfigError("no comparator at position " + std::to_string(comparator_position));
  }
  auto objective = [&](double t) {
    return evaluate_chain_on_dev(
        job, job.chain_template.with_threshold(comparator_position, SimilarityScore(t)));
  };
  return binary_search_threshold(objective, bounds_for(job, comparator_position), job.resolution,
                                 comparator_position);
}

TuningReport tune_chain(const TuningJob& job) {
  validate(job);
  TuningReport report;
  std::vector<Comparator> tuned(job.chain_template.comparators().begin(),
                                job.chain_template.comparators().end());
  for (std::size_t i = 0; i < job.chain_template.size(); ++i) {
    ThresholdResult r = tune_threshold(job, i);
    tuned[i].threshold = SimilarityScore(r.threshold);
    report.thresholds.push_back(r.threshold);
    report.evaluation_count += r.evaluations;
    report.trace.insert(report.trace.end(), r.trace.begin(), r.trace.end());
  }
  report.chain = ComparatorChain(std::move(tuned));
  report.achieved_score = evaluate_chain_on_dev(job, report.chain);
  ++report.evaluation_count;
  return report;
}

}  // namespace sentalign
