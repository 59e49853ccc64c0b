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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sentalign/aligner.hpp"
#include "sentalign/similarity.hpp"
#include "sentalign/text_model.hpp"

namespace sentalign {

inline constexpr double kDefaultTuningResolution = 1.0 / 256.0;

/// Recommended development-set size range, in lines.
inline constexpr std::size_t kRecommendedDevMin = 1000;
inline constexpr std::size_t kRecommendedDevMax = 10000;

struct ThresholdBounds {
  double lo = 0.0;
  double hi = 1.0;
};

struct TuningJob {
  Corpus dev_source;
  Corpus dev_target;
  Corpus dev_trans;
  /// Line i: expected target text for source line i (empty: none).
  std::vector<std::string> gold;
  ComparatorChain chain_template = ComparatorChain::parse(kDefaultChain);
  /// One entry per comparator; empty means [0, 1] for all.
  std::vector<ThresholdBounds> bounds;
  double resolution = kDefaultTuningResolution;
  /// Window, lookahead and cap used for every evaluation (chain ignored).
  AlignmentConfig alignment;
  ScoringContext resources;
};

struct TracePoint {
  std::size_t comparator = 0;
  double threshold = 0.0;
  std::int64_t score = 0;
};

struct ThresholdResult {
  double threshold = 0.0;
  std::int64_t score = 0;
  std::size_t evaluations = 0;
  std::vector<TracePoint> trace;
};

struct TuningReport {
  std::vector<double> thresholds;
  ComparatorChain chain = ComparatorChain::parse(kDefaultChain);
  std::int64_t achieved_score = 0;
  std::size_t evaluation_count = 0;
  std::vector<TracePoint> trace;
};

using ThresholdObjective = std::function<std::int64_t(double)>;

/// Binary search on [bounds.lo, bounds.hi]. Each step scores the midpoint
/// and the points one resolution to either side, then keeps the half on
/// the better side (the lower half on a tie). Stops once the interval is
/// no wider than `resolution` and returns the best point evaluated, the
/// earliest one on ties. Repeated thresholds are not re-evaluated.
ThresholdResult binary_search_threshold(const ThresholdObjective& objective, ThresholdBounds bounds,
                                        double resolution, std::size_t comparator = 0);

/// Throws ConfigError/DataError for an inconsistent job, before any run.
void validate(const TuningJob& job);

/// Aligns the dev set with `chain` and scores it against the gold lines.
std::int64_t evaluate_chain_on_dev(const TuningJob& job, const ComparatorChain& chain);

/// Tunes one comparator; the others keep their template thresholds.
ThresholdResult tune_threshold(const TuningJob& job, std::size_t comparator_position);

/// Tunes each comparator separately, then scores the chain assembled from
/// the individually tuned thresholds.
TuningReport tune_chain(const TuningJob& job);

}  // namespace sentalign
