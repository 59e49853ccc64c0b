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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sentalign/similarity.hpp"
#include "sentalign/text_model.hpp"

namespace sentalign {

/// Default escalation: cheap token overlap, then character matching
/// blocks, then synonym-expanded matching blocks.
inline constexpr std::string_view kDefaultChain =
    "token_overlap:0.9,matching_blocks_ratio:0.75,synonym_ratio:0.8";

struct AlignmentConfig {
  ComparatorChain chain = ComparatorChain::parse(kDefaultChain);
  /// Candidate half-width around the expected target position; 0 scans the
  /// whole target corpus.
  std::size_t window = 20;
  /// How many following translation lines may contest a candidate.
  std::size_t lookahead_depth = 1;
  /// Synonym-variant cap for synonym_ratio.
  std::size_t cap = kDefaultVariantCap;
};

enum class Outcome {
  kAligned,     // paired with a target line
  kTranslated,  // no target accepted; intermediate translation used
  kFilled,      // translation used, attributed to file-length disproportion
};

std::string_view to_string(Outcome outcome) noexcept;
std::optional<Outcome> parse_outcome(std::string_view tag) noexcept;

struct AlignmentDecision {
  std::size_t source_index = 0;
  Outcome outcome = Outcome::kTranslated;
  /// Set for kAligned only.
  std::optional<std::size_t> target_index;
  std::optional<SimilarityScore> score;
  std::optional<ComparatorKind> comparator;
  /// Target-side text emitted for this line.
  std::string text;
};

struct AlignmentCounts {
  std::size_t aligned = 0;        // A
  std::size_t translated = 0;     // T
  std::size_t disproportion = 0;  // D
  std::size_t lines = 0;          // L

  friend bool operator==(const AlignmentCounts&, const AlignmentCounts&) = default;
};

struct AlignmentResult {
  std::vector<AlignmentDecision> decisions;
  /// (source text, target-side text), one per source line.
  std::vector<std::pair<std::string, std::string>> output_pairs;
  AlignmentCounts counts;
  std::vector<std::size_t> unmatched_target_indices;
};

struct Candidate {
  std::size_t target_index = 0;
  ChainDecision decision;
};

/// Target position a source line is expected near: floor(i * m / n).
std::size_t expected_position(std::size_t source_index, std::size_t source_size,
                              std::size_t target_size) noexcept;

/// Best accepted candidate among `pool` entries within `window` of
/// `expected` (window 0: no restriction). Ties on score go to the smaller
/// distance from `expected`, then to the smaller target index.
std::optional<Candidate> select_candidate(std::size_t expected, std::span<const std::size_t> pool,
                                          std::size_t window, const PreparedSentence& trans_line,
                                          std::span<const PreparedSentence> targets,
                                          const ComparatorChain& chain,
                                          const ScoringContext& context);

/// False (defer) iff some translation line j in (i, i + depth] scores
/// strictly higher, with an accepting chain decision, against `candidate`
/// than `current` does.
bool lookahead_resolve(std::size_t i, const PreparedSentence& candidate,
                       const ChainDecision& current, std::span<const PreparedSentence> trans,
                       const ComparatorChain& chain, std::size_t depth,
                       const ScoringContext& context);

/// Aligns every source line to an unused target line or falls back to its
/// intermediate translation. Never drops a line: the result holds exactly
/// one decision per source line. `context.cap` is overridden by config.cap.
AlignmentResult align(const Corpus& source, const Corpus& target, const Corpus& trans,
                      const AlignmentConfig& config, const ScoringContext& context = {});

/// Writes the two parallel output files and the JSON-lines report.
void write_alignment(const AlignmentResult& result, const std::filesystem::path& out_source,
                     const std::filesystem::path& out_target, const std::filesystem::path& report);

/// Report: one JSON object per decision, then a trailer with the counts.
void write_report(const AlignmentResult& result, std::ostream& out);
/// Parses a report written by write_report. output_pairs hold only the
/// target side. Throws DataError on malformed or inconsistent input.
AlignmentResult read_report(std::istream& in, const std::string& name = "<report>");
AlignmentResult read_report(const std::filesystem::path& path);

}  // namespace sentalign
