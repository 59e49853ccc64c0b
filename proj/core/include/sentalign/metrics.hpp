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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sentalign/aligner.hpp"
#include "sentalign/text_model.hpp"

namespace sentalign {

// ---------------------------------------------------------------------------
// Alignment quality score
// ---------------------------------------------------------------------------

struct ScoreCard {
  std::size_t aligned = 0;        // A
  std::size_t misaligned = 0;     // M
  std::size_t translated = 0;     // T
  std::size_t disproportion = 0;  // D
  std::size_t lines = 0;          // L
  std::int64_t score = 0;         // S

  /// The nominal scale is [1, 100]; pathological inputs fall outside it.
  bool in_nominal_range() const noexcept { return score >= 1 && score <= 100; }
  friend bool operator==(const ScoreCard&, const ScoreCard&) = default;
};

/// floor(20 * (5A - M + 2T + 5|D|) / L) in exact integer arithmetic.
/// Aligned and disproportion lines earn 1 point, translations 0.4 and
/// misalignments -0.2, scaled to 100. Throws DataError when L == 0.
std::int64_t alignment_score(std::int64_t aligned, std::int64_t misaligned,
                             std::int64_t translated, std::int64_t disproportion,
                             std::int64_t lines);

/// Classifies decisions against `gold` (line i: expected target text for
/// source line i, compared after normalization). ALIGNED lines count as A
/// or M, TRANSLATED as T, FILLED as D. Throws DataError when gold does not
/// cover every source index.
ScoreCard evaluate_against_gold(const AlignmentResult& result, std::span<const std::string> gold);

// ---------------------------------------------------------------------------
// BLEU
// ---------------------------------------------------------------------------

/// Per-order clipped n-gram matches and candidate n-gram totals plus the
/// candidate and reference lengths. Sums component-wise over a corpus.
struct SufficientStats {
  std::vector<std::size_t> matches;
  std::vector<std::size_t> totals;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;

  std::size_t order() const noexcept { return matches.size(); }

  SufficientStats& operator+=(const SufficientStats& other);
  friend SufficientStats operator+(SufficientStats a, const SufficientStats& b) { return a += b; }
  friend bool operator==(const SufficientStats&, const SufficientStats&) = default;
};

struct EvalPair {
  Sentence hypothesis;
  Sentence reference;
};

inline constexpr std::size_t kDefaultBleuOrder = 4;

SufficientStats bleu_stats(std::span<const std::string> hypothesis,
                           std::span<const std::string> reference,
                           std::size_t order = kDefaultBleuOrder);
SufficientStats bleu_stats(const EvalPair& pair, std::size_t order = kDefaultBleuOrder);

enum class BrevityPenaltyForm {
  kStandard,  // exp(1 - r/c)
  kLiteral,   // exp((1 - r)/c), the alternative typesetting
};

/// 1 when c > r, otherwise the exponential penalty. Throws DataError when c == 0.
double brevity_penalty(std::size_t candidate_length, std::size_t reference_length,
                       BrevityPenaltyForm form = BrevityPenaltyForm::kStandard);

struct BleuOptions {
  /// Positive, summing to one; empty means uniform 1/N.
  std::vector<double> weights;
  BrevityPenaltyForm brevity = BrevityPenaltyForm::kStandard;
  /// Added to numerator and denominator of every precision. 0 disables
  /// smoothing, so any zero precision gives BLEU 0.
  double smoothing = 0.0;
};

/// BP * exp(sum_n w_n * ln p_n) over summed statistics.
double bleu(const SufficientStats& stats, const BleuOptions& options = {});

/// Per-order precision p_n = matches/totals (0 when totals is 0).
std::vector<double> precisions(const SufficientStats& stats);

// ---------------------------------------------------------------------------
// Edit rates
// ---------------------------------------------------------------------------

/// Unit-cost Levenshtein distance.
template <typename T>
std::size_t levenshtein(std::span<const T> a, std::span<const T> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

struct TerOptions {
  /// Longest hypothesis phrase considered for a shift.
  std::size_t max_shift_length = 10;
};

struct TerStats {
  std::size_t edits = 0;  // insertions + deletions + substitutions + shifts
  std::size_t shifts = 0;
  std::size_t reference_length = 0;

  double rate() const;
  TerStats& operator+=(const TerStats& other);
};

/// Greedy-shift TER edit counts. Repeatedly applies the single block shift
/// that lowers the word edit distance the most, as long as that lowers
/// (distance + shift count); then adds the remaining distance.
TerStats ter_stats(std::span<const std::string> hypothesis, std::span<const std::string> reference,
                   const TerOptions& options = {});

/// Edits per reference word. Throws DataError for an empty reference.
double ter(const TokenizedSentence& hypothesis, const TokenizedSentence& reference,
           const TerOptions& options = {});

struct CerStats {
  std::size_t edits = 0;
  std::size_t reference_length = 0;

  double rate() const;
  CerStats& operator+=(const CerStats& other);
};

/// Character (code point) edit distance over normalized text.
CerStats cer_stats(const Sentence& hypothesis, const Sentence& reference);
CerStats cer_stats(std::string_view hypothesis, std::string_view reference);

/// Edits per reference character. Throws DataError for an empty reference.
double cer(const Sentence& hypothesis, const Sentence& reference);
double cer(std::string_view hypothesis, std::string_view reference);

// ---------------------------------------------------------------------------
// Corpus evaluation
// ---------------------------------------------------------------------------

struct CorpusEvaluation {
  double bleu = 0.0;
  double ter = 0.0;
  double cer = 0.0;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
  std::vector<double> precisions;
};

struct EvaluationOptions {
  std::size_t order = kDefaultBleuOrder;
  BleuOptions bleu;
  TerOptions ter;
};

/// Corpus-level BLEU/TER/CER from summed per-line statistics. Throws
/// DataError on a line-count mismatch or an empty corpus.
CorpusEvaluation evaluate_corpus(const Corpus& hypotheses, const Corpus& references,
                                 const EvaluationOptions& options = {});

}  // namespace sentalign
