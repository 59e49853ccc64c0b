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

#include <compare>
#include <cstddef>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentalign/lexicon.hpp"
#include "sentalign/text_model.hpp"

namespace sentalign {

/// A similarity value in [0, 1].
class SimilarityScore {
 public:
  constexpr SimilarityScore() = default;
  /// Throws ConfigError outside [0, 1] (including NaN).
  explicit SimilarityScore(double value);

  constexpr double value() const noexcept { return value_; }

  friend constexpr auto operator<=>(SimilarityScore, SimilarityScore) = default;

 private:
  double value_ = 0.0;
};

/// A common contiguous run: a[a_start, a_start+length) == b[b_start, ...).
/// Offsets count code points.
struct MatchingBlock {
  std::size_t a_start = 0;
  std::size_t b_start = 0;
  std::size_t length = 0;

  friend bool operator==(const MatchingBlock&, const MatchingBlock&) = default;
};

/// Recursive longest-common-block decomposition: take the longest common
/// block (ties: smallest a_start, then smallest b_start), then recurse on
/// the pair of prefixes before it and the pair of suffixes after it.
/// Returned blocks are ordered by a_start (and therefore by b_start).
std::vector<MatchingBlock> matching_blocks(std::u32string_view a, std::u32string_view b);
std::vector<MatchingBlock> matching_blocks(std::string_view a, std::string_view b);

/// Sum of block lengths from matching_blocks, without materializing blocks.
std::size_t matched_length(std::u32string_view a, std::u32string_view b);

/// 2*M / (|a| + |b|); 1.0 when both are empty.
SimilarityScore ratio(std::u32string_view a, std::u32string_view b);
/// UTF-8 overload; compares code points.
SimilarityScore ratio(std::string_view a, std::string_view b);

/// Per-character bit masks of a string, for lcs_length.
struct CharMasks {
  std::size_t length = 0;
  std::size_t words = 0;
  std::vector<char32_t> keys;        // distinct characters, sorted
  std::vector<std::uint64_t> bits;   // keys.size() rows of `words` words
  std::array<std::int16_t, 128> ascii_row{};  // row of an ASCII key, -1 if absent

  /// Mask row for `c`, or nullptr if `c` does not occur.
  const std::uint64_t* row(char32_t c) const noexcept;
};
CharMasks char_masks(std::u32string_view a);

/// Length of the longest common subsequence (bit-parallel). Matching blocks
/// form a common subsequence, so this bounds matched_length from above.
std::size_t lcs_length(const CharMasks& a, std::u32string_view b);
std::size_t lcs_length(std::u32string_view a, std::u32string_view b);

/// 2*|A' ∩ B'| / (|A'| + |B'|) over stop-word-filtered token multisets;
/// 1.0 when both filtered multisets are empty.
SimilarityScore token_overlap(const TokenizedSentence& a, const TokenizedSentence& b,
                              const StopWordList& stopwords);

/// Best ratio between `b` and `a` or any synonym variant of `a`. Never less
/// than ratio(a.normalized(), b.normalized()).
SimilarityScore synonym_ratio(const Sentence& a, const Sentence& b, const SynonymLexicon& lexicon,
                              std::size_t cap = kDefaultVariantCap);

enum class ComparatorKind {
  kTokenOverlap,
  kMatchingBlocksRatio,
  kSynonymRatio,
};

/// Relative cost; lower runs first in a chain.
constexpr int cost_class(ComparatorKind kind) noexcept {
  switch (kind) {
    case ComparatorKind::kTokenOverlap: return 0;
    case ComparatorKind::kMatchingBlocksRatio: return 1;
    case ComparatorKind::kSynonymRatio: return 2;
  }
  return 3;
}

std::string_view to_string(ComparatorKind kind) noexcept;
/// Accepts canonical names and the short forms ratio, overlap, synonym.
std::optional<ComparatorKind> parse_comparator_kind(std::string_view name) noexcept;

struct Comparator {
  ComparatorKind kind = ComparatorKind::kMatchingBlocksRatio;
  SimilarityScore threshold;

  int cost() const noexcept { return cost_class(kind); }
  friend bool operator==(const Comparator&, const Comparator&) = default;
};

/// Non-empty list of comparators in ascending cost order.
class ComparatorChain {
 public:
  /// Throws ConfigError when empty or not sorted by cost class.
  explicit ComparatorChain(std::vector<Comparator> comparators);

  /// Parses "kind:threshold[,kind:threshold...]".
  static ComparatorChain parse(std::string_view spec);

  std::span<const Comparator> comparators() const noexcept { return comparators_; }
  std::size_t size() const noexcept { return comparators_.size(); }
  const Comparator& operator[](std::size_t i) const { return comparators_[i]; }

  bool uses(ComparatorKind kind) const noexcept;
  /// Same chain with comparator `i` given a new threshold.
  ComparatorChain with_threshold(std::size_t i, SimilarityScore threshold) const;

  std::string to_string() const;

  friend bool operator==(const ComparatorChain&, const ComparatorChain&) = default;

 private:
  std::vector<Comparator> comparators_;
};

struct ChainDecision {
  bool accepted = false;
  SimilarityScore score;
  /// Position in the chain of the comparator that produced `score`.
  std::size_t comparator_index = 0;
  ComparatorKind comparator = ComparatorKind::kMatchingBlocksRatio;
};

/// Inputs shared by every comparator of a chain.
struct ScoringContext {
  const StopWordList* stopwords = nullptr;
  const SynonymLexicon* lexicon = nullptr;
  std::size_t cap = kDefaultVariantCap;
  /// Invoked before each comparator evaluation. Test instrumentation.
  std::function<void(const Comparator&)> probe;
  /// Skip exact scoring when an upper bound already falls below the
  /// threshold. Acceptance is unaffected; the score of a rejected decision
  /// becomes a lower bound of the best score.
  bool prune_rejections = false;
};

/// Precomputed per-sentence forms, so a sentence compared against many
/// candidates is decoded, tokenized and expanded once.
struct PreparedSentence {
  std::u32string chars;                 // normalized text
  TokenizedSentence tokens;
  std::u32string joined;                // tokens joined by single spaces
  std::vector<std::u32string> variants; // synonym variants, joined; original excluded
  CharMasks chars_masks;
  CharMasks joined_masks;
};

/// Synonym variants are built only when `lexicon` is non-null.
PreparedSentence prepare(const Sentence& sentence, const SynonymLexicon* lexicon = nullptr,
                         std::size_t cap = kDefaultVariantCap);

SimilarityScore score_with(ComparatorKind kind, const PreparedSentence& a,
                           const PreparedSentence& b, const ScoringContext& context);

/// Runs comparators in chain order and stops at the first one whose score
/// reaches its threshold. If none does, returns the highest score seen.
ChainDecision evaluate_chain(const PreparedSentence& a, const PreparedSentence& b,
                             const ComparatorChain& chain, const ScoringContext& context);
ChainDecision evaluate_chain(const Sentence& a, const Sentence& b, const ComparatorChain& chain,
                             const ScoringContext& context);

}  // namespace sentalign
