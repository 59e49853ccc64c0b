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

#include "sentalign/similarity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

#include "sentalign/errors.hpp"
#include "sentalign/utf8.hpp"

namespace sentalign {
namespace {

struct Range {
  std::size_t alo, ahi, blo, bhi;
};

// Longest common block of a[alo, ahi) and b[blo, bhi). Scanning end
// positions in (i, j) order with a strict '>' keeps the earliest block, so
// the scan may stop as soon as no longer block is possible.
MatchingBlock find_longest_match(std::u32string_view a, std::u32string_view b, const Range& r,
                                 std::uint32_t* rows) {
  const std::size_t width = r.bhi - r.blo + 1;
  const std::size_t limit = std::min(r.ahi - r.alo, r.bhi - r.blo);
  std::uint32_t* prev = rows;
  std::uint32_t* cur = rows + width;
  std::fill(prev, prev + width, 0u);
  cur[0] = 0;
  MatchingBlock best{r.alo, r.blo, 0};
  for (std::size_t i = r.alo; i < r.ahi; ++i) {
    const char32_t ca = a[i];
    for (std::size_t j = r.blo; j < r.bhi; ++j) {
      const std::size_t col = j - r.blo + 1;
      if (b[j] == ca) {
        const std::uint32_t k = prev[col - 1] + 1;
        cur[col] = k;
        if (k > best.length) {
          best = {i + 1 - k, j + 1 - k, k};
          if (k == limit) return best;
        }
      } else {
        cur[col] = 0;
      }
    }
    std::swap(prev, cur);
  }
  return best;
}

template <typename Visit>
void decompose(std::u32string_view a, std::u32string_view b, Visit&& visit) {
  constexpr std::size_t kSmall = 64;
  std::uint32_t small_rows[2 * (kSmall + 1)];
  Range small_stack[kSmall + 1];
  std::vector<std::uint32_t> big_rows;
  std::vector<Range> big_stack;
  std::uint32_t* rows = small_rows;
  if (b.size() > kSmall) {
    big_rows.resize(2 * (b.size() + 1));
    rows = big_rows.data();
  }
  // Each pushed range holds at least one unmatched position of a, so the
  // stack never exceeds |a| + 1 entries.
  Range* stack = small_stack;
  if (a.size() > kSmall) {
    big_stack.resize(a.size() + 1);
    stack = big_stack.data();
  }
  std::size_t top = 0;
  stack[top++] = {0, a.size(), 0, b.size()};
  while (top > 0) {
    const Range r = stack[--top];
    if (r.alo >= r.ahi || r.blo >= r.bhi) continue;
    const MatchingBlock m = find_longest_match(a, b, r, rows);
    if (m.length == 0) continue;
    visit(m);
    stack[top++] = {m.a_start + m.length, r.ahi, m.b_start + m.length, r.bhi};
    stack[top++] = {r.alo, m.a_start, r.blo, m.b_start};
  }
}

SimilarityScore ratio_from(std::size_t matched, std::size_t total) {
  if (total == 0) return SimilarityScore(1.0);
  return SimilarityScore(2.0 * static_cast<double>(matched) / static_cast<double>(total));
}

}  // namespace

SimilarityScore::SimilarityScore(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ConfigError("similarity score out of [0,1]: " + std::to_string(value));
  }
}

std::vector<MatchingBlock> matching_blocks(std::u32string_view a, std::u32string_view b) {
  std::vector<MatchingBlock> blocks;
  decompose(a, b, [&](const MatchingBlock& m) { blocks.push_back(m); });
  std::sort(blocks.begin(), blocks.end(),
            [](const MatchingBlock& x, const MatchingBlock& y) { return x.a_start < y.a_start; });
  return blocks;
}

std::vector<MatchingBlock> matching_blocks(std::string_view a, std::string_view b) {
  return matching_blocks(utf8::decode(a), utf8::decode(b));
}

std::size_t matched_length(std::u32string_view a, std::u32string_view b) {
  std::size_t total = 0;
  decompose(a, b, [&](const MatchingBlock& m) { total += m.length; });
  return total;
}

SimilarityScore ratio(std::u32string_view a, std::u32string_view b) {
  return ratio_from(matched_length(a, b), a.size() + b.size());
}

SimilarityScore ratio(std::string_view a, std::string_view b) {
  return ratio(utf8::decode(a), utf8::decode(b));
}

CharMasks char_masks(std::u32string_view a) {
  CharMasks m;
  m.length = a.size();
  m.words = (a.size() + 63) / 64;
  m.keys.assign(a.begin(), a.end());
  std::sort(m.keys.begin(), m.keys.end());
  m.keys.erase(std::unique(m.keys.begin(), m.keys.end()), m.keys.end());
  m.bits.assign(m.keys.size() * m.words, 0);
  m.ascii_row.fill(-1);
  for (std::size_t k = 0; k < m.keys.size() && m.keys[k] < 128; ++k) {
    m.ascii_row[m.keys[k]] = static_cast<std::int16_t>(k);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto k = static_cast<std::size_t>(
        std::lower_bound(m.keys.begin(), m.keys.end(), a[i]) - m.keys.begin());
    m.bits[k * m.words + i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return m;
}

const std::uint64_t* CharMasks::row(char32_t c) const noexcept {
  std::size_t k;
  if (c < 128) {
    if (ascii_row[c] < 0) return nullptr;
    k = static_cast<std::size_t>(ascii_row[c]);
  } else {
    auto it = std::lower_bound(keys.begin(), keys.end(), c);
    if (it == keys.end() || *it != c) return nullptr;
    k = static_cast<std::size_t>(it - keys.begin());
  }
  return bits.data() + k * words;
}

// Bit-parallel LCS: V starts all ones; for each character c of b with match
// mask P, V = (V + (V & P)) | (V & ~P). Zero bits of V count the LCS.
std::size_t lcs_length(const CharMasks& a, std::u32string_view b) {
  if (a.length == 0 || b.empty()) return 0;
  if (a.words == 1) {
    std::uint64_t v = ~std::uint64_t{0};
    for (char32_t c : b) {
      if (const std::uint64_t* p = a.row(c)) {
        const std::uint64_t u = v & *p;
        v = (v + u) | (v - u);
      }
    }
    const std::uint64_t mask = a.length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.length) - 1;
    return a.length - static_cast<std::size_t>(__builtin_popcountll(v & mask));
  }
  constexpr std::size_t kInline = 4;
  std::uint64_t inline_v[kInline];
  std::vector<std::uint64_t> heap_v;
  std::uint64_t* v = inline_v;
  if (a.words > kInline) {
    heap_v.resize(a.words);
    v = heap_v.data();
  }
  std::fill(v, v + a.words, ~std::uint64_t{0});
  for (char32_t c : b) {
    const std::uint64_t* p = a.row(c);
    if (!p) continue;
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < a.words; ++w) {
      const std::uint64_t u = v[w] & p[w];
      const std::uint64_t sum = v[w] + u;
      const std::uint64_t with_carry = sum + carry;
      carry = (sum < v[w] || with_carry < sum) ? 1 : 0;
      v[w] = with_carry | (v[w] & ~p[w]);
    }
  }
  std::size_t ones = 0;
  for (std::size_t w = 0; w < a.words; ++w) {
    std::uint64_t word = v[w];
    if (w + 1 == a.words && a.length % 64 != 0) word &= (std::uint64_t{1} << (a.length % 64)) - 1;
    ones += static_cast<std::size_t>(__builtin_popcountll(word));
  }
  return a.length - ones;
}

std::size_t lcs_length(std::u32string_view a, std::u32string_view b) {
  return lcs_length(char_masks(a), b);
}

SimilarityScore token_overlap(const TokenizedSentence& a, const TokenizedSentence& b,
                              const StopWordList& stopwords) {
  std::map<std::string_view, std::ptrdiff_t> counts;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  for (const auto& t : a.tokens) {
    if (stopwords.contains(t)) continue;
    ++counts[t];
    ++size_a;
  }
  std::size_t common = 0;
  for (const auto& t : b.tokens) {
    if (stopwords.contains(t)) continue;
    ++size_b;
    auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++common;
    }
  }
  return ratio_from(common, size_a + size_b);
}

PreparedSentence prepare(const Sentence& sentence, const SynonymLexicon* lexicon,
                         std::size_t cap) {
  PreparedSentence p;
  p.chars = utf8::decode(sentence.normalized());
  p.tokens = tokenize(sentence);
  p.joined = utf8::decode(join_tokens(p.tokens.tokens));
  p.chars_masks = char_masks(p.chars);
  p.joined_masks = char_masks(p.joined);
  if (lexicon != nullptr) {
    auto variants = expand_sentence(p.tokens, *lexicon, cap);
    for (std::size_t v = 1; v < variants.size(); ++v) {
      p.variants.push_back(utf8::decode(join_tokens(variants[v].tokens)));
    }
  }
  return p;
}

namespace {

SimilarityScore synonym_ratio_prepared(const PreparedSentence& a, const PreparedSentence& b) {
  SimilarityScore best = ratio(a.chars, b.chars);
  for (const auto& v : a.variants) {
    if (best.value() >= 1.0) break;
    best = std::max(best, ratio(v, b.joined));
  }
  return best;
}

}  // namespace

SimilarityScore synonym_ratio(const Sentence& a, const Sentence& b, const SynonymLexicon& lexicon,
                              std::size_t cap) {
  return synonym_ratio_prepared(prepare(a, &lexicon, cap), prepare(b));
}

std::string_view to_string(ComparatorKind kind) noexcept {
  switch (kind) {
    case ComparatorKind::kTokenOverlap: return "token_overlap";
    case ComparatorKind::kMatchingBlocksRatio: return "matching_blocks_ratio";
    case ComparatorKind::kSynonymRatio: return "synonym_ratio";
  }
  return "unknown";
}

std::optional<ComparatorKind> parse_comparator_kind(std::string_view name) noexcept {
  if (name == "token_overlap" || name == "overlap") return ComparatorKind::kTokenOverlap;
  if (name == "matching_blocks_ratio" || name == "ratio") return ComparatorKind::kMatchingBlocksRatio;
  if (name == "synonym_ratio" || name == "synonym") return ComparatorKind::kSynonymRatio;
  return std::nullopt;
}

ComparatorChain::ComparatorChain(std::vector<Comparator> comparators)
    : comparators_(std::move(comparators)) {
  if (comparators_.empty()) throw ConfigError("comparator chain is empty");
  for (std::size_t i = 1; i < comparators_.size(); ++i) {
    if (comparators_[i].cost() < comparators_[i - 1].cost()) {
      throw ConfigError("comparator chain must be ordered by cost: " +
                        std::string(sentalign::to_string(comparators_[i].kind)) + " after " +
                        std::string(sentalign::to_string(comparators_[i - 1].kind)));
    }
  }
}

namespace {

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ComparatorChain ComparatorChain::parse(std::string_view spec) {
  std::vector<Comparator> out;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    std::string_view item = trim(spec.substr(0, comma));
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("chain item '" + std::string(item) + "' must be kind:threshold");
    }
    const std::string_view name = trim(item.substr(0, colon));
    auto kind = parse_comparator_kind(name);
    if (!kind) throw ConfigError("unknown comparator kind '" + std::string(name) + "'");
    std::string_view num = trim(item.substr(colon + 1));
    double threshold = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), threshold);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
      throw ConfigError("bad threshold '" + std::string(num) + "'");
    }
    out.push_back({*kind, SimilarityScore(threshold)});
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return ComparatorChain(std::move(out));
}

bool ComparatorChain::uses(ComparatorKind kind) const noexcept {
  return std::any_of(comparators_.begin(), comparators_.end(),
                     [kind](const Comparator& c) { return c.kind == kind; });
}

ComparatorChain ComparatorChain::with_threshold(std::size_t i, SimilarityScore threshold) const {
  auto copy = comparators_;
  copy.at(i).threshold = threshold;
  return ComparatorChain(std::move(copy));
}

std::string ComparatorChain::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < comparators_.size(); ++i) {
    if (i) out << ',';
    out << sentalign::to_string(comparators_[i].kind) << ':' << comparators_[i].threshold.value();
  }
  return out.str();
}

SimilarityScore score_with(ComparatorKind kind, const PreparedSentence& a,
                           const PreparedSentence& b, const ScoringContext& context) {
  switch (kind) {
    case ComparatorKind::kTokenOverlap: {
      static const StopWordList kNone;
      return token_overlap(a.tokens, b.tokens, context.stopwords ? *context.stopwords : kNone);
    }
    case ComparatorKind::kMatchingBlocksRatio:
      return ratio(a.chars, b.chars);
    case ComparatorKind::kSynonymRatio:
      return synonym_ratio_prepared(a, b);
  }
  return SimilarityScore();
}

namespace {

// Upper bound 2 * lcs / (|x| + |y|) on ratio(x, y).
double ratio_bound(const CharMasks& y_masks, std::u32string_view x) {
  const std::size_t total = x.size() + y_masks.length;
  if (total == 0) return 1.0;
  return 2.0 * static_cast<double>(lcs_length(y_masks, x)) / static_cast<double>(total);
}

// ratio(a.chars, b.chars), shared by the comparators of one chain run.
struct PlainRatio {
  std::optional<double> bound;
  std::optional<SimilarityScore> exact;
};

// Comparator score, or nullopt when the bound shows it cannot reach the
// threshold.
std::optional<SimilarityScore> pruned_score(const Comparator& c, const PreparedSentence& a,
                                            const PreparedSentence& b,
                                            const ScoringContext& context, PlainRatio& plain) {
  const double t = c.threshold.value();
  auto plain_ratio = [&]() -> std::optional<SimilarityScore> {
    if (plain.exact) return plain.exact;
    if (!plain.bound) plain.bound = ratio_bound(b.chars_masks, a.chars);
    if (*plain.bound < t) return std::nullopt;
    plain.exact = ratio(a.chars, b.chars);
    return plain.exact;
  };
  switch (c.kind) {
    case ComparatorKind::kTokenOverlap:
      return score_with(c.kind, a, b, context);
    case ComparatorKind::kMatchingBlocksRatio:
      return plain_ratio();
    case ComparatorKind::kSynonymRatio: {
      std::optional<SimilarityScore> best = plain_ratio();
      for (const auto& v : a.variants) {
        if (best && best->value() >= 1.0) break;
        if (ratio_bound(b.joined_masks, v) < t) continue;
        const SimilarityScore s = ratio(v, b.joined);
        if (!best || s > *best) best = s;
      }
      return best;
    }
  }
  return std::nullopt;
}

}  // namespace

ChainDecision evaluate_chain(const PreparedSentence& a, const PreparedSentence& b,
                             const ComparatorChain& chain, const ScoringContext& context) {
  ChainDecision best;
  bool have_best = false;
  PlainRatio plain;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Comparator& c = chain[i];
    if (context.probe) context.probe(c);
    std::optional<SimilarityScore> s;
    if (context.prune_rejections) {
      s = pruned_score(c, a, b, context, plain);
      if (!s) continue;
    } else {
      s = score_with(c.kind, a, b, context);
    }
    if (*s >= c.threshold) return ChainDecision{true, *s, i, c.kind};
    if (!have_best || *s > best.score) {
      best = ChainDecision{false, *s, i, c.kind};
      have_best = true;
    }
  }
  return best;
}

ChainDecision evaluate_chain(const Sentence& a, const Sentence& b, const ComparatorChain& chain,
                             const ScoringContext& context) {
  const SynonymLexicon* lexicon =
      chain.uses(ComparatorKind::kSynonymRatio) ? context.lexicon : nullptr;
  return evaluate_chain(prepare(a, lexicon, context.cap), prepare(b), chain, context);
}

}  // namespace sentalign
