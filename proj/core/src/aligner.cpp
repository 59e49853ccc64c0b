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

#include "sentalign/aligner.hpp"

#include <algorithm>

#include "sentalign/errors.hpp"

namespace sentalign {
namespace {

std::size_t distance(std::size_t a, std::size_t b) noexcept { return a > b ? a - b : b - a; }

bool in_window(std::size_t j, std::size_t expected, std::size_t window) noexcept {
  return window == 0 || distance(j, expected) <= window;
}

// Accepted candidates, best first.
template <typename Pool>
std::vector<Candidate> rank_candidates(std::size_t expected, const Pool& pool, std::size_t window,
                                       const PreparedSentence& trans_line,
                                       std::span<const PreparedSentence> targets,
                                       const ComparatorChain& chain,
                                       const ScoringContext& context) {
  std::vector<Candidate> accepted;
  for (std::size_t j : pool) {
    if (!in_window(j, expected, window)) continue;
    ChainDecision d = evaluate_chain(trans_line, targets[j], chain, context);
    if (d.accepted) accepted.push_back({j, d});
  }
  std::sort(accepted.begin(), accepted.end(), [expected](const Candidate& x, const Candidate& y) {
    if (x.decision.score != y.decision.score) return x.decision.score > y.decision.score;
    const auto dx = distance(x.target_index, expected);
    const auto dy = distance(y.target_index, expected);
    if (dx != dy) return dx < dy;
    return x.target_index < y.target_index;
  });
  return accepted;
}

// Unconsumed target indices inside the window, in ascending order.
class PoolView {
 public:
  PoolView(const std::vector<bool>& consumed, std::size_t lo, std::size_t hi)
      : consumed_(consumed), lo_(lo), hi_(hi) {}

  struct Iterator {
    const std::vector<bool>* consumed;
    std::size_t pos, hi;
    void skip() {
      while (pos < hi && (*consumed)[pos]) ++pos;
    }
    std::size_t operator*() const { return pos; }
    Iterator& operator++() {
      ++pos;
      skip();
      return *this;
    }
    bool operator!=(const Iterator& o) const { return pos != o.pos; }
  };

  Iterator begin() const {
    Iterator it{&consumed_, lo_, hi_};
    it.skip();
    return it;
  }
  Iterator end() const { return Iterator{&consumed_, hi_, hi_}; }

 private:
  const std::vector<bool>& consumed_;
  std::size_t lo_, hi_;
};

}  // namespace

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::kAligned: return "ALIGNED";
    case Outcome::kTranslated: return "TRANSLATED";
    case Outcome::kFilled: return "FILLED";
  }
  return "UNKNOWN";
}

std::optional<Outcome> parse_outcome(std::string_view tag) noexcept {
  if (tag == "ALIGNED") return Outcome::kAligned;
  if (tag == "TRANSLATED") return Outcome::kTranslated;
  if (tag == "FILLED") return Outcome::kFilled;
  return std::nullopt;
}

std::size_t expected_position(std::size_t source_index, std::size_t source_size,
                              std::size_t target_size) noexcept {
  if (source_size == 0) return 0;
  return source_index * target_size / source_size;
}

std::optional<Candidate> select_candidate(std::size_t expected, std::span<const std::size_t> pool,
                                          std::size_t window, const PreparedSentence& trans_line,
                                          std::span<const PreparedSentence> targets,
                                          const ComparatorChain& chain,
                                          const ScoringContext& context) {
  auto ranked = rank_candidates(expected, pool, window, trans_line, targets, chain, context);
  if (ranked.empty()) return std::nullopt;
  return ranked.front();
}

bool lookahead_resolve(std::size_t i, const PreparedSentence& candidate,
                       const ChainDecision& current, std::span<const PreparedSentence> trans,
                       const ComparatorChain& chain, std::size_t depth,
                       const ScoringContext& context) {
  for (std::size_t j = i + 1; j <= i + depth && j < trans.size(); ++j) {
    const ChainDecision rival = evaluate_chain(trans[j], candidate, chain, context);
    if (rival.accepted && rival.score > current.score) return false;
  }
  return true;
}

AlignmentResult align(const Corpus& source, const Corpus& target, const Corpus& trans,
                      const AlignmentConfig& config, const ScoringContext& base_context) {
  if (trans.size() != source.size()) {
    throw DataError("translation has " + std::to_string(trans.size()) +
                    " lines but the source corpus has " + std::to_string(source.size()));
  }
  ScoringContext context = base_context;
  context.cap = config.cap;
  context.prune_rejections = true;
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  const ComparatorChain& chain = config.chain;

  const SynonymLexicon* lexicon =
      chain.uses(ComparatorKind::kSynonymRatio) ? context.lexicon : nullptr;
  std::vector<PreparedSentence> prepared_trans;
  prepared_trans.reserve(n);
  for (const auto& s : trans) prepared_trans.push_back(prepare(s, lexicon, config.cap));
  std::vector<PreparedSentence> prepared_targets;
  prepared_targets.reserve(m);
  for (const auto& s : target) prepared_targets.push_back(prepare(s));

  AlignmentResult result;
  result.decisions.reserve(n);
  std::vector<bool> consumed(m, false);

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t expected = expected_position(i, n, m);
    const std::size_t lo = config.window == 0 || expected < config.window ? 0 : expected - config.window;
    const std::size_t hi = config.window == 0 ? m : std::min(m, expected + config.window + 1);

    const auto ranked = rank_candidates(expected, PoolView(consumed, lo, hi), config.window,
                                        prepared_trans[i], prepared_targets, chain, context);
    // Each deferred candidate is skipped once; the next best is tried.
    std::optional<Candidate> winner;
    for (const Candidate& c : ranked) {
      if (config.lookahead_depth == 0 ||
          lookahead_resolve(i, prepared_targets[c.target_index], c.decision, prepared_trans,
                            chain, config.lookahead_depth, context)) {
        winner = c;
        break;
      }
    }

    AlignmentDecision d;
    d.source_index = i;
    if (winner) {
      consumed[winner->target_index] = true;
      d.outcome = Outcome::kAligned;
      d.target_index = winner->target_index;
      d.score = winner->decision.score;
      d.comparator = winner->decision.comparator;
      d.text = target[winner->target_index].raw();
    } else {
      d.outcome = Outcome::kTranslated;
      d.text = trans[i].raw();
    }
    result.decisions.push_back(std::move(d));
  }

  // With fewer target than source lines, the first n - m unaligned lines
  // are attributed to the length gap.
  std::size_t disproportion_budget = n > m ? n - m : 0;
  for (auto& d : result.decisions) {
    if (d.outcome == Outcome::kAligned) {
      ++result.counts.aligned;
    } else if (disproportion_budget > 0) {
      d.outcome = Outcome::kFilled;
      --disproportion_budget;
      ++result.counts.disproportion;
    } else {
      ++result.counts.translated;
    }
    result.output_pairs.emplace_back(source[d.source_index].raw(), d.text);
  }
  result.counts.lines = result.decisions.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (!consumed[j]) result.unmatched_target_indices.push_back(j);
  }
  return result;
}

}  // namespace sentalign
