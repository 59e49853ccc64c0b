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

#include "sentalign/metrics.hpp"

#include <cmath>
#include <map>
#include <string_view>
#include <unordered_map>

#include "sentalign/errors.hpp"
#include "sentalign/utf8.hpp"

namespace sentalign {

std::int64_t alignment_score(std::int64_t aligned, std::int64_t misaligned,
                             std::int64_t translated, std::int64_t disproportion,
                             std::int64_t lines) {
  if (lines <= 0) throw DataError("alignment score is undefined for L = 0");
  if (aligned < 0 || misaligned < 0 || translated < 0) {
    throw DataError("alignment counts must be non-negative");
  }
  const std::int64_t d = disproportion < 0 ? -disproportion : disproportion;
  const std::int64_t numerator = 20 * (5 * aligned - misaligned + 2 * translated + 5 * d);
  std::int64_t q = numerator / lines;
  if (numerator % lines != 0 && numerator < 0) --q;
  return q;
}

ScoreCard evaluate_against_gold(const AlignmentResult& result, std::span<const std::string> gold) {
  if (gold.size() < result.decisions.size()) {
    throw DataError("gold covers " + std::to_string(gold.size()) + " lines but the alignment has " +
                    std::to_string(result.decisions.size()));
  }
  ScoreCard card;
  for (const auto& d : result.decisions) {
    switch (d.outcome) {
      case Outcome::kAligned:
        if (normalize(d.text) == normalize(gold[d.source_index])) {
          ++card.aligned;
        } else {
          ++card.misaligned;
        }
        break;
      case Outcome::kTranslated: ++card.translated; break;
      case Outcome::kFilled: ++card.disproportion; break;
    }
  }
  card.lines = result.decisions.size();
  card.score = alignment_score(static_cast<std::int64_t>(card.aligned),
                               static_cast<std::int64_t>(card.misaligned),
                               static_cast<std::int64_t>(card.translated),
                               static_cast<std::int64_t>(card.disproportion),
                               static_cast<std::int64_t>(card.lines));
  return card;
}

// --- BLEU -------------------------------------------------------------------

SufficientStats& SufficientStats::operator+=(const SufficientStats& other) {
  if (matches.empty()) {
    matches.assign(other.order(), 0);
    totals.assign(other.order(), 0);
  }
  if (other.order() != order()) throw DataError("cannot add BLEU statistics of different orders");
  for (std::size_t n = 0; n < order(); ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  candidate_length += other.candidate_length;
  reference_length += other.reference_length;
  return *this;
}

namespace {

using NgramCounts = std::map<std::vector<std::string_view>, std::size_t>;

NgramCounts count_ngrams(std::span<const std::string> tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string_view>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                           tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

}  // namespace

SufficientStats bleu_stats(std::span<const std::string> hypothesis,
                           std::span<const std::string> reference, std::size_t order) {
  if (order == 0) throw ConfigError("BLEU order must be at least 1");
  SufficientStats s;
  s.matches.assign(order, 0);
  s.totals.assign(order, 0);
  s.candidate_length = hypothesis.size();
  s.reference_length = reference.size();
  for (std::size_t n = 1; n <= order; ++n) {
    const NgramCounts hyp = count_ngrams(hypothesis, n);
    const NgramCounts ref = count_ngrams(reference, n);
    for (const auto& [gram, count] : hyp) {
      s.totals[n - 1] += count;
      auto it = ref.find(gram);
      if (it != ref.end()) s.matches[n - 1] += std::min(count, it->second);
    }
  }
  return s;
}

SufficientStats bleu_stats(const EvalPair& pair, std::size_t order) {
  return bleu_stats(tokenize(pair.hypothesis).tokens, tokenize(pair.reference).tokens, order);
}

double brevity_penalty(std::size_t candidate_length, std::size_t reference_length,
                       BrevityPenaltyForm form) {
  if (candidate_length == 0) throw DataError("brevity penalty is undefined for c = 0");
  if (candidate_length > reference_length) return 1.0;
  const double c = static_cast<double>(candidate_length);
  const double r = static_cast<double>(reference_length);
  return form == BrevityPenaltyForm::kStandard ? std::exp(1.0 - r / c) : std::exp((1.0 - r) / c);
}

std::vector<double> precisions(const SufficientStats& stats) {
  std::vector<double> p(stats.order(), 0.0);
  for (std::size_t n = 0; n < stats.order(); ++n) {
    if (stats.totals[n] > 0) {
      p[n] = static_cast<double>(stats.matches[n]) / static_cast<double>(stats.totals[n]);
    }
  }
  return p;
}

double bleu(const SufficientStats& stats, const BleuOptions& options) {
  const std::size_t order = stats.order();
  if (order == 0 || stats.candidate_length == 0) throw DataError("BLEU of an empty hypothesis corpus");
  std::vector<double> weights = options.weights;
  if (weights.empty()) weights.assign(order, 1.0 / static_cast<double>(order));
  if (weights.size() != order) throw ConfigError("BLEU needs one weight per n-gram order");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw ConfigError("BLEU weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("BLEU weights must sum to one");
  if (options.smoothing < 0.0) throw ConfigError("BLEU smoothing must be non-negative");

  double log_sum = 0.0;
  for (std::size_t n = 0; n < order; ++n) {
    const double num = static_cast<double>(stats.matches[n]) + options.smoothing;
    const double den = static_cast<double>(stats.totals[n]) + options.smoothing;
    if (num <= 0.0 || den <= 0.0) return 0.0;
    log_sum += weights[n] * std::log(num / den);
  }
  return brevity_penalty(stats.candidate_length, stats.reference_length, options.brevity) *
         std::exp(log_sum);
}

// --- TER --------------------------------------------------------------------

double TerStats::rate() const {
  if (reference_length == 0) throw DataError("TER is undefined for an empty reference");
  return static_cast<double>(edits) / static_cast<double>(reference_length);
}

TerStats& TerStats::operator+=(const TerStats& other) {
  edits += other.edits;
  shifts += other.shifts;
  reference_length += other.reference_length;
  return *this;
}

namespace {

bool occurs_in(std::span<const int> needle, std::span<const int> haystack) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

// Moves cur[start, start+len) so that it begins at `dest` in the result.
std::vector<int> apply_shift(const std::vector<int>& cur, std::size_t start, std::size_t len,
                             std::size_t dest) {
  std::vector<int> rest;
  rest.reserve(cur.size());
  rest.insert(rest.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(start));
  rest.insert(rest.end(), cur.begin() + static_cast<std::ptrdiff_t>(start + len), cur.end());
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(dest),
              cur.begin() + static_cast<std::ptrdiff_t>(start),
              cur.begin() + static_cast<std::ptrdiff_t>(start + len));
  return rest;
}

}  // namespace

TerStats ter_stats(std::span<const std::string> hypothesis, std::span<const std::string> reference,
                   const TerOptions& options) {
  std::unordered_map<std::string_view, int> ids;
  auto intern = [&](std::string_view w) {
    return ids.emplace(w, static_cast<int>(ids.size())).first->second;
  };
  std::vector<int> ref;
  for (const auto& w : reference) ref.push_back(intern(w));
  std::vector<int> cur;
  for (const auto& w : hypothesis) cur.push_back(intern(w));

  auto dist = [&](const std::vector<int>& h) {
    return levenshtein<int>(h, ref);
  };

  TerStats stats;
  stats.reference_length = ref.size();
  std::size_t current = dist(cur);
  while (current > 0) {
    std::size_t best = current;
    std::vector<int> best_seq;
    for (std::size_t start = 0; start < cur.size(); ++start) {
      for (std::size_t len = 1; len <= options.max_shift_length && start + len <= cur.size(); ++len) {
        const std::span<const int> block(cur.data() + start, len);
        if (!occurs_in(block, ref)) break;
        for (std::size_t dest = 0; dest + len <= cur.size(); ++dest) {
          if (dest == start) continue;
          auto shifted = apply_shift(cur, start, len, dest);
          const std::size_t d = dist(shifted);
          if (d < best) {
            best = d;
            best_seq = std::move(shifted);
          }
        }
      }
    }
    // A shift costs one edit, so it must save at least two.
    if (best_seq.empty() || best + 1 >= current) break;
    cur = std::move(best_seq);
    current = best;
    ++stats.shifts;
  }
  stats.edits = current + stats.shifts;
  return stats;
}

double ter(const TokenizedSentence& hypothesis, const TokenizedSentence& reference,
           const TerOptions& options) {
  if (reference.tokens.empty()) throw DataError("TER is undefined for an empty reference");
  return ter_stats(hypothesis.tokens, reference.tokens, options).rate();
}

// --- CER --------------------------------------------------------------------

double CerStats::rate() const {
  if (reference_length == 0) throw DataError("CER is undefined for an empty reference");
  return static_cast<double>(edits) / static_cast<double>(reference_length);
}

CerStats& CerStats::operator+=(const CerStats& other) {
  edits += other.edits;
  reference_length += other.reference_length;
  return *this;
}

CerStats cer_stats(std::string_view hypothesis, std::string_view reference) {
  const std::u32string h = utf8::decode(normalize(hypothesis));
  const std::u32string r = utf8::decode(normalize(reference));
  return CerStats{levenshtein<char32_t>(h, r), r.size()};
}

CerStats cer_stats(const Sentence& hypothesis, const Sentence& reference) {
  return cer_stats(hypothesis.normalized(), reference.normalized());
}

double cer(std::string_view hypothesis, std::string_view reference) {
  return cer_stats(hypothesis, reference).rate();
}

double cer(const Sentence& hypothesis, const Sentence& reference) {
  return cer_stats(hypothesis, reference).rate();
}

// --- corpus -----------------------------------------------------------------

CorpusEvaluation evaluate_corpus(const Corpus& hypotheses, const Corpus& references,
                                 const EvaluationOptions& options) {
  if (hypotheses.size() != references.size()) {
    throw DataError("hypothesis has " + std::to_string(hypotheses.size()) +
                    " lines but reference has " + std::to_string(references.size()));
  }
  if (hypotheses.empty()) throw DataError("cannot evaluate an empty corpus");

  SufficientStats bleu_total;
  TerStats ter_total;
  CerStats cer_total;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    const auto hyp = tokenize(hypotheses[i]);
    const auto ref = tokenize(references[i]);
    bleu_total += bleu_stats(hyp.tokens, ref.tokens, options.order);
    ter_total += ter_stats(hyp.tokens, ref.tokens, options.ter);
    cer_total += cer_stats(hypotheses[i], references[i]);
  }

  CorpusEvaluation out;
  out.bleu = bleu(bleu_total, options.bleu);
  out.ter = ter_total.rate();
  out.cer = cer_total.rate();
  out.candidate_length = bleu_total.candidate_length;
  out.reference_length = bleu_total.reference_length;
  out.precisions = precisions(bleu_total);
  return out;
}

}  // namespace sentalign
