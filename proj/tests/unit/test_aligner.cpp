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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "sentalign/aligner.hpp"
#include "sentalign/errors.hpp"
#include "synthetic.hpp"

namespace sentalign {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = SENTALIGN_FIXTURES;

Corpus corpus(std::vector<std::string> lines, std::string lang = "en") {
  return Corpus::from_lines(std::move(lang), lines);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

AlignmentConfig exact_match_config() {
  AlignmentConfig c;
  c.chain = ComparatorChain::parse("matching_blocks_ratio:1.0");
  return c;
}

TEST(Align, IdentityCorpus) {
  const Corpus c = corpus({"One fish.", "Two fish.", "Red fish.", "Blue fish."});
  const auto r = align(c, c, c, exact_match_config());
  EXPECT_EQ(r.counts, (AlignmentCounts{4, 0, 0, 4}));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(r.decisions[i].outcome, Outcome::kAligned);
    EXPECT_EQ(r.decisions[i].target_index, std::optional<std::size_t>(i));
  }
  EXPECT_TRUE(r.unmatched_target_indices.empty());
}

TEST(Align, LookaheadTableScenario) {
  const Corpus source = load_corpus(kFixtures / "table1" / "source.txt", "pl");
  const Corpus target = load_corpus(kFixtures / "table1" / "target.txt", "en");
  const Corpus trans = load_corpus(kFixtures / "table1" / "trans.txt", "en");
  AlignmentConfig config;
  config.chain = ComparatorChain::parse("matching_blocks_ratio:0.8");
  const auto r = align(source, target, trans, config);
  ASSERT_EQ(r.decisions.size(), 2u);
  EXPECT_EQ(r.decisions[0].outcome, Outcome::kAligned);
  EXPECT_EQ(r.decisions[0].text, "I like going to school every day.");
  EXPECT_EQ(r.decisions[1].outcome, Outcome::kAligned);
  EXPECT_EQ(r.decisions[1].text, "I do not go to school every day.");

  // Without lookahead the first line grabs the contested sentence.
  config.lookahead_depth = 0;
  const auto greedy = align(source, target, trans, config);
  EXPECT_EQ(greedy.decisions[0].text, "I do not go to school every day.");
}

TEST(Align, DisproportionFills) {
  const Corpus source = corpus({"s0", "s1", "s2", "s3", "s4"}, "xx");
  const Corpus trans = corpus({"alpha beta", "gamma delta", "epsilon zeta", "eta theta", "iota kappa"});
  const Corpus target = corpus({"alpha beta", "epsilon zeta", "iota kappa"});
  const auto r = align(source, target, trans, exact_match_config());
  EXPECT_EQ(r.counts, (AlignmentCounts{3, 0, 2, 5}));
  EXPECT_EQ(r.decisions[1].outcome, Outcome::kFilled);
  EXPECT_EQ(r.decisions[1].text, "gamma delta");
  EXPECT_EQ(r.decisions[3].outcome, Outcome::kFilled);
}

TEST(Align, UnmatchedLinesBeyondTheGapAreTranslated) {
  const Corpus source = corpus({"s0", "s1", "s2"}, "xx");
  const Corpus trans = corpus({"alpha beta", "gamma delta", "epsilon zeta"});
  const Corpus target = corpus({"alpha beta", "something else"});
  const auto r = align(source, target, trans, exact_match_config());
  EXPECT_EQ(r.counts, (AlignmentCounts{1, 1, 1, 3}));
  EXPECT_EQ(r.decisions[1].outcome, Outcome::kFilled);
  EXPECT_EQ(r.decisions[2].outcome, Outcome::kTranslated);
  EXPECT_EQ(r.unmatched_target_indices, std::vector<std::size_t>{1});
}

TEST(Align, LongerTargetGivesNoFills) {
  const Corpus source = corpus({"s0", "s1"}, "xx");
  const Corpus trans = corpus({"alpha beta", "unmatched"});
  const Corpus target = corpus({"alpha beta", "x", "y", "z"});
  const auto r = align(source, target, trans, exact_match_config());
  EXPECT_EQ(r.counts, (AlignmentCounts{1, 1, 0, 2}));
}

TEST(Align, EmptySourceIsEmptyResult) {
  const auto r = align(corpus({}), corpus({"x"}), corpus({}), exact_match_config());
  EXPECT_TRUE(r.decisions.empty());
  EXPECT_EQ(r.counts, (AlignmentCounts{0, 0, 0, 0}));
}

TEST(Align, TranslationLengthMismatch) {
  EXPECT_THROW(align(corpus({"a", "b"}), corpus({"a"}), corpus({"a"}), exact_match_config()),
               DataError);
}

TEST(Align, WindowLimitsCandidates) {
  // The only match for line 0 sits 5 positions away.
  std::vector<std::string> lines;
  for (int i = 0; i < 10; ++i) lines.push_back("sentence number " + std::to_string(i * 37));
  std::vector<std::string> target = lines;
  std::swap(target[0], target[5]);
  AlignmentConfig config = exact_match_config();
  config.window = 2;
  const auto narrow = align(corpus(lines), corpus(target), corpus(lines), config);
  EXPECT_NE(narrow.decisions[0].outcome, Outcome::kAligned);
  config.window = 5;
  const auto wide = align(corpus(lines), corpus(target), corpus(lines), config);
  EXPECT_EQ(wide.counts.aligned, 10u);
  config.window = 0;
  EXPECT_EQ(align(corpus(lines), corpus(target), corpus(lines), config).counts.aligned, 10u);
}

TEST(SelectCandidate, ExactCopyAndEmptyPool) {
  const auto chain = ComparatorChain::parse("ratio:0.5");
  std::vector<PreparedSentence> targets;
  for (const char* t : {"completely different", "the exact line", "another one"}) {
    targets.push_back(prepare(Sentence(0, t)));
  }
  const auto trans = prepare(Sentence(0, "The exact line"));
  const std::vector<std::size_t> pool = {0, 1, 2};
  const auto pick = select_candidate(1, pool, 0, trans, targets, chain, {});
  ASSERT_TRUE(pick);
  EXPECT_EQ(pick->target_index, 1u);
  EXPECT_EQ(pick->decision.score.value(), 1.0);

  EXPECT_FALSE(select_candidate(1, std::span<const std::size_t>{}, 0, trans, targets, chain, {}));
}

TEST(SelectCandidate, TieGoesToNearestThenSmallestIndex) {
  std::vector<PreparedSentence> targets;
  for (int i = 0; i < 12; ++i) {
    targets.push_back(prepare(Sentence(0, i == 4 || i == 9 || i == 1 ? "match" : "zzz")));
  }
  const auto trans = prepare(Sentence(0, "match"));
  const auto chain = ComparatorChain::parse("ratio:0.9");
  const std::vector<std::size_t> pool = {4, 9};
  EXPECT_EQ(select_candidate(5, pool, 0, trans, targets, chain, {})->target_index, 4u);
  // Equal distance (1 and 9 around 5): the smaller index wins.
  const std::vector<std::size_t> pool2 = {9, 1};
  EXPECT_EQ(select_candidate(5, pool2, 0, trans, targets, chain, {})->target_index, 1u);
}

TEST(LookaheadResolve, DefersToStrictlyBetterNextLine) {
  const auto chain = ComparatorChain::parse("ratio:0.8");
  const std::vector<PreparedSentence> trans = {
      prepare(Sentence(0, "I go to school every day.")),
      prepare(Sentence(1, "I don't go to school every day."))};
  const auto candidate = prepare(Sentence(0, "I do not go to school every day."));
  const auto current = evaluate_chain(trans[0], candidate, chain, {});
  ASSERT_TRUE(current.accepted);
  EXPECT_FALSE(lookahead_resolve(0, candidate, current, trans, chain, 1, {}));
  EXPECT_TRUE(lookahead_resolve(0, candidate, current, trans, chain, 0, {}));
  // The last line has no successor.
  const auto last = evaluate_chain(trans[1], candidate, chain, {});
  EXPECT_TRUE(lookahead_resolve(1, candidate, last, trans, chain, 3, {}));
}

TEST(LookaheadResolve, EqualScoreKeeps) {
  const auto chain = ComparatorChain::parse("ratio:0.5");
  const std::vector<PreparedSentence> trans = {prepare(Sentence(0, "same text here")),
                                               prepare(Sentence(1, "same text here"))};
  const auto candidate = prepare(Sentence(0, "same text there"));
  const auto current = evaluate_chain(trans[0], candidate, chain, {});
  EXPECT_TRUE(lookahead_resolve(0, candidate, current, trans, chain, 1, {}));
}

TEST(LookaheadResolve, RivalMustBeAccepted) {
  // The rival scores higher but below its threshold, so it cannot claim it.
  const auto chain = ComparatorChain::parse("ratio:0.0");
  const auto strict = ComparatorChain::parse("ratio:0.99");
  const std::vector<PreparedSentence> trans = {prepare(Sentence(0, "abc")),
                                               prepare(Sentence(1, "abcdef"))};
  const auto candidate = prepare(Sentence(0, "abcdefg"));
  ChainDecision current{true, SimilarityScore(0.5), 0, ComparatorKind::kMatchingBlocksRatio};
  EXPECT_FALSE(lookahead_resolve(0, candidate, current, trans, chain, 1, {}));
  EXPECT_TRUE(lookahead_resolve(0, candidate, current, trans, strict, 1, {}));
}

TEST(ExpectedPosition, Scales) {
  EXPECT_EQ(expected_position(0, 10, 20), 0u);
  EXPECT_EQ(expected_position(5, 10, 20), 10u);
  EXPECT_EQ(expected_position(9, 10, 5), 4u);
  EXPECT_EQ(expected_position(3, 0, 5), 0u);
}

TEST(Properties, ZeroLossOneToOneDeterministic) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    synthetic::Options o;
    o.seed = seed;
    o.lines = 1 + (seed * 7) % 60;
    o.drop_rate = 0.1;
    o.extra_targets = seed % 4;
    o.shuffle_block = 1 + seed % 6;
    o.synonym_rate = 0.2;
    const auto p = synthetic::generate(o);
    ScoringContext ctx;
    ctx.lexicon = &p.lexicon;
    const AlignmentConfig config;
    const auto r = align(p.source, p.target, p.trans, config, ctx);
    ASSERT_EQ(r.decisions.size(), p.source.size());
    ASSERT_EQ(r.output_pairs.size(), p.source.size());
    std::set<std::size_t> used;
    for (const auto& d : r.decisions) {
      if (d.outcome == Outcome::kAligned) EXPECT_TRUE(used.insert(*d.target_index).second);
    }
    EXPECT_EQ(r.counts.aligned + r.counts.translated + r.counts.disproportion, r.counts.lines);

    std::ostringstream first, second;
    write_report(r, first);
    write_report(align(p.source, p.target, p.trans, config, ctx), second);
    EXPECT_EQ(first.str(), second.str());
  }
}

TEST(Properties, PermutationRecovery) {
  synthetic::Options o;
  o.lines = 120;
  o.seed = 77;
  o.shuffle_block = 10;
  const auto p = synthetic::generate(o);
  AlignmentConfig config = exact_match_config();
  config.window = 20;
  const auto r = align(p.source, p.target, p.trans, config);
  EXPECT_EQ(r.counts.aligned, 120u);
  for (std::size_t i = 0; i < 120; ++i) {
    EXPECT_EQ(static_cast<long>(*r.decisions[i].target_index), p.gold_index[i]);
  }
}

TEST(WriteAlignment, FilesAndReport) {
  const fs::path dir = fs::temp_directory_path() / "sentalign_write";
  fs::create_directories(dir);
  const Corpus source = corpus({"s0", "s1", "s2"}, "xx");
  const Corpus trans = corpus({"alpha beta", "gamma delta", "epsilon zeta"});
  const Corpus target = corpus({"epsilon zeta", "alpha beta", "other"});
  const auto r = align(source, target, trans, exact_match_config());
  write_alignment(r, dir / "out.src", dir / "out.tgt", dir / "report.jsonl");
  EXPECT_EQ(slurp(dir / "out.src"), "s0\ns1\ns2\n");
  EXPECT_EQ(slurp(dir / "out.tgt"), "alpha beta\ngamma delta\nepsilon zeta\n");

  const auto back = read_report(dir / "report.jsonl");
  ASSERT_EQ(back.decisions.size(), 3u);
  EXPECT_EQ(back.decisions[1].outcome, Outcome::kTranslated);
  EXPECT_EQ(back.decisions[1].text, "gamma delta");
  EXPECT_EQ(back.decisions[2].target_index, std::optional<std::size_t>(0));
  EXPECT_EQ(back.counts, r.counts);

  const std::string report = slurp(dir / "report.jsonl");
  EXPECT_NE(report.find("\"outcome\":\"TRANSLATED\""), std::string::npos) << report;
  fs::remove_all(dir);
}

TEST(WriteAlignment, EmptyResult) {
  const fs::path dir = fs::temp_directory_path() / "sentalign_write_empty";
  fs::create_directories(dir);
  write_alignment(AlignmentResult{}, dir / "a", dir / "b", dir / "r.jsonl");
  EXPECT_EQ(slurp(dir / "a"), "");
  EXPECT_EQ(slurp(dir / "b"), "");
  const auto back = read_report(dir / "r.jsonl");
  EXPECT_EQ(back.counts, (AlignmentCounts{0, 0, 0, 0}));
  fs::remove_all(dir);
}

TEST(ReadReport, RejectsInconsistentInput) {
  std::istringstream bad_outcome(
      "{\"source_index\":0,\"outcome\":\"LOST\",\"text\":\"x\"}\n"
      "{\"A\":0,\"T\":0,\"D\":0,\"L\":1,\"unmatched_targets\":[]}\n");
  EXPECT_THROW(read_report(bad_outcome), DataError);
  std::istringstream bad_counts(
      "{\"source_index\":0,\"outcome\":\"TRANSLATED\",\"text\":\"x\"}\n"
      "{\"A\":1,\"T\":0,\"D\":0,\"L\":1,\"unmatched_targets\":[]}\n");
  EXPECT_THROW(read_report(bad_counts), DataError);
  std::istringstream not_json("nope\n");
  EXPECT_THROW(read_report(not_json), DataError);
}

}  // namespace
}  // namespace sentalign
