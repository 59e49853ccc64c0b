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

// Seeded generator of parallel test corpora with known gold alignment.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "sentalign/lexicon.hpp"
#include "sentalign/text_model.hpp"

namespace sentalign::synthetic {

struct Options {
  std::size_t lines = 100;
  std::uint64_t seed = 1;
  /// Probability that a target line is removed.
  double drop_rate = 0.0;
  /// Extra unrelated target lines inserted at random positions.
  std::size_t extra_targets = 0;
  /// Target order is shuffled inside consecutive blocks of this many lines
  /// (0 or 1: no shuffle).
  std::size_t shuffle_block = 0;
  /// Probability that a translation word with synonyms is swapped for one.
  double synonym_rate = 0.0;
  std::size_t min_words = 6;
  std::size_t max_words = 12;
};

struct Parallel {
  Corpus source{"xx"};
  Corpus target{"en"};
  Corpus trans{"en"};
  /// gold[i]: target text for source line i, or "" if it was dropped.
  std::vector<std::string> gold;
  /// Target index of source line i, or -1 if it was dropped.
  std::vector<long> gold_index;
  SynonymLexicon lexicon{"en"};
  /// Lexicon in file form (`head\tsyn,...`).
  std::vector<std::string> lexicon_lines;
};

/// Pseudo-English vocabulary; identical for every call.
const std::vector<std::string>& vocabulary();

Parallel generate(const Options& options);

/// Writes source.txt, target.txt, trans.txt, gold.txt and synonyms.tsv into `dir`.
/// Dev set whose score is a step function of a single ratio threshold:
/// each translation shares exactly half its characters with its own target
/// (ratio 0.5) and none with any other line (ratio 0).
Parallel step_dev_set(std::size_t lines, std::size_t block = 4);

void write(const Parallel& corpus, const std::filesystem::path& dir);

}  // namespace sentalign::synthetic
