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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sentalign {

/// Lowercases, applies NFC composition, collapses interior whitespace runs to
/// a single space and strips leading/trailing whitespace. Idempotent.
std::string normalize(std::string_view text);

/// One line of a corpus.
class Sentence {
 public:
  /// Throws DataError if `raw` contains a line break or invalid UTF-8.
  Sentence(std::size_t index, std::string raw);

  std::size_t index() const noexcept { return index_; }
  const std::string& raw() const noexcept { return raw_; }
  const std::string& normalized() const noexcept { return normalized_; }

  friend bool operator==(const Sentence&, const Sentence&) = default;

 private:
  std::size_t index_;
  std::string raw_;
  std::string normalized_;
};

struct TokenizedSentence {
  std::vector<std::string> tokens;
  std::size_t source_index = 0;

  friend bool operator==(const TokenizedSentence&, const TokenizedSentence&) = default;
};

/// Splits already-normalized text into maximal runs of letters, digits,
/// combining marks and apostrophes. Leading and trailing apostrophes of a
/// run are treated as quotes and dropped; apostrophes inside a word
/// ("don't") are kept.
std::vector<std::string> tokenize_text(std::string_view normalized);

TokenizedSentence tokenize(const Sentence& sentence);

/// Joins tokens with single spaces.
std::string join_tokens(std::span<const std::string> tokens);

/// 1-based numbers of input lines that were empty and therefore not loaded.
struct SkipReport {
  std::vector<std::size_t> empty_lines;
};

/// Ordered, contiguously indexed list of sentences in one language.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::string language) : language_(std::move(language)) {}

  /// Builds a corpus from in-memory lines; every line becomes a sentence.
  static Corpus from_lines(std::string language, std::span<const std::string> lines);

  const std::string& language() const noexcept { return language_; }
  std::span<const Sentence> sentences() const noexcept { return sentences_; }
  std::size_t size() const noexcept { return sentences_.size(); }
  bool empty() const noexcept { return sentences_.empty(); }
  const Sentence& operator[](std::size_t i) const { return sentences_[i]; }
  const Sentence& at(std::size_t i) const { return sentences_.at(i); }

  void push_back(std::string raw);

  auto begin() const noexcept { return sentences_.begin(); }
  auto end() const noexcept { return sentences_.end(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::string language_;
  std::vector<Sentence> sentences_;
};

/// Reads one sentence per non-empty line. LF and CRLF are accepted; a
/// leading UTF-8 byte-order mark is dropped. Empty lines are skipped and
/// listed in `skipped`. Invalid UTF-8 throws LineError.
Corpus load_corpus(std::istream& in, std::string language,
                   SkipReport* skipped = nullptr, const std::string& name = "<stream>");
Corpus load_corpus(const std::filesystem::path& path, std::string language,
                   SkipReport* skipped = nullptr);

/// Writes each raw sentence followed by LF.
void save_corpus(const Corpus& corpus, std::ostream& out);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

/// Reads every line including empty ones (CR stripped). Used for gold
/// files, where an empty line means "no expected target".
std::vector<std::string> read_lines(const std::filesystem::path& path);

void write_lines(std::span<const std::string> lines, const std::filesystem::path& path);

}  // namespace sentalign
