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
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sentalign/text_model.hpp"

namespace sentalign {

inline constexpr std::size_t kDefaultVariantCap = 64;

class StopWordList {
 public:
  StopWordList() = default;
  /// Entries are normalized on insertion; blank entries are ignored.
  StopWordList(std::string language, std::span<const std::string> words);

  bool contains(std::string_view token) const;
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::string& language() const noexcept { return language_; }

 private:
  std::string language_;
  std::unordered_set<std::string> words_;
};

/// One word per line, '#' starts a comment line.
StopWordList load_stopwords(std::istream& in, std::string language = {});
StopWordList load_stopwords(const std::filesystem::path& path, std::string language = {});

/// Headword -> synonyms, preserving the order synonyms first appear in the
/// source file. Relations are stored as given (not symmetrized).
class SynonymLexicon {
 public:
  SynonymLexicon() = default;
  explicit SynonymLexicon(std::string language) : language_(std::move(language)) {}

  /// Normalizes both sides, drops self-references and duplicates.
  void add(std::string_view headword, std::span<const std::string> synonyms);

  /// Empty span for unknown words.
  std::span<const std::string> lookup(std::string_view word) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::string& language() const noexcept { return language_; }

 private:
  std::string language_;
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

/// `headword<TAB>syn1,syn2,...` per line. Blank lines and '#' comment lines
/// are skipped. A line without a TAB, or a synonym containing whitespace,
/// throws LineError.
SynonymLexicon load_synonyms(std::istream& in, std::string language = {},
                             const std::string& name = "<stream>");
SynonymLexicon load_synonyms(const std::filesystem::path& path, std::string language = {});

/// The original sentence followed by single-substitution variants, ordered
/// by token position and then by lexicon order; at most `cap` entries.
std::vector<TokenizedSentence> expand_sentence(const TokenizedSentence& sentence,
                                               const SynonymLexicon& lexicon,
                                               std::size_t cap = kDefaultVariantCap);

}  // namespace sentalign
