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
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentalign/text_model.hpp"

namespace sentalign {

struct LanguagePair {
  std::string source;
  std::string target;

  std::string to_string() const { return source + "-" + target; }
  friend auto operator<=>(const LanguagePair&, const LanguagePair&) = default;
};

/// Produces the intermediate translation of single source lines.
///
/// translate() may be called from up to max_concurrency() threads at once.
class TranslationProvider {
 public:
  virtual ~TranslationProvider() = default;

  virtual std::string name() const = 0;
  virtual bool supports(const LanguagePair&) const { return true; }
  virtual std::size_t max_concurrency() const { return 1; }

  /// Called once before any translation; throws to reject the corpus.
  virtual void check_corpus(const Corpus&) const {}

  /// `line_index` is the 0-based position of the line in the source corpus.
  virtual std::string translate(std::size_t line_index, std::string_view line,
                                const LanguagePair& pair) = 0;
};

/// Serves translations from a pre-translated file, one line per source line.
class FileProvider final : public TranslationProvider {
 public:
  explicit FileProvider(const std::filesystem::path& path);
  explicit FileProvider(Corpus translations) : lines_(std::move(translations)) {}

  std::string name() const override { return "file"; }
  /// Throws DataError naming both counts if lengths differ.
  void check_corpus(const Corpus& source) const override;
  std::size_t max_concurrency() const override { return 8; }
  std::string translate(std::size_t line_index, std::string_view line,
                        const LanguagePair& pair) override;

 private:
  Corpus lines_;
};

/// (language pair, source line) -> translation. Reads may run concurrently,
/// writes are serialized.
class TranslationCache {
 public:
  std::optional<std::string> lookup(const LanguagePair& pair, std::string_view line) const;
  void insert(const LanguagePair& pair, std::string line, std::string translation);
  std::size_t size() const;

  /// Loads `source<TAB>translation` records for `pair`. A missing file is
  /// an empty cache. Tabs, newlines and backslashes are backslash-escaped.
  void load(const std::filesystem::path& path, const LanguagePair& pair);
  /// Writes the entries for `pair`, sorted by source line.
  void save(const std::filesystem::path& path, const LanguagePair& pair) const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<LanguagePair, std::map<std::string, std::string, std::less<>>> entries_;
};

struct TranslationStats {
  std::size_t lines = 0;
  std::size_t provider_calls = 0;
  std::size_t cache_hits = 0;
};

/// Translates every line of `corpus`, consulting `cache` first and storing
/// every new result in it. Distinct uncached lines are sent to the provider
/// exactly once, fanned out over at most provider.max_concurrency() threads.
/// The output has the same length and order as the input. A provider
/// failure aborts the whole run with a ProviderError naming the line.
Corpus translate_corpus(const Corpus& corpus, TranslationProvider& provider,
                        TranslationCache& cache, const LanguagePair& pair,
                        TranslationStats* stats = nullptr);

}  // namespace sentalign
