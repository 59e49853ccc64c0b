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

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "sentalign/errors.hpp"
#include "sentalign/translator.hpp"

namespace sentalign {
namespace {

const LanguagePair kPair{"pl", "en"};

Corpus corpus(std::vector<std::string> lines, std::string lang = "pl") {
  return Corpus::from_lines(std::move(lang), lines);
}

// Upper-cases its input and records how it was called.
class CountingProvider : public TranslationProvider {
 public:
  explicit CountingProvider(std::size_t concurrency = 1,
                            std::chrono::milliseconds delay = std::chrono::milliseconds(0))
      : concurrency_(concurrency), delay_(delay) {}
  std::string name() const override { return "counting"; }
  std::size_t max_concurrency() const override { return concurrency_; }
  std::string translate(std::size_t line_index, std::string_view line, const LanguagePair&) override {
    const int now = ++in_flight_;
    for (int peak = peak_.load(); now > peak && !peak_.compare_exchange_weak(peak, now);) {
    }
    ++calls_;
    if (delay_.count() > 0) std::this_thread::sleep_for(delay_);
    --in_flight_;
    if (fail_at_ && line_index >= *fail_at_) {
      throw ProviderError(ProviderError::Kind::kHttpStatus, "HTTP status 500", std::nullopt, 500);
    }
    std::string out(line);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
  }
  int calls() const { return calls_; }
  int peak() const { return peak_; }
  std::optional<std::size_t> fail_at_;

 private:
  std::size_t concurrency_;
  std::chrono::milliseconds delay_;
  std::atomic<int> calls_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> peak_{0};
};

std::vector<std::string> raw_lines(const Corpus& c) {
  std::vector<std::string> out;
  for (const auto& s : c) out.push_back(s.raw());
  return out;
}

TEST(FileProvider, PassThrough) {
  FileProvider provider(corpus({"one", "two", "three"}, "en"));
  TranslationCache cache;
  const Corpus out = translate_corpus(corpus({"jeden", "dwa", "trzy"}), provider, cache, kPair);
  EXPECT_EQ(raw_lines(out), (std::vector<std::string>{"one", "two", "three"}));
  EXPECT_EQ(out.language(), "en");
}

TEST(FileProvider, LengthMismatchNamesBothCounts) {
  FileProvider provider(corpus({"one", "two"}, "en"));
  TranslationCache cache;
  try {
    translate_corpus(corpus({"jeden", "dwa", "trzy"}), provider, cache, kPair);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find('2'), std::string::npos) << what;
    EXPECT_NE(what.find('3'), std::string::npos) << what;
  }
  EXPECT_EQ(cache.size(), 0u);
}

TEST(FileProvider, FromFile) {
  const auto path = std::filesystem::temp_directory_path() / "sentalign_provider.txt";
  std::ofstream(path) << "alpha\nbeta\n";
  FileProvider provider(path);
  TranslationCache cache;
  EXPECT_EQ(raw_lines(translate_corpus(corpus({"a", "b"}), provider, cache, kPair)),
            (std::vector<std::string>{"alpha", "beta"}));
  std::filesystem::remove(path);
}

TEST(TranslateCorpus, RepeatedLineTranslatedOnce) {
  CountingProvider provider;
  TranslationCache cache;
  TranslationStats stats;
  const Corpus out = translate_corpus(corpus({"same", "other", "same"}), provider, cache, kPair, &stats);
  EXPECT_EQ(provider.calls(), 2);
  EXPECT_EQ(raw_lines(out), (std::vector<std::string>{"SAME", "OTHER", "SAME"}));
  EXPECT_EQ(stats.lines, 3u);
  EXPECT_EQ(stats.provider_calls, 2u);
}

TEST(TranslateCorpus, PreloadedCacheMeansNoCalls) {
  CountingProvider provider;
  TranslationCache cache;
  cache.insert(kPair, "a", "x");
  cache.insert(kPair, "b", "y");
  TranslationStats stats;
  const Corpus out = translate_corpus(corpus({"a", "b", "a"}), provider, cache, kPair, &stats);
  EXPECT_EQ(provider.calls(), 0);
  EXPECT_EQ(stats.cache_hits, 3u);
  EXPECT_EQ(raw_lines(out), (std::vector<std::string>{"x", "y", "x"}));
}

TEST(TranslateCorpus, CacheIsPerLanguagePair) {
  CountingProvider provider;
  TranslationCache cache;
  cache.insert({"de", "en"}, "a", "from german");
  const Corpus out = translate_corpus(corpus({"a"}), provider, cache, kPair);
  EXPECT_EQ(out[0].raw(), "A");
  EXPECT_EQ(provider.calls(), 1);
}

TEST(TranslateCorpus, PreservesLengthAndOrderUnderConcurrency) {
  std::vector<std::string> lines;
  for (int i = 0; i < 200; ++i) lines.push_back("line " + std::to_string(i));
  CountingProvider provider(6, std::chrono::milliseconds(1));
  TranslationCache cache;
  const Corpus out = translate_corpus(corpus(lines), provider, cache, kPair);
  ASSERT_EQ(out.size(), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    EXPECT_EQ(out[i].raw(), "LINE " + std::to_string(i));
    EXPECT_EQ(out[i].index(), i);
  }
  EXPECT_LE(provider.peak(), 6);
  EXPECT_GE(provider.peak(), 1);
}

TEST(TranslateCorpus, ConcurrencyBoundOfOne) {
  std::vector<std::string> lines;
  for (int i = 0; i < 20; ++i) lines.push_back(std::to_string(i));
  CountingProvider provider(1, std::chrono::milliseconds(1));
  TranslationCache cache;
  translate_corpus(corpus(lines), provider, cache, kPair);
  EXPECT_EQ(provider.peak(), 1);
}

TEST(TranslateCorpus, FailureCarriesLineIndex) {
  CountingProvider provider(1);
  provider.fail_at_ = 2;
  TranslationCache cache;
  try {
    translate_corpus(corpus({"a", "b", "c", "d"}), provider, cache, kPair);
    FAIL() << "expected ProviderError";
  } catch (const ProviderError& e) {
    ASSERT_TRUE(e.line_index().has_value());
    EXPECT_EQ(*e.line_index(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(TranslateCorpus, EmptyCorpus) {
  CountingProvider provider;
  TranslationCache cache;
  EXPECT_TRUE(translate_corpus(corpus({}), provider, cache, kPair).empty());
  EXPECT_EQ(provider.calls(), 0);
}

TEST(TranslationCache, SaveLoadWithEscapes) {
  const auto path = std::filesystem::temp_directory_path() / "sentalign_cache.tsv";
  TranslationCache cache;
  cache.insert(kPair, "tab\there", "back\\slash");
  cache.insert(kPair, "plain", "zwykły");
  cache.insert({"de", "en"}, "other", "pair");
  cache.save(path, kPair);

  TranslationCache loaded;
  loaded.load(path, kPair);
  EXPECT_EQ(loaded.size(), 2u);
  EXPECT_EQ(loaded.lookup(kPair, "tab\there"), std::optional<std::string>("back\\slash"));
  EXPECT_EQ(loaded.lookup(kPair, "plain"), std::optional<std::string>("zwykły"));
  EXPECT_FALSE(loaded.lookup({"de", "en"}, "other"));
  std::filesystem::remove(path);
}

TEST(TranslationCache, MissingFileIsEmpty) {
  TranslationCache cache;
  cache.load("/nonexistent/sentalign/cache.tsv", kPair);
  EXPECT_EQ(cache.size(), 0u);
}

}  // namespace
}  // namespace sentalign
