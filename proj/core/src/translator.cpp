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

#include "sentalign/translator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "sentalign/errors.hpp"

namespace sentalign {
namespace {

std::string escape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out.push_back(s[i]);
      continue;
    }
    switch (s[++i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: out.push_back(s[i]);
    }
  }
  return out;
}

}  // namespace

FileProvider::FileProvider(const std::filesystem::path& path)
    : lines_(load_corpus(path, std::string{})) {}

void FileProvider::check_corpus(const Corpus& source) const {
  if (source.size() != lines_.size()) {
    throw DataError("translation file has " + std::to_string(lines_.size()) +
                    " lines but the source corpus has " + std::to_string(source.size()));
  }
}

std::string FileProvider::translate(std::size_t line_index, std::string_view, const LanguagePair&) {
  if (line_index >= lines_.size()) {
    throw ProviderError(ProviderError::Kind::kOther, "translation file has no line " +
                        std::to_string(line_index + 1), line_index);
  }
  return lines_[line_index].raw();
}

std::optional<std::string> TranslationCache::lookup(const LanguagePair& pair,
                                                    std::string_view line) const {
  std::shared_lock lock(mutex_);
  auto p = entries_.find(pair);
  if (p == entries_.end()) return std::nullopt;
  auto it = p->second.find(line);
  if (it == p->second.end()) return std::nullopt;
  return it->second;
}

void TranslationCache::insert(const LanguagePair& pair, std::string line, std::string translation) {
  std::unique_lock lock(mutex_);
  entries_[pair].insert_or_assign(std::move(line), std::move(translation));
}

std::size_t TranslationCache::size() const {
  std::shared_lock lock(mutex_);
  std::size_t n = 0;
  for (const auto& [pair, m] : entries_) n += m.size();
  return n;
}

void TranslationCache::load(const std::filesystem::path& path, const LanguagePair& pair) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw LineError(path.string(), line_no, "expected source<TAB>translation");
    insert(pair, unescape_field(std::string_view(line).substr(0, tab)),
           unescape_field(std::string_view(line).substr(tab + 1)));
  }
}

void TranslationCache::save(const std::filesystem::path& path, const LanguagePair& pair) const {
  std::shared_lock lock(mutex_);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  auto p = entries_.find(pair);
  if (p == entries_.end()) return;
  for (const auto& [src, tgt] : p->second) out << escape_field(src) << '\t' << escape_field(tgt) << '\n';
  if (!out) throw DataError("write failed on " + path.string());
}

Corpus translate_corpus(const Corpus& corpus, TranslationProvider& provider,
                        TranslationCache& cache, const LanguagePair& pair,
                        TranslationStats* stats) {
  if (!provider.supports(pair)) {
    throw ConfigError("provider '" + provider.name() + "' does not support " + pair.to_string());
  }
  provider.check_corpus(corpus);

  // Distinct uncached lines, each keyed by its first occurrence.
  std::vector<std::size_t> work;
  std::unordered_map<std::string_view, std::size_t> first_seen;
  std::size_t hits = 0;
  for (const auto& s : corpus) {
    if (cache.lookup(pair, s.raw())) {
      ++hits;
      continue;
    }
    if (first_seen.emplace(s.raw(), s.index()).second) work.push_back(s.index());
  }

  const std::size_t workers = std::clamp<std::size_t>(provider.max_concurrency(), 1, std::max<std::size_t>(work.size(), 1));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex failure_mutex;
  std::optional<std::size_t> failed_line;
  std::exception_ptr failure;

  auto run = [&] {
    while (!abort.load(std::memory_order_relaxed)) {
      const std::size_t k = next.fetch_add(1);
      if (k >= work.size()) return;
      const Sentence& s = corpus[work[k]];
      try {
        cache.insert(pair, s.raw(), provider.translate(s.index(), s.raw(), pair));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failed_line || s.index() < *failed_line) {
          failed_line = s.index();
          failure = std::current_exception();
        }
        abort = true;
      }
    }
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  }

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const ProviderError& e) {
      throw ProviderError(e.kind(), "line " + std::to_string(*failed_line + 1) + ": " + e.what(),
                          failed_line, e.status());
    } catch (const Error& e) {
      throw ProviderError(ProviderError::Kind::kOther,
                          "line " + std::to_string(*failed_line + 1) + ": " + e.what(), failed_line);
    }
  }

  Corpus out(pair.target);
  for (const auto& s : corpus) {
    auto t = cache.lookup(pair, s.raw());
    if (!t) throw Error("translation missing for line " + std::to_string(s.index() + 1));
    out.push_back(std::move(*t));
  }
  if (stats) {
    stats->lines = corpus.size();
    stats->provider_calls = work.size();
    stats->cache_hits = hits;
  }
  return out;
}

}  // namespace sentalign
