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

#include "sentalign/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "sentalign/errors.hpp"
#include "sentalign/utf8.hpp"

namespace sentalign {
namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_comment_or_blank(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

}  // namespace

StopWordList::StopWordList(std::string language, std::span<const std::string> words)
    : language_(std::move(language)) {
  for (const auto& w : words) {
    std::string n = normalize(w);
    if (!n.empty()) words_.insert(std::move(n));
  }
}

bool StopWordList::contains(std::string_view token) const {
  return words_.find(std::string(token)) != words_.end();
}

StopWordList load_stopwords(std::istream& in, std::string language) {
  std::vector<std::string> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_comment_or_blank(line)) continue;
    if (auto bad = utf8::find_invalid(line)) {
      throw LineError("<stopwords>", line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    words.push_back(std::move(line));
  }
  return StopWordList(std::move(language), words);
}

StopWordList load_stopwords(const std::filesystem::path& path, std::string language) {
  auto in = open_or_throw(path);
  return load_stopwords(in, std::move(language));
}

void SynonymLexicon::add(std::string_view headword, std::span<const std::string> synonyms) {
  std::string head = normalize(headword);
  if (head.empty()) return;
  auto& list = entries_[head];
  for (const auto& s : synonyms) {
    std::string syn = normalize(s);
    if (syn.empty() || syn == head) continue;
    if (std::find(list.begin(), list.end(), syn) == list.end()) list.push_back(std::move(syn));
  }
}

std::span<const std::string> SynonymLexicon::lookup(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it == entries_.end()) return {};
  return it->second;
}

SynonymLexicon load_synonyms(std::istream& in, std::string language, const std::string& name) {
  SynonymLexicon lexicon(std::move(language));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_comment_or_blank(line)) continue;
    if (auto bad = utf8::find_invalid(line)) {
      throw LineError(name, line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw LineError(name, line_no, "expected headword<TAB>synonyms");

    std::vector<std::string> synonyms;
    std::string_view rest = std::string_view(line).substr(tab + 1);
    while (true) {
      const auto comma = rest.find(',');
      std::string syn = normalize(rest.substr(0, comma));
      if (syn.find(' ') != std::string::npos) {
        throw LineError(name, line_no, "multi-word synonym '" + syn + "' is not supported");
      }
      if (!syn.empty()) synonyms.push_back(std::move(syn));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    const std::string head = normalize(std::string_view(line).substr(0, tab));
    if (head.find(' ') != std::string::npos) {
      throw LineError(name, line_no, "multi-word headword '" + head + "' is not supported");
    }
    lexicon.add(head, synonyms);
  }
  return lexicon;
}

SynonymLexicon load_synonyms(const std::filesystem::path& path, std::string language) {
  auto in = open_or_throw(path);
  return load_synonyms(in, std::move(language), path.string());
}

std::vector<TokenizedSentence> expand_sentence(const TokenizedSentence& sentence,
                                               const SynonymLexicon& lexicon, std::size_t cap) {
  std::vector<TokenizedSentence> out;
  out.push_back(sentence);
  if (cap <= 1) return out;
  for (std::size_t pos = 0; pos < sentence.tokens.size(); ++pos) {
    for (const auto& syn : lexicon.lookup(sentence.tokens[pos])) {
      TokenizedSentence variant = sentence;
      variant.tokens[pos] = syn;
      out.push_back(std::move(variant));
      if (out.size() >= cap) return out;
    }
  }
  return out;
}

}  // namespace sentalign
