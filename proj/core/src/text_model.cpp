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

#include "sentalign/text_model.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <fstream>
#include <istream>
#include <ostream>

#include "sentalign/errors.hpp"
#include "sentalign/utf8.hpp"

namespace sentalign {
namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* instance = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || instance == nullptr) {
    throw Error(std::string("ICU NFC normalizer unavailable: ") + u_errorName(status));
  }
  return *instance;
}

bool is_apostrophe(char32_t c) noexcept { return c == U'\'' || c == U'’'; }

bool is_word_char(char32_t c) noexcept {
  const auto cp = static_cast<UChar32>(c);
  return u_isalpha(cp) || u_isdigit(cp) || (U_GET_GC_MASK(cp) & U_GC_M_MASK) != 0 ||
         is_apostrophe(c);
}

bool has_line_break(std::string_view s) noexcept {
  return s.find_first_of("\r\n") != std::string_view::npos;
}

}  // namespace

std::string normalize(std::string_view text) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  us.toLower(icu::Locale::getRoot());
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString composed = nfc().normalize(us, status);
  if (U_FAILURE(status)) throw Error(std::string("NFC failed: ") + u_errorName(status));

  std::string lowered;
  composed.toUTF8String(lowered);

  std::u32string out;
  out.reserve(lowered.size());
  bool pending_space = false;
  for (char32_t c : utf8::decode(lowered)) {
    if (u_isUWhiteSpace(static_cast<UChar32>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return utf8::encode(out);
}

Sentence::Sentence(std::size_t index, std::string raw) : index_(index), raw_(std::move(raw)) {
  if (has_line_break(raw_)) {
    throw DataError("sentence " + std::to_string(index_) + " contains a line break");
  }
  if (auto bad = utf8::find_invalid(raw_)) {
    throw DataError("sentence " + std::to_string(index_) + ": invalid UTF-8 at byte " +
                    std::to_string(*bad));
  }
  normalized_ = normalize(raw_);
}

std::vector<std::string> tokenize_text(std::string_view normalized) {
  std::vector<std::string> tokens;
  const std::u32string chars = utf8::decode(normalized);
  std::size_t i = 0;
  while (i < chars.size()) {
    if (!is_word_char(chars[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < chars.size() && is_word_char(chars[j])) ++j;
    std::size_t b = i;
    std::size_t e = j;
    while (b < e && is_apostrophe(chars[b])) ++b;
    while (e > b && is_apostrophe(chars[e - 1])) --e;
    if (b < e) tokens.push_back(utf8::encode(std::u32string_view(chars).substr(b, e - b)));
    i = j;
  }
  return tokens;
}

TokenizedSentence tokenize(const Sentence& sentence) {
  return TokenizedSentence{tokenize_text(sentence.normalized()), sentence.index()};
}

std::string join_tokens(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

Corpus Corpus::from_lines(std::string language, std::span<const std::string> lines) {
  Corpus corpus(std::move(language));
  corpus.sentences_.reserve(lines.size());
  for (const auto& line : lines) corpus.push_back(line);
  return corpus;
}

void Corpus::push_back(std::string raw) {
  sentences_.emplace_back(sentences_.size(), std::move(raw));
}

Corpus load_corpus(std::istream& in, std::string language, SkipReport* skipped,
                   const std::string& name) {
  Corpus corpus(std::move(language));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line.empty()) {
      if (skipped) skipped->empty_lines.push_back(line_no);
      continue;
    }
    if (auto bad = utf8::find_invalid(line)) {
      throw LineError(name, line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    if (line.find('\r') != std::string::npos) {
      throw LineError(name, line_no, "stray carriage return");
    }
    corpus.push_back(std::move(line));
  }
  if (in.bad()) throw DataError("read error on " + name);
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, std::string language, SkipReport* skipped) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return load_corpus(in, std::move(language), skipped, path.string());
}

void save_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& s : corpus) out << s.raw() << '\n';
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  save_corpus(corpus, out);
  if (!out) throw DataError("write failed on " + path.string());
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (auto bad = utf8::find_invalid(line)) {
      throw LineError(path.string(), line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

void write_lines(std::span<const std::string> lines, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw DataError("write failed on " + path.string());
}

}  // namespace sentalign
