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

#include "sentalign/http_provider.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <thread>

#include "sentalign/errors.hpp"

namespace sentalign {
namespace {

using Kind = ProviderError::Kind;

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string target;  // /path?query
};

SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("URL without scheme: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw ConfigError("unsupported URL scheme: " + scheme);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::string replace_all(std::string s, std::string_view key, std::string_view value) {
  for (auto pos = s.find(key); pos != std::string::npos; pos = s.find(key, pos + value.size())) {
    s.replace(pos, key.size(), value);
  }
  return s;
}

std::string single_line(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\n' || c == '\r'; }, ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string extract_field(const std::string& body, const std::string& path) {
  if (path.empty()) return body;
  nlohmann::json doc = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ProviderError(Kind::kMalformedResponse, "response is not JSON");
  const nlohmann::json* node = &doc;
  std::string_view rest = path;
  while (!rest.empty()) {
    const auto dot = rest.find('.');
    const std::string key(rest.substr(0, dot));
    if (node->is_object() && node->contains(key)) {
      node = &(*node)[key];
    } else if (node->is_array() && !key.empty() &&
               std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); }) &&
               std::stoul(key) < node->size()) {
      node = &(*node)[std::stoul(key)];
    } else {
      throw ProviderError(Kind::kMalformedResponse, "response has no field '" + path + "'");
    }
    if (dot == std::string_view::npos) break;
    rest.remove_prefix(dot + 1);
  }
  if (!node->is_string()) {
    throw ProviderError(Kind::kMalformedResponse, "response field '" + path + "' is not a string");
  }
  return node->get<std::string>();
}

bool transient(const ProviderError& e) {
  switch (e.kind()) {
    case Kind::kTimeout:
    case Kind::kConnection: return true;
    case Kind::kHttpStatus: return e.status() >= 500 || e.status() == 429;
    default: return false;
  }
}

std::string attempt(const SplitUrl& url, const HttpProviderConfig& config) {
  httplib::Client client(url.origin);
  const auto sec = std::chrono::duration_cast<std::chrono::seconds>(config.timeout);
  const auto usec = std::chrono::duration_cast<std::chrono::microseconds>(config.timeout - sec);
  client.set_connection_timeout(sec.count(), usec.count());
  client.set_read_timeout(sec.count(), usec.count());
  client.set_write_timeout(sec.count(), usec.count());

  const auto started = std::chrono::steady_clock::now();
  auto res = client.Get(url.target);
  if (!res) {
    const auto err = res.error();
    const auto elapsed = std::chrono::steady_clock::now() - started;
    if (err == httplib::Error::ConnectionTimeout ||
        (err == httplib::Error::Read && elapsed >= config.timeout)) {
      throw ProviderError(Kind::kTimeout, "request timed out after " +
                          std::to_string(config.timeout.count()) + " ms");
    }
    throw ProviderError(Kind::kConnection, "request failed: " + httplib::to_string(err));
  }
  if (res->status < 200 || res->status >= 300) {
    throw ProviderError(Kind::kHttpStatus, "HTTP status " + std::to_string(res->status),
                        std::nullopt, res->status);
  }
  return single_line(extract_field(res->body, config.response_field));
}

}  // namespace

std::string url_encode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size() * 3);
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0x0F]);
    }
  }
  return out;
}

std::string http_translate(std::string_view line, const LanguagePair& pair,
                           const HttpProviderConfig& config, std::optional<std::size_t> line_index) {
  std::string url = replace_all(config.url_template, "{text}", url_encode(line));
  url = replace_all(std::move(url), "{src}", url_encode(pair.source));
  url = replace_all(std::move(url), "{tgt}", url_encode(pair.target));
  const SplitUrl split = split_url(url);

  auto delay = config.backoff;
  for (unsigned attempt_no = 0;; ++attempt_no) {
    try {
      return attempt(split, config);
    } catch (const ProviderError& e) {
      if (!transient(e) || attempt_no >= config.retries) {
        std::string what = e.what();
        if (attempt_no > 0) what += " (after " + std::to_string(attempt_no + 1) + " attempts)";
        throw ProviderError(e.kind(), what, line_index, e.status());
      }
    }
    std::this_thread::sleep_for(delay);
    delay *= 2;
  }
}

HttpProvider::HttpProvider(HttpProviderConfig config) : config_(std::move(config)) {
  if (config_.url_template.find("{text}") == std::string::npos) {
    throw ConfigError("HTTP url template must contain {text}");
  }
  split_url(config_.url_template);
  if (config_.max_concurrency == 0) throw ConfigError("HTTP max concurrency must be at least 1");
}

}  // namespace sentalign
