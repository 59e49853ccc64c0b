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

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sentalign/translator.hpp"

namespace sentalign {

/// Generic GET-based translation endpoint.
///
/// `url_template` is a full http:// or https:// URL in which `{text}`,
/// `{src}` and `{tgt}` are replaced by the URL-encoded line and language
/// tags. `response_field` is a dotted path into the JSON response
/// ("data.translations.0.text"); an empty path takes the whole body as
/// plain text.
struct HttpProviderConfig {
  std::string url_template;
  std::string response_field = "translation";
  std::size_t max_concurrency = 4;
  std::chrono::milliseconds timeout{10'000};
  unsigned retries = 2;
  std::chrono::milliseconds backoff{200};
};

/// Percent-encodes everything except RFC 3986 unreserved characters.
std::string url_encode(std::string_view text);

/// One request with retry. Transient failures (connection errors, timeouts,
/// 5xx and 429) are retried up to `config.retries` times with exponential
/// backoff starting at `config.backoff`. Throws ProviderError whose kind
/// distinguishes timeout, malformed response and HTTP status failures.
std::string http_translate(std::string_view line, const LanguagePair& pair,
                           const HttpProviderConfig& config,
                           std::optional<std::size_t> line_index = std::nullopt);

class HttpProvider final : public TranslationProvider {
 public:
  /// Throws ConfigError for an unusable template.
  explicit HttpProvider(HttpProviderConfig config);

  std::string name() const override { return "http"; }
  std::size_t max_concurrency() const override { return config_.max_concurrency; }
  std::string translate(std::size_t line_index, std::string_view line,
                        const LanguagePair& pair) override {
    return http_translate(line, pair, config_, line_index);
  }

 private:
  HttpProviderConfig config_;
};

}  // namespace sentalign
