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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sentalign {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or usage (bad threshold, unsorted chain, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input data is unreadable, malformed or inconsistent.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A data error attributable to one line of an input file (1-based).
class LineError : public DataError {
 public:
  LineError(std::string path, std::size_t line, const std::string& what)
      : DataError(path + ":" + std::to_string(line) + ": " + what),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

/// Translation provider failure.
class ProviderError : public Error {
 public:
  enum class Kind { kTimeout, kMalformedResponse, kHttpStatus, kConnection, kOther };

  ProviderError(Kind kind, const std::string& what,
                std::optional<std::size_t> line_index = std::nullopt,
                int status = 0)
      : Error(what), kind_(kind), line_index_(line_index), status_(status) {}

  Kind kind() const noexcept { return kind_; }
  /// 0-based source line index, when the failure is tied to a line.
  std::optional<std::size_t> line_index() const noexcept { return line_index_; }
  int status() const noexcept { return status_; }

 private:
  Kind kind_;
  std::optional<std::size_t> line_index_;
  int status_;
};

const char* to_string(ProviderError::Kind kind) noexcept;

}  // namespace sentalign
