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
#include <optional>
#include <string>
#include <vector>

#include "sentalign/aligner.hpp"
#include "sentalign/http_provider.hpp"
#include "sentalign/metrics.hpp"
#include "sentalign/similarity.hpp"
#include "sentalign/translator.hpp"
#include "sentalign/tuner.hpp"

namespace sentalign::cli {

enum class ProviderKind { kNone, kFile, kHttp };

struct ProviderSettings {
  ProviderKind kind = ProviderKind::kNone;
  std::filesystem::path file;
  HttpProviderConfig http;
};

struct Paths {
  std::optional<std::filesystem::path> source, target, trans, gold;
  std::optional<std::filesystem::path> out_source, out_target, report;
  std::optional<std::filesystem::path> hyp, ref;
  std::optional<std::filesystem::path> out, tuning_report;
};

/// Everything a command needs. Built from defaults, then the JSON config
/// file, then command-line flags (flags win).
struct RunConfig {
  LanguagePair languages{"src", "en"};
  ProviderSettings provider;
  std::optional<std::filesystem::path> cache;
  ComparatorChain chain = ComparatorChain::parse(kDefaultChain);
  std::size_t window = 20;
  std::size_t lookahead = 1;
  std::size_t cap = kDefaultVariantCap;
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> synonyms;
  Paths paths;

  std::size_t bleu_order = kDefaultBleuOrder;
  BrevityPenaltyForm brevity = BrevityPenaltyForm::kStandard;
  double smoothing = 0.0;

  double resolution = kDefaultTuningResolution;
  std::vector<ThresholdBounds> bounds;

  bool stats = false;
};

/// Applies the JSON config at `path` on top of `config`. Relative paths in
/// the file are resolved against the file's directory. Unknown keys and
/// out-of-range values throw ConfigError.
void apply_config_file(const std::filesystem::path& path, RunConfig& config);

BrevityPenaltyForm parse_brevity_form(const std::string& name);

/// Throws ConfigError if any of `files` is set but does not exist.
void require_existing(std::initializer_list<const std::optional<std::filesystem::path>*> files);

}  // namespace sentalign::cli
