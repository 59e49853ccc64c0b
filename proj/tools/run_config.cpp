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

#include "run_config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

#include "sentalign/errors.hpp"

namespace sentalign::cli {
namespace {

using Json = nlohmann::json;

void check_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown config key '" + where + "." + key + "'");
  }
}

template <typename T>
T get(const Json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError("bad value for config key '" + where + "." + key + "'");
  }
}

std::size_t get_count(const Json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError("config key '" + where + "." + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

}  // namespace

BrevityPenaltyForm parse_brevity_form(const std::string& name) {
  if (name == "standard") return BrevityPenaltyForm::kStandard;
  if (name == "paper" || name == "literal") return BrevityPenaltyForm::kLiteral;
  throw ConfigError("unknown brevity penalty form '" + name + "' (standard|paper)");
}

void apply_config_file(const std::filesystem::path& path, RunConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw ConfigError("config file " + path.string() + " is not valid JSON");
  const auto base = path.parent_path();

  check_keys(doc,
             {"languages", "provider", "cache", "chain", "window", "lookahead", "cap", "stopwords",
              "synonyms", "paths", "bleu", "tune"},
             "config");

  if (doc.contains("languages")) {
    const auto& l = doc["languages"];
    check_keys(l, {"source", "target"}, "languages");
    if (l.contains("source")) config.languages.source = get<std::string>(l, "source", "languages");
    if (l.contains("target")) config.languages.target = get<std::string>(l, "target", "languages");
  }
  if (doc.contains("provider")) {
    const auto& p = doc["provider"];
    check_keys(p, {"kind", "path", "url", "response_field", "max_concurrency", "timeout_ms",
                   "retries", "backoff_ms"},
               "provider");
    const auto kind = get<std::string>(p, "kind", "provider");
    if (kind == "file") {
      config.provider.kind = ProviderKind::kFile;
    } else if (kind == "http") {
      config.provider.kind = ProviderKind::kHttp;
    } else {
      throw ConfigError("provider.kind must be 'file' or 'http'");
    }
    if (p.contains("path")) config.provider.file = resolve(base, get<std::string>(p, "path", "provider"));
    auto& h = config.provider.http;
    if (p.contains("url")) h.url_template = get<std::string>(p, "url", "provider");
    if (p.contains("response_field")) h.response_field = get<std::string>(p, "response_field", "provider");
    if (p.contains("max_concurrency")) h.max_concurrency = get_count(p, "max_concurrency", "provider");
    if (p.contains("timeout_ms")) h.timeout = std::chrono::milliseconds(get_count(p, "timeout_ms", "provider"));
    if (p.contains("retries")) h.retries = static_cast<unsigned>(get_count(p, "retries", "provider"));
    if (p.contains("backoff_ms")) h.backoff = std::chrono::milliseconds(get_count(p, "backoff_ms", "provider"));
  }
  if (doc.contains("cache")) config.cache = resolve(base, get<std::string>(doc, "cache", "config"));
  if (doc.contains("chain")) {
    const auto& c = doc["chain"];
    if (!c.is_array()) throw ConfigError("chain must be an array of {kind, threshold}");
    std::vector<Comparator> comparators;
    for (const auto& item : c) {
      check_keys(item, {"kind", "threshold"}, "chain[]");
      const auto name = get<std::string>(item, "kind", "chain[]");
      auto kind = parse_comparator_kind(name);
      if (!kind) throw ConfigError("unknown comparator kind '" + name + "'");
      comparators.push_back({*kind, SimilarityScore(get<double>(item, "threshold", "chain[]"))});
    }
    config.chain = ComparatorChain(std::move(comparators));
  }
  if (doc.contains("window")) config.window = get_count(doc, "window", "config");
  if (doc.contains("lookahead")) config.lookahead = get_count(doc, "lookahead", "config");
  if (doc.contains("cap")) config.cap = get_count(doc, "cap", "config");
  if (doc.contains("stopwords")) config.stopwords = resolve(base, get<std::string>(doc, "stopwords", "config"));
  if (doc.contains("synonyms")) config.synonyms = resolve(base, get<std::string>(doc, "synonyms", "config"));
  if (doc.contains("paths")) {
    const auto& p = doc["paths"];
    check_keys(p, {"source", "target", "trans", "gold", "out_source", "out_target", "report", "hyp",
                   "ref", "out", "tuning_report"},
               "paths");
    auto set = [&](const char* key, std::optional<std::filesystem::path>& slot) {
      if (p.contains(key)) slot = resolve(base, get<std::string>(p, key, "paths"));
    };
    auto& P = config.paths;
    set("source", P.source);
    set("target", P.target);
    set("trans", P.trans);
    set("gold", P.gold);
    set("out_source", P.out_source);
    set("out_target", P.out_target);
    set("report", P.report);
    set("hyp", P.hyp);
    set("ref", P.ref);
    set("out", P.out);
    set("tuning_report", P.tuning_report);
  }
  if (doc.contains("bleu")) {
    const auto& b = doc["bleu"];
    check_keys(b, {"order", "bp_form", "smoothing"}, "bleu");
    if (b.contains("order")) config.bleu_order = get_count(b, "order", "bleu");
    if (b.contains("bp_form")) config.brevity = parse_brevity_form(get<std::string>(b, "bp_form", "bleu"));
    if (b.contains("smoothing")) config.smoothing = get<double>(b, "smoothing", "bleu");
  }
  if (doc.contains("tune")) {
    const auto& t = doc["tune"];
    check_keys(t, {"resolution", "bounds"}, "tune");
    if (t.contains("resolution")) config.resolution = get<double>(t, "resolution", "tune");
    if (t.contains("bounds")) {
      config.bounds.clear();
      for (const auto& b : t["bounds"]) {
        if (!b.is_array() || b.size() != 2) throw ConfigError("tune.bounds entries must be [lo, hi]");
        config.bounds.push_back({b[0].get<double>(), b[1].get<double>()});
      }
    }
  }
  if (config.cap == 0) throw ConfigError("cap must be at least 1");
  if (config.bleu_order == 0) throw ConfigError("bleu.order must be at least 1");
}

void require_existing(std::initializer_list<const std::optional<std::filesystem::path>*> files) {
  for (const auto* f : files) {
    if (f->has_value() && !std::filesystem::exists(**f)) {
      throw ConfigError("file not found: " + (*f)->string());
    }
  }
}

}  // namespace sentalign::cli
