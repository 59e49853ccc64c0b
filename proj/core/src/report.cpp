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

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>

#include "sentalign/aligner.hpp"
#include "sentalign/errors.hpp"

namespace sentalign {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
T field(const Json& obj, const char* key, const std::string& name, std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end()) throw LineError(name, line_no, std::string("missing field '") + key + "'");
  try {
    return it->template get<T>();
  } catch (const Json::exception&) {
    throw LineError(name, line_no, std::string("bad value for '") + key + "'");
  }
}

}  // namespace

void write_report(const AlignmentResult& result, std::ostream& out) {
  for (const auto& d : result.decisions) {
    Json rec;
    rec["source_index"] = d.source_index;
    rec["outcome"] = to_string(d.outcome);
    if (d.target_index) rec["target_index"] = *d.target_index;
    if (d.score) rec["score"] = d.score->value();
    if (d.comparator) rec["comparator"] = to_string(*d.comparator);
    rec["text"] = d.text;
    out << rec.dump() << '\n';
  }
  Json trailer;
  trailer["A"] = result.counts.aligned;
  trailer["T"] = result.counts.translated;
  trailer["D"] = result.counts.disproportion;
  trailer["L"] = result.counts.lines;
  trailer["unmatched_targets"] = result.unmatched_target_indices;
  out << trailer.dump() << '\n';
}

void write_alignment(const AlignmentResult& result, const std::filesystem::path& out_source,
                     const std::filesystem::path& out_target, const std::filesystem::path& report) {
  std::ofstream src(out_source, std::ios::binary | std::ios::trunc);
  std::ofstream tgt(out_target, std::ios::binary | std::ios::trunc);
  std::ofstream rep(report, std::ios::binary | std::ios::trunc);
  if (!src) throw DataError("cannot write " + out_source.string());
  if (!tgt) throw DataError("cannot write " + out_target.string());
  if (!rep) throw DataError("cannot write " + report.string());
  for (const auto& [s, t] : result.output_pairs) {
    src << s << '\n';
    tgt << t << '\n';
  }
  write_report(result, rep);
  if (!src || !tgt || !rep) throw DataError("write failed while saving alignment");
}

AlignmentResult read_report(std::istream& in, const std::string& name) {
  AlignmentResult result;
  std::string line;
  std::size_t line_no = 0;
  bool have_trailer = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (have_trailer) throw LineError(name, line_no, "record after trailer");
    Json obj = Json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) throw LineError(name, line_no, "not a JSON object");

    if (!obj.contains("source_index")) {
      result.counts.aligned = field<std::size_t>(obj, "A", name, line_no);
      result.counts.translated = field<std::size_t>(obj, "T", name, line_no);
      result.counts.disproportion = field<std::size_t>(obj, "D", name, line_no);
      result.counts.lines = field<std::size_t>(obj, "L", name, line_no);
      result.unmatched_target_indices =
          field<std::vector<std::size_t>>(obj, "unmatched_targets", name, line_no);
      have_trailer = true;
      continue;
    }

    AlignmentDecision d;
    d.source_index = field<std::size_t>(obj, "source_index", name, line_no);
    if (d.source_index != result.decisions.size()) {
      throw LineError(name, line_no, "source_index " + std::to_string(d.source_index) +
                      " out of sequence");
    }
    const auto tag = field<std::string>(obj, "outcome", name, line_no);
    auto outcome = parse_outcome(tag);
    if (!outcome) throw LineError(name, line_no, "unknown outcome '" + tag + "'");
    d.outcome = *outcome;
    if (obj.contains("target_index")) d.target_index = field<std::size_t>(obj, "target_index", name, line_no);
    if (obj.contains("score")) d.score = SimilarityScore(field<double>(obj, "score", name, line_no));
    if (obj.contains("comparator")) {
      const auto kind = field<std::string>(obj, "comparator", name, line_no);
      d.comparator = parse_comparator_kind(kind);
      if (!d.comparator) throw LineError(name, line_no, "unknown comparator '" + kind + "'");
    }
    if (d.outcome == Outcome::kAligned && !d.target_index) {
      throw LineError(name, line_no, "ALIGNED record without target_index");
    }
    d.text = field<std::string>(obj, "text", name, line_no);
    result.output_pairs.emplace_back(std::string{}, d.text);
    result.decisions.push_back(std::move(d));
  }
  if (!have_trailer) throw DataError(name + ": missing trailer record");
  if (result.counts.lines != result.decisions.size()) {
    throw DataError(name + ": trailer L=" + std::to_string(result.counts.lines) + " but " +
                    std::to_string(result.decisions.size()) + " records");
  }
  AlignmentCounts tally;
  tally.lines = result.decisions.size();
  for (const auto& d : result.decisions) {
    switch (d.outcome) {
      case Outcome::kAligned: ++tally.aligned; break;
      case Outcome::kTranslated: ++tally.translated; break;
      case Outcome::kFilled: ++tally.disproportion; break;
    }
  }
  if (tally != result.counts) throw DataError(name + ": trailer counts disagree with the records");
  return result;
}

AlignmentResult read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return read_report(in, path.string());
}

}  // namespace sentalign
