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

#include <benchmark/benchmark.h>

#include <algorithm>

#include "bench_common.hpp"
#include "sentalign/aligner.hpp"

namespace sentalign {
namespace {

// Target is the translation shuffled inside blocks of 8 with every 20th
// line dropped.
void BM_Align(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto lines = bench::sentences(n, 4);
  std::vector<std::string> target;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 20 != 19) target.push_back(lines[i]);
  }
  std::mt19937 rng(5);
  for (std::size_t b = 0; b < target.size(); b += 8) {
    std::shuffle(target.begin() + b, target.begin() + std::min(b + 8, target.size()), rng);
  }
  std::vector<std::string> source(n);
  for (std::size_t i = 0; i < n; ++i) source[i] = "s" + std::to_string(i);
  const Corpus src = Corpus::from_lines("xx", source);
  const Corpus tgt = Corpus::from_lines("en", target);
  const Corpus trans = Corpus::from_lines("en", lines);
  for (auto _ : state) benchmark::DoNotOptimize(align(src, tgt, trans, AlignmentConfig{}));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Align)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sentalign
