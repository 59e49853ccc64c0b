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

#include "bench_common.hpp"
#include "sentalign/metrics.hpp"

namespace sentalign {
namespace {

Corpus corpus(unsigned seed) { return Corpus::from_lines("en", bench::sentences(500, seed)); }

void BM_CorpusBleuTerCer(benchmark::State& state) {
  const Corpus hyp = corpus(6);
  const Corpus ref = corpus(7);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_corpus(hyp, ref));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * hyp.size()));
}
BENCHMARK(BM_CorpusBleuTerCer)->Unit(benchmark::kMillisecond);

void BM_AlignmentScore(benchmark::State& state) {
  std::int64_t a = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(alignment_score(a % 1000, 3, 5, 2, 1010));
    ++a;
  }
}
BENCHMARK(BM_AlignmentScore);

}  // namespace
}  // namespace sentalign
