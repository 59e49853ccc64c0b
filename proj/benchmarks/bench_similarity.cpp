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
#include "sentalign/similarity.hpp"
#include "sentalign/utf8.hpp"

namespace sentalign {
namespace {

void BM_Ratio(benchmark::State& state) {
  const auto lines = bench::sentences(64, 1);
  std::vector<std::u32string> text;
  for (const auto& l : lines) text.push_back(utf8::decode(l));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio(text[i % 64], text[(i * 7 + 3) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Ratio);

void BM_LcsBound(benchmark::State& state) {
  const auto lines = bench::sentences(64, 2);
  std::vector<std::u32string> text;
  std::vector<CharMasks> masks;
  for (const auto& l : lines) {
    text.push_back(utf8::decode(l));
    masks.push_back(char_masks(text.back()));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lcs_length(masks[i % 64], text[(i * 7 + 3) % 64]));
    ++i;
  }
}
BENCHMARK(BM_LcsBound);

void BM_EvaluateChain(benchmark::State& state) {
  const auto lines = bench::sentences(64, 3);
  std::vector<PreparedSentence> prepared;
  for (std::size_t i = 0; i < lines.size(); ++i) prepared.push_back(prepare(Sentence(i, lines[i])));
  const auto chain = ComparatorChain::parse("token_overlap:0.9,matching_blocks_ratio:0.75");
  ScoringContext ctx;
  ctx.prune_rejections = state.range(0) != 0;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_chain(prepared[i % 64], prepared[(i * 7 + 3) % 64], chain, ctx));
    ++i;
  }
}
BENCHMARK(BM_EvaluateChain)->Arg(0)->Arg(1);

}  // namespace
}  // namespace sentalign
