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

#include <random>
#include <string>
#include <vector>

namespace sentalign::bench {

// Pseudo-English sentences of 6 to 12 words over a fixed vocabulary.
inline std::vector<std::string> sentences(std::size_t n, unsigned seed) {
  static const char* const kSyllables[] = {"ka", "lo", "mi", "nu", "pre", "sto", "ra", "ve", "chi", "do"};
  std::mt19937 rng(seed);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    const std::size_t words = 6 + rng() % 7;
    for (std::size_t w = 0; w < words; ++w) {
      if (w) s += ' ';
      for (std::size_t k = 1 + rng() % 3; k > 0; --k) s += kSyllables[rng() % 10];
    }
    out.push_back(s + '.');
  }
  return out;
}

}  // namespace sentalign::bench
