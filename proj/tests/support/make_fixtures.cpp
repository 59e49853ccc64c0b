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

// Writes tests/fixtures/synthetic_1005: 1005 source lines, a target with
// about 2% of lines dropped and shuffled in blocks of 8, and translations
// with synonym noise.

#include <iostream>

#include "synthetic.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: sentalign_make_fixtures <fixtures-dir>\n";
    return 1;
  }
  sentalign::synthetic::Options o;
  o.lines = 1005;
  o.seed = 1005;
  o.drop_rate = 0.02;
  o.shuffle_block = 8;
  o.synonym_rate = 0.1;
  const auto corpus = sentalign::synthetic::generate(o);
  sentalign::synthetic::write(corpus, std::filesystem::path(argv[1]) / "synthetic_1005");
  std::cout << "source " << corpus.source.size() << " target " << corpus.target.size() << '\n';
  return 0;
}
