// Copyright 2026 The Sylla Authors.
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

// Syllabifies a few words with each strategy and prints one row per word.
//
//   syllabify_demo [DICT] [WORD...]
//
// DICT defaults to the bundled test dictionary.

#include <iostream>
#include <string>
#include <vector>

#include "sylla/pipeline.hpp"
#include "sylla/records.hpp"

int main(int argc, char** argv) {
  using namespace sylla;
  const std::string dict = argc > 1 ? argv[1] : SYLLA_DEMO_DICT;
  std::vector<std::string> words(argv + std::min(argc, 2), argv + argc);
  if (words.empty()) words = {"sentence", "oceanic", "leaves", "rhythm"};

  try {
    Resources res;
    res.language = Language::en;
    res.lexicon = load_pron_dict(dict, DictFormat::cmu, Language::en);
    attach_default_hierarchies(res);

    std::cout << "strategy\t" << row_header() << '\n';
    for (Strategy s : kAllStrategies) {
      if (uses_corpus(s)) continue;  // no syllabified corpus loaded here
      for (const auto& r : syllabify_words(words, res, s, 1)) {
        std::cout << to_string(s) << '\t' << format_row(r) << '\n';
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
