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

#ifndef SYLLA_LETTERS_HPP
#define SYLLA_LETTERS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sylla/ssp.hpp"
#include "sylla/utf8.hpp"

namespace sylla {

/// Dictionary words may carry apostrophes, hyphens and periods ("don't",
/// "a.m."). They have no sonority: the letter-domain sequence skips them and
/// they stay attached to the syllable of the preceding letter.
inline bool is_silent_mark(std::string_view grapheme) {
  return grapheme == "'" || grapheme == "’" || grapheme == "-" || grapheme == "." ||
         grapheme == "‐";
}

struct LetterView {
  std::vector<std::string> graphemes;       ///< Whole word, case-folded.
  std::vector<std::size_t> letter_positions;  ///< Indices of non-mark graphemes.

  std::vector<std::string> letters() const {
    std::vector<std::string> out;
    out.reserve(letter_positions.size());
    for (std::size_t p : letter_positions) out.push_back(graphemes[p]);
    return out;
  }

  /// Maps a syllabification over letters() back onto the whole word.
  Syllabification lift(const Syllabification& over_letters) const {
    Syllabification out;
    out.symbols = graphemes;
    for (std::size_t b : over_letters.breaks) {
      if (b > 0 && b < letter_positions.size()) out.breaks.push_back(letter_positions[b]);
    }
    return out;
  }
};

inline LetterView letter_view(std::string_view word) {
  LetterView view;
  view.graphemes = utf8::split_graphemes(utf8::to_lower(word));
  for (std::size_t k = 0; k < view.graphemes.size(); ++k) {
    if (!is_silent_mark(view.graphemes[k])) view.letter_positions.push_back(k);
  }
  return view;
}

/// The whole word as one syllable.
inline Syllabification unbroken(std::string_view word) {
  Syllabification out;
  out.symbols = utf8::split_graphemes(utf8::to_lower(word));
  return out;
}

}  // namespace sylla

#endif  // SYLLA_LETTERS_HPP
