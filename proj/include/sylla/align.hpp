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

// Alignment of pronunciation-domain and spelling-domain sonority sequences
// with dynamic time warping, and projection of phone-domain syllable breaks
// onto letters.

#ifndef SYLLA_ALIGN_HPP
#define SYLLA_ALIGN_HPP

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sylla/error.hpp"
#include "sylla/letters.hpp"
#include "sylla/lexicon.hpp"
#include "sylla/sonority.hpp"
#include "sylla/ssp.hpp"

namespace sylla {

/// Monotone warping path from (0, 0) to (m-1, n-1) with steps (1,0), (0,1)
/// and (1,1).
struct AlignmentPath {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  bool valid(std::size_t m, std::size_t n) const {
    if (pairs.empty() || pairs.front() != std::pair<std::size_t, std::size_t>{0, 0}) return false;
    if (pairs.back() != std::pair<std::size_t, std::size_t>{m - 1, n - 1}) return false;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto di = pairs[k].first - pairs[k - 1].first;
      const auto dj = pairs[k].second - pairs[k - 1].second;
      if (pairs[k].first < pairs[k - 1].first || pairs[k].second < pairs[k - 1].second) return false;
      if (di > 1 || dj > 1 || (di == 0 && dj == 0)) return false;
    }
    return true;
  }

  friend bool operator==(const AlignmentPath&, const AlignmentPath&) = default;
};

struct DtwResult {
  AlignmentPath path;
  long cost = 0;
};

inline long path_cost(const AlignmentPath& path, std::span<const int> a, std::span<const int> b) {
  long cost = 0;
  for (const auto& [i, j] : path.pairs) cost += std::abs(a[i] - b[j]);
  return cost;
}

/// DTW over level sequences with cost |a_i - b_j|. Backtracking prefers the
/// diagonal predecessor on ties, then the one that advanced `a`, then the one
/// that advanced `b`, so the path is unique.
inline DtwResult dtw_levels(std::span<const int> a, std::span<const int> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::contract_violation, "dtw: both sequences must be non-empty");
  }
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  constexpr long kInf = std::numeric_limits<long>::max() / 4;
  std::vector<long> acc(m * n, kInf);
  const auto at = [&](std::size_t i, std::size_t j) -> long& { return acc[i * n + j]; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long local = std::abs(a[i] - b[j]);
      if (i == 0 && j == 0) {
        at(i, j) = local;
        continue;
      }
      long best = kInf;
      if (i > 0 && j > 0) best = std::min(best, at(i - 1, j - 1));
      if (i > 0) best = std::min(best, at(i - 1, j));
      if (j > 0) best = std::min(best, at(i, j - 1));
      at(i, j) = best + local;
    }
  }
  DtwResult result;
  result.cost = at(m - 1, n - 1);
  std::size_t i = m - 1;
  std::size_t j = n - 1;
  result.path.pairs.emplace_back(i, j);
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      const long diag = at(i - 1, j - 1);
      const long up = at(i - 1, j);
      const long left = at(i, j - 1);
      if (diag <= up && diag <= left) {
        --i;
        --j;
      } else if (up <= left) {
        --i;
      } else {
        --j;
      }
    }
    result.path.pairs.emplace_back(i, j);
  }
  std::reverse(result.path.pairs.begin(), result.path.pairs.end());
  return result;
}

inline DtwResult dtw(const SonoritySequence& a, const SonoritySequence& b) {
  const auto la = a.levels();
  const auto lb = b.levels();
  return dtw_levels(la, lb);
}

struct Projection {
  Syllabification letters;
  bool degenerate = false;  ///< Some phone break could not be carried over.
};

/// Carries phone-domain breaks over to letters. A break before phone p maps
/// to the first expanded point c of p; the letter break goes before the
/// letter owning the smallest j with (c, j) on the path. Duplicate breaks,
/// breaks at the word edges and breaks that would leave a syllable without a
/// vowel letter are dropped and flag the projection as degenerate.
inline Projection project_breaks(const Syllabification& phone_syll, const AlignmentPath& path,
                                 const SonoritySequence& phone_seq,
                                 const SonoritySequence& letter_seq) {
  Projection out;
  out.letters.symbols = letter_seq.symbols;
  const std::size_t letter_count =
      !letter_seq.symbols.empty()
          ? letter_seq.symbols.size()
          : (letter_seq.points.empty() ? 0 : letter_seq.points.back().source + 1);

  std::vector<std::size_t> cuts;
  for (std::size_t brk : phone_syll.breaks) {
    const std::size_t c = phone_seq.first_point_of(brk);
    std::size_t best_j = std::numeric_limits<std::size_t>::max();
    for (const auto& [i, j] : path.pairs) {
      if (i == c && j < best_j) best_j = j;
    }
    if (best_j == std::numeric_limits<std::size_t>::max()) {
      out.degenerate = true;
      continue;
    }
    cuts.push_back(letter_seq.points[best_j].source);
  }
  std::sort(cuts.begin(), cuts.end());
  const std::size_t before_dedupe = cuts.size();
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.size() != before_dedupe) out.degenerate = true;

  std::vector<bool> vowel(letter_count, false);
  for (const auto& p : letter_seq.points) {
    if (p.level == kNucleusLevel) vowel[p.source] = true;
  }
  const auto has_vowel = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) {
      if (vowel[k]) return true;
    }
    return false;
  };
  std::size_t prev = 0;
  for (std::size_t cut : cuts) {
    if (cut == 0 || cut >= letter_count) {
      out.degenerate = true;
      continue;
    }
    if (!has_vowel(prev, cut) || !has_vowel(cut, letter_count)) {
      out.degenerate = true;
      continue;
    }
    out.letters.breaks.push_back(cut);
    prev = cut;
  }
  return out;
}

/// Everything produced while syllabifying one word through the aligner.
struct WordAlignment {
  SonoritySequence phone_seq;
  SonoritySequence letter_seq;
  Syllabification phone_syll;
  DtwResult alignment;
  Syllabification text_syll;  ///< Over the whole word, marks included.
  bool degenerate = false;
};

/// Sonority sequences for both domains, phone-domain SSP, DTW and projection.
/// Throws UnknownSymbolError when a phone or letter is not classified.
inline WordAlignment ssp_dtw_syllabify(std::string_view word, const Pronunciation& pron,
                                       const SonorityHierarchy& phone_h,
                                       const SonorityHierarchy& letter_h) {
  if (word.empty() || pron.empty()) {
    throw Error(ErrorKind::contract_violation, "ssp_dtw_syllabify: empty word or pronunciation");
  }
  WordAlignment out;
  const auto phones = pron.symbols();
  out.phone_seq = sonority_sequence(phones, phone_h);
  out.phone_syll = ssp_breaks(out.phone_seq);
  const LetterView view = letter_view(word);
  const auto letters = view.letters();
  if (letters.empty()) {
    out.text_syll = unbroken(word);
    out.degenerate = !out.phone_syll.breaks.empty();
    return out;
  }
  out.letter_seq = sonority_sequence(letters, letter_h);
  out.alignment = dtw(out.phone_seq, out.letter_seq);
  Projection proj = project_breaks(out.phone_syll, out.alignment.path, out.phone_seq, out.letter_seq);
  out.text_syll = view.lift(proj.letters);
  out.degenerate = proj.degenerate;
  return out;
}

/// Debug dump of an alignment as TSV rows: word, i, j, level_a, level_b.
inline void write_alignment_tsv(std::ostream& out, std::string_view word, const WordAlignment& wa) {
  for (const auto& [i, j] : wa.alignment.path.pairs) {
    out << word << '\t' << i << '\t' << j << '\t' << wa.phone_seq.points[i].level << '\t'
        << wa.letter_seq.points[j].level << '\n';
  }
}

}  // namespace sylla

#endif  // SYLLA_ALIGN_HPP
