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

// Syllable break detection on expanded sonority sequences.
//
// Breaks sit at local sonority minima, scanned left to right. A minimum is
// accepted only if a nucleus (level 5) lies between the previous accepted
// break and the minimum, and another nucleus remains after the new break; so
// no syllable is ever left without a vowel. A minimum on the tail point of a
// vowel puts the break after that vowel; a minimum on a consonant puts the
// break before it.

#ifndef SYLLA_SSP_HPP
#define SYLLA_SSP_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylla/lexicon.hpp"
#include "sylla/sonority.hpp"

namespace sylla {

/// A symbol sequence with syllable boundaries; break `b` is a boundary
/// before symbols[b].
struct Syllabification {
  std::vector<std::string> symbols;
  std::vector<std::size_t> breaks;

  std::size_t syllable_count() const { return symbols.empty() ? 0 : breaks.size() + 1; }

  std::vector<std::vector<std::string>> syllables() const {
    std::vector<std::vector<std::string>> out;
    if (symbols.empty()) return out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= breaks.size(); ++k) {
      const std::size_t end = k < breaks.size() ? breaks[k] : symbols.size();
      out.emplace_back(symbols.begin() + static_cast<std::ptrdiff_t>(start),
                       symbols.begin() + static_cast<std::ptrdiff_t>(end));
      start = end;
    }
    return out;
  }

  /// Joins symbols with `within` inside a syllable and `between` across
  /// boundaries: join("", "|") gives "sen|tence".
  std::string join(std::string_view within, std::string_view between) const {
    std::string out;
    std::size_t next_break = 0;
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      if (k > 0) {
        if (next_break < breaks.size() && breaks[next_break] == k) {
          out += between;
          ++next_break;
        } else {
          out += within;
        }
      }
      out += symbols[k];
    }
    return out;
  }

  /// Breaks strictly increasing and inside (0, size).
  bool well_formed() const {
    std::size_t prev = 0;
    for (std::size_t b : breaks) {
      if (b <= prev || b >= symbols.size()) return false;
      prev = b;
    }
    return true;
  }

  friend bool operator==(const Syllabification&, const Syllabification&) = default;
};

/// Builds a syllabification from pre-split syllables; empty syllables are
/// ignored.
inline Syllabification from_syllables(std::span<const std::vector<std::string>> syllables) {
  Syllabification out;
  for (const auto& syl : syllables) {
    if (syl.empty()) continue;
    if (!out.symbols.empty()) out.breaks.push_back(out.symbols.size());
    out.symbols.insert(out.symbols.end(), syl.begin(), syl.end());
  }
  return out;
}

namespace detail {

// True when some nucleus point with source >= `from_symbol` exists among
// points[begin, end).
inline bool has_nucleus(const SonoritySequence& seq, std::size_t from_symbol, std::size_t begin,
                        std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (seq.points[i].level == kNucleusLevel && seq.points[i].source >= from_symbol) return true;
  }
  return false;
}

}  // namespace detail

/// Syllabifies an expanded sonority sequence.
///
/// Local minima need a strictly higher point on both sides; on a plateau of
/// equal levels only the first point of the plateau is a candidate, so
/// doubled consonants ("tt", /k t/) still yield one break.
inline Syllabification ssp_breaks(const SonoritySequence& seq) {
  Syllabification out;
  out.symbols = seq.symbols;
  const auto& pts = seq.points;
  const std::size_t n = pts.size();
  std::size_t symbol_count = out.symbols.size();
  if (symbol_count == 0 && n > 0) symbol_count = pts.back().source + 1;

  std::size_t prev_break = 0;
  std::size_t i = 1;
  while (i + 1 < n) {
    const int level = pts[i].level;
    if (pts[i - 1].level <= level) {
      ++i;
      continue;
    }
    std::size_t plateau_end = i;
    while (plateau_end + 1 < n && pts[plateau_end + 1].level == level) ++plateau_end;
    if (plateau_end + 1 < n && pts[plateau_end + 1].level > level) {
      // Tail point of a vowel: the point before it shares its source.
      const bool vowel_tail = pts[i - 1].source == pts[i].source;
      const std::size_t brk = vowel_tail ? pts[i].source + 1 : pts[i].source;
      const bool nucleus_before = detail::has_nucleus(seq, prev_break, 0, i);
      const bool nucleus_after = detail::has_nucleus(seq, brk, 0, n);
      if (brk > prev_break && brk < symbol_count && nucleus_before && nucleus_after) {
        out.breaks.push_back(brk);
        prev_break = brk;
      }
    }
    i = plateau_end + 1;
  }
  return out;
}

inline std::size_t count_nuclei(const SonoritySequence& seq) {
  std::size_t count = 0;
  for (const auto& p : seq.points) {
    if (p.level == kNucleusLevel) ++count;
  }
  return count;
}

/// Number of vowel phones. Throws UnknownSymbolError for unclassified phones.
inline std::size_t count_nuclei(const Pronunciation& pron, const SonorityHierarchy& hierarchy) {
  std::size_t count = 0;
  for (const Phone& p : pron.phones) {
    if (hierarchy.class_of(p.text()) == SonorityClass::vowel) ++count;
  }
  return count;
}

/// Syllabifies a symbol list directly.
inline Syllabification syllabify_symbols(std::span<const std::string> symbols,
                                         const SonorityHierarchy& hierarchy) {
  return ssp_breaks(sonority_sequence(symbols, hierarchy));
}

}  // namespace sylla

#endif  // SYLLA_SSP_HPP
