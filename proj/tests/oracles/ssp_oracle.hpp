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

// Brute-force syllable-break oracle. It works on per-symbol levels and
// shares no code with the library scanner: valleys come from run-length
// groups, and the accepted set is found by trying every subset of them.

#ifndef SYLLA_TESTS_SSP_ORACLE_HPP
#define SYLLA_TESTS_SSP_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace sylla::oracle {

// Runs of equal levels over the expanded sequence (vowels as 5 then 4); a
// run lower than both neighbouring runs is a valley, represented by its first
// point. Returns the symbol-domain break each valley would place.
inline std::vector<std::size_t> valley_breaks(const std::vector<int>& symbol_levels) {
  struct Point {
    int level;
    std::size_t source;
    bool tail;
  };
  std::vector<Point> pts;
  for (std::size_t k = 0; k < symbol_levels.size(); ++k) {
    pts.push_back({symbol_levels[k], k, false});
    if (symbol_levels[k] == 5) pts.push_back({4, k, true});
  }
  struct Run {
    int level;
    std::size_t first;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (runs.empty() || runs.back().level != pts[i].level) runs.push_back({pts[i].level, i});
  }
  std::vector<std::size_t> out;
  for (std::size_t r = 1; r + 1 < runs.size(); ++r) {
    if (runs[r - 1].level > runs[r].level && runs[r + 1].level > runs[r].level) {
      const Point& p = pts[runs[r].first];
      out.push_back(p.tail ? p.source + 1 : p.source);
    }
  }
  return out;
}

inline bool vowel_in(const std::vector<int>& lv, std::size_t from, std::size_t to) {
  for (std::size_t k = from; k < to && k < lv.size(); ++k) {
    if (lv[k] == 5) return true;
  }
  return false;
}

// Every subset of valleys is tried; the answer is the subset that is a fixed
// point of the left-to-right rule: each valley is taken iff the syllable it
// closes (since the last taken break) and the remainder both hold a vowel.
// Returns nullopt when no subset, or more than one, qualifies.
inline std::optional<std::vector<std::size_t>> ssp_breaks(const std::vector<int>& lv) {
  const auto cand = valley_breaks(lv);
  std::optional<std::vector<std::size_t>> found;
  for (unsigned long mask = 0; mask < (1ul << cand.size()); ++mask) {
    std::vector<std::size_t> taken;
    bool consistent = true;
    std::size_t prev = 0;
    for (std::size_t c = 0; c < cand.size() && consistent; ++c) {
      const std::size_t b = cand[c];
      const bool allowed = b > prev && b < lv.size() && vowel_in(lv, prev, b) && vowel_in(lv, b, lv.size());
      const bool in_mask = (mask >> c) & 1ul;
      if (allowed != in_mask) consistent = false;
      if (in_mask) {
        taken.push_back(b);
        prev = b;
      }
    }
    if (!consistent) continue;
    if (found) return std::nullopt;
    found = taken;
  }
  return found;
}

// Calls fn on every level sequence over {1..5} with 1..max_len symbols.
template <typename Fn>
void for_all_level_sequences(std::size_t max_len, Fn fn) {
  std::vector<int> lv;
  const auto rec = [&](auto&& self) -> void {
    if (!lv.empty()) fn(lv);
    if (lv.size() == max_len) return;
    for (int level = 1; level <= 5; ++level) {
      lv.push_back(level);
      self(self);
      lv.pop_back();
    }
  };
  rec(rec);
}

}  // namespace sylla::oracle

#endif  // SYLLA_TESTS_SSP_ORACLE_HPP
