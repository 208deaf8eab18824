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

#include "sylla/ssp.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <string>
#include <vector>

#include "oracles/ssp_oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace sylla;
using sylla::testing::arpabet;

const SonorityHierarchy& arpa() {
  static const auto h = hierarchy_for(SymbolSet::cmu_arpabet, Language::en);
  return h;
}

Syllabification phones(const std::string& text) {
  return syllabify_symbols(arpabet(text).symbols(), arpa());
}

Syllabification spelled(const std::string& word) {
  return syllabify_symbols(utf8::split_graphemes(word), hierarchy_for(SymbolSet::letters, Language::en));
}

TEST(SspBreaks, Oceanic) {
  const auto s = phones("OW2 SH IY0 AE1 N IH0 K");
  EXPECT_EQ(s.breaks, (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_EQ(s.join(" ", " | "), "OW2 | SH IY0 | AE1 | N IH0 K");
}

TEST(SspBreaks, RhythmRejectsTrailingMinimum) {
  EXPECT_EQ(phones("R IH1 DH AH0 M").join(" ", " | "), "R IH1 | DH AH0 M");
}

TEST(SspBreaks, SentenceLetters) {
  EXPECT_EQ(spelled("sentence").join("", "|"), "sen|ten|ce");
}

TEST(SspBreaks, Leaves) { EXPECT_EQ(phones("L IY1 V Z").syllable_count(), 1u); }

TEST(SspBreaks, PlateauBreaksOnce) {
  // D AA1 K T ER0: the K T plateau yields one break, before K.
  EXPECT_EQ(phones("D AA1 K T ER0").join(" ", " | "), "D AA1 | K T ER0");
  EXPECT_EQ(spelled("little").join("", "|"), "li|ttle");
}

TEST(SspBreaks, NoNucleusMeansNoBreaks) {
  const auto s = phones("S T");
  EXPECT_TRUE(s.breaks.empty());
  EXPECT_EQ(s.syllable_count(), 1u);
  EXPECT_TRUE(phones("HH M").breaks.empty());
}

TEST(SspBreaks, EmptyInput) {
  const auto s = ssp_breaks(SonoritySequence{});
  EXPECT_EQ(s.syllable_count(), 0u);
}

TEST(CountNuclei, Examples) {
  EXPECT_EQ(count_nuclei(arpabet("L IY1 V Z"), arpa()), 1u);
  EXPECT_EQ(count_nuclei(arpabet("OW2 SH IY0 AE1 N IH0 K"), arpa()), 4u);
  EXPECT_EQ(count_nuclei(arpabet("S T"), arpa()), 0u);
  EXPECT_EQ(sylla::testing::error_kind([] { count_nuclei(arpabet("S XX"), arpa()); }),
            ErrorKind::unknown_symbol);
}

TEST(Syllabification, JoinAndSyllables) {
  const auto s = from_syllables(std::vector<std::vector<std::string>>{{"s", "e", "n"}, {}, {"t", "e"}});
  EXPECT_EQ(s.breaks, (std::vector<std::size_t>{3}));
  EXPECT_EQ(s.join("", "|"), "sen|te");
  EXPECT_EQ(s.syllables().size(), 2u);
  EXPECT_TRUE(s.well_formed());
}

using oracle::for_all_level_sequences;

TEST(SspOracle, MatchesBruteForceOnAllShortSequences) {
  std::size_t checked = 0;
  for_all_level_sequences(7, [&](const std::vector<int>& lv) {
    const auto expected = oracle::ssp_breaks(lv);
    ASSERT_TRUE(expected.has_value());
    const auto got = ssp_breaks(expand_levels(lv));
    ASSERT_EQ(got.breaks, *expected) << ::testing::PrintToString(lv);
    ++checked;
  });
  EXPECT_EQ(checked, 97655u);
}

TEST(SspProperty, NucleusConservationAndVowelfulSyllables) {
  for_all_level_sequences(7, [](const std::vector<int>& lv) {
    const auto seq = expand_levels(lv);
    const auto s = ssp_breaks(seq);
    const std::size_t nuclei = count_nuclei(seq);
    std::vector<std::string> symbols;
    for (int level : lv) symbols.push_back(std::to_string(level));
    Syllabification with_symbols{symbols, s.breaks};
    ASSERT_TRUE(with_symbols.well_formed());
    if (nuclei == 0) {
      ASSERT_TRUE(s.breaks.empty());
      return;
    }
    ASSERT_EQ(with_symbols.syllable_count(), nuclei) << ::testing::PrintToString(lv);
    for (const auto& syl : with_symbols.syllables()) {
      bool vowel = false;
      for (const auto& x : syl) vowel = vowel || x == "5";
      ASSERT_TRUE(vowel);
    }
  });
}

TEST(SspProperty, SibilantStopClustersStayWithTheirVowel) {
  for (const char* p : {"S K R IY1 M", "S T R EH1 NG K TH S", "S P L AE1 SH", "S T AA1 R",
                        "S K W EH1 R"}) {
    EXPECT_TRUE(phones(p).breaks.empty()) << p;
  }
  // Word-internal: the first minimum (K) wins; the later T minimum has no
  // vowel since that break and is rejected, so S T R stays with AH0.
  EXPECT_EQ(phones("EH1 K S T R AH0").join(" ", " | "), "EH1 | K S T R AH0");
}

TEST(SspProperty, Deterministic) {
  const auto a = phones("OW2 SH IY0 AE1 N IH0 K");
  for (int k = 0; k < 5; ++k) EXPECT_EQ(phones("OW2 SH IY0 AE1 N IH0 K"), a);
}

}  // namespace
