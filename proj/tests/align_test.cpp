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

#include "sylla/align.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/dtw_oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace sylla;
using sylla::testing::arpabet;
using sylla::testing::error_kind;
using oracle::Pairs;

const SonorityHierarchy& arpa() {
  static const auto h = hierarchy_for(SymbolSet::cmu_arpabet, Language::en);
  return h;
}

const SonorityHierarchy& en_letters() {
  static const auto h = hierarchy_for(SymbolSet::letters, Language::en);
  return h;
}

WordAlignment align(const std::string& word, const std::string& phones) {
  return ssp_dtw_syllabify(word, arpabet(phones), arpa(), en_letters());
}

std::string text(const WordAlignment& wa) { return wa.text_syll.join("", "|"); }

using oracle::all_paths;
using oracle::backward_codes;

TEST(Dtw, IdenticalSequencesGoDiagonal) {
  const std::vector<int> a = {3, 5, 4, 2, 1, 5, 4};
  const auto r = dtw_levels(a, a);
  EXPECT_EQ(r.cost, 0);
  ASSERT_EQ(r.path.pairs.size(), a.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(r.path.pairs[k], std::make_pair(k, k));
}

TEST(Dtw, OneAgainstThree) {
  const std::vector<int> a = {5};
  const std::vector<int> b = {5, 4, 5};
  const auto r = dtw_levels(a, b);
  EXPECT_EQ(r.path.pairs, (Pairs{{0, 0}, {0, 1}, {0, 2}}));
  EXPECT_EQ(r.cost, 1);
}

TEST(Dtw, EmptyInputIsContractViolation) {
  const std::vector<int> a = {1};
  const std::vector<int> none;
  EXPECT_EQ(error_kind([&] { dtw_levels(a, none); }), ErrorKind::contract_violation);
  EXPECT_EQ(error_kind([&] { dtw_levels(none, a); }), ErrorKind::contract_violation);
}

TEST(Dtw, SentenceMatchesBruteForce) {
  const std::vector<int> a = {3, 5, 4, 2, 1, 5, 4, 2, 3};
  const std::vector<int> b = {3, 5, 4, 2, 1, 5, 4, 2, 1, 5, 4};
  const auto r = dtw_levels(a, b);
  ASSERT_TRUE(r.path.valid(a.size(), b.size()));
  EXPECT_EQ(path_cost(r.path, a, b), r.cost);
  EXPECT_EQ(r.cost, oracle::min_path_cost(a, b));
}

std::vector<int> random_levels(std::mt19937& gen, std::size_t symbols) {
  std::vector<int> lv;
  for (std::size_t k = 0; k < symbols; ++k) lv.push_back(1 + static_cast<int>(gen() % 5));
  return expand_levels(lv).levels();
}

TEST(DtwProperty, CostIsMinimalOverAllPaths) {
  std::mt19937 gen(99);
  for (int n = 0; n < 300; ++n) {
    auto a = random_levels(gen, 1 + gen() % 7);
    auto b = random_levels(gen, 1 + gen() % 7);
    a.resize(std::min<std::size_t>(a.size(), 12));
    b.resize(std::min<std::size_t>(b.size(), 12));
    const auto r = dtw_levels(a, b);
    ASSERT_TRUE(r.path.valid(a.size(), b.size()));
    ASSERT_EQ(path_cost(r.path, a, b), r.cost);
    ASSERT_EQ(r.cost, oracle::min_path_cost(a, b));
  }
}

TEST(DtwProperty, TieBreakPicksPreferredOptimalPath) {
  std::mt19937 gen(5);
  for (int n = 0; n < 400; ++n) {
    const auto a = random_levels(gen, 1 + gen() % 4);
    const auto b = random_levels(gen, 1 + gen() % 4);
    const auto r = dtw_levels(a, b);
    const auto paths = all_paths(a, b);
    const Pairs* preferred = nullptr;
    long best = std::numeric_limits<long>::max();
    for (const auto& [cost, p] : paths) best = std::min(best, cost);
    for (const auto& [cost, p] : paths) {
      if (cost != best) continue;
      if (!preferred || backward_codes(p) < backward_codes(*preferred)) preferred = &p;
    }
    ASSERT_EQ(r.path.pairs, *preferred);
  }
}

TEST(Project, Sentence) {
  const auto wa = align("sentence", "S EH1 N T AH0 N S");
  EXPECT_EQ(wa.phone_syll.breaks, (std::vector<std::size_t>{3}));
  EXPECT_EQ(wa.text_syll.breaks, (std::vector<std::size_t>{3}));
  EXPECT_EQ(text(wa), "sen|tence");
  EXPECT_FALSE(wa.degenerate);
}

TEST(Project, Oceanic) {
  const auto wa = align("oceanic", "OW2 SH IY0 AE1 N IH0 K");
  EXPECT_EQ(text(wa), "o|ce|a|nic");
  EXPECT_FALSE(wa.degenerate);
}

TEST(Project, Leaves) {
  const auto wa = align("leaves", "L IY1 V Z");
  EXPECT_EQ(text(wa), "leaves");
  EXPECT_FALSE(wa.degenerate);
}

// The phone side has two syllables, but the schwa has no letter; the only
// projected cut would leave "thm" without a vowel letter, so it is dropped.
TEST(Project, RhythmDegradesToOneSyllable) {
  const auto wa = align("rhythm", "R IH1 DH AH0 M");
  EXPECT_EQ(wa.phone_syll.syllable_count(), 2u);
  EXPECT_EQ(wa.text_syll.syllable_count(), 1u);
  EXPECT_EQ(text(wa), "rhythm");
  EXPECT_TRUE(wa.degenerate);
}

TEST(Project, NoPhoneBreaksNoLetterBreaks) {
  const auto wa = align("strengths", "S T R EH1 NG K TH S");
  EXPECT_TRUE(wa.text_syll.breaks.empty());
  EXPECT_FALSE(wa.degenerate);
}

TEST(Project, MarksStayWithThePrecedingLetter) {
  const auto wa = align("o'hara", "OW0 HH EH1 R AH0");
  EXPECT_EQ(text(wa), "o'|ha|ra");
}

TEST(Project, DuplicateCutsAreFlagged) {
  // Two phone breaks landing on the only letter gap.
  const std::vector<int> phone_levels = {5, 1, 5, 1, 5};
  const std::vector<int> letter_levels = {5, 1, 5};
  auto pseq = expand_levels(phone_levels);
  auto lseq = expand_levels(letter_levels);
  lseq.symbols = {"a", "t", "a"};
  Syllabification ps;
  ps.symbols = {"A", "T", "A", "T", "A"};
  ps.breaks = {1, 3};
  AlignmentPath path;
  path.pairs = {{0, 0}, {1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 3}, {7, 4}};
  const auto proj = project_breaks(ps, path, pseq, lseq);
  EXPECT_EQ(proj.letters.breaks, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(proj.degenerate);
}

TEST(Alignment, DebugDump) {
  const auto wa = align("leaves", "L IY1 V Z");
  std::ostringstream out;
  write_alignment_tsv(out, "leaves", wa);
  const std::string dump = out.str();
  EXPECT_EQ(dump.substr(0, 14), "leaves\t0\t0\t4\t4");
  EXPECT_EQ(static_cast<std::size_t>(std::count(dump.begin(), dump.end(), '\n')),
            wa.alignment.path.pairs.size());
}

TEST(Alignment, UnknownSymbolsPropagate) {
  EXPECT_EQ(error_kind([] { align("b4", "B IY1 F AO1 R"); }), ErrorKind::unknown_symbol);
  EXPECT_EQ(error_kind([] { align("", "B IY1"); }), ErrorKind::contract_violation);
}

// Random spellings against random pronunciations.
TEST(ProjectProperty, CountBoundAndConcatenation) {
  std::mt19937 gen(2024);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz'";
  const std::vector<std::string> phone_inventory = {"AA1", "IY0", "ER0", "AH0", "S", "T", "R",
                                                     "N", "M", "L", "K", "DH", "W", "Z"};
  for (int n = 0; n < 3000; ++n) {
    std::string word;
    const std::size_t wl = 1 + gen() % 10;
    for (std::size_t k = 0; k < wl; ++k) word.push_back(alphabet[gen() % (k == 0 ? 26 : alphabet.size())]);
    Pronunciation pron;
    const std::size_t pl = 1 + gen() % 9;
    for (std::size_t k = 0; k < pl; ++k) {
      pron.phones.push_back(parse_phone(phone_inventory[gen() % phone_inventory.size()], PhoneSet::cmu_arpabet));
    }
    const auto wa = ssp_dtw_syllabify(word, pron, arpa(), en_letters());
    ASSERT_TRUE(wa.text_syll.well_formed()) << word;
    EXPECT_EQ(wa.text_syll.join("", ""), word);
    EXPECT_LE(wa.text_syll.syllable_count(), wa.phone_syll.syllable_count()) << word << " " << pron.to_string();
    if (!wa.degenerate) {
      EXPECT_EQ(wa.text_syll.syllable_count(), wa.phone_syll.syllable_count())
          << word << " " << pron.to_string();
    }
    const auto again = ssp_dtw_syllabify(word, pron, arpa(), en_letters());
    EXPECT_EQ(again.text_syll, wa.text_syll);
  }
}

TEST(ProjectProperty, FixtureDictionary) {
  const auto lex = load_pron_dict(sylla::testing::data_path("mini_cmudict.dict"), DictFormat::cmu, Language::en);
  for (const auto& w : lex.words()) {
    for (const auto& pron : *lex.lookup(w)) {
      const auto wa = ssp_dtw_syllabify(w, pron, arpa(), en_letters());
      EXPECT_EQ(wa.text_syll.join("", ""), w);
      EXPECT_LE(wa.text_syll.syllable_count(), wa.phone_syll.syllable_count()) << w;
    }
  }
}

}  // namespace
