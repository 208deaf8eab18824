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

#include "sylla/lexicon.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace {

using namespace sylla;
using sylla::testing::arpabet;
using sylla::testing::data_path;
using sylla::testing::error_kind;

Lexicon parse_cmu(const std::string& text, bool lenient = false) {
  std::istringstream in(text);
  LoadOptions opts;
  opts.lenient = lenient;
  return parse_pron_dict(in, DictFormat::cmu, Language::en, opts);
}

TEST(PronDict, LoadsFixture) {
  const Lexicon lex = load_pron_dict(data_path("mini_cmudict.dict"), DictFormat::cmu, Language::en);
  EXPECT_EQ(lex.size(), 47u);
  EXPECT_EQ(lex.skipped_lines, 0u);
  const auto leaves = lex.lookup("leaves");
  ASSERT_TRUE(leaves);
  ASSERT_EQ(leaves->size(), 1u);
  EXPECT_EQ((*leaves)[0].to_string(), "L IY1 V Z");
  EXPECT_EQ((*leaves)[0].phones[1].symbol, "IY");
  EXPECT_EQ((*leaves)[0].phones[1].stress, 1);
  EXPECT_FALSE((*leaves)[0].phones[0].stress);
}

TEST(PronDict, VariantsInFileOrder) {
  const Lexicon lex = load_pron_dict(data_path("mini_cmudict.dict"), DictFormat::cmu, Language::en);
  const auto read = lex.lookup("read");
  ASSERT_TRUE(read);
  ASSERT_EQ(read->size(), 2u);
  EXPECT_EQ((*read)[0], arpabet("R EH1 D"));
  EXPECT_EQ((*read)[1], arpabet("R IY1 D"));
  EXPECT_EQ(lex.lookup("hundred")->size(), 4u);
}

TEST(PronDict, LookupIsCaseInsensitive) {
  const Lexicon lex = parse_cmu("LEAVES  L IY1 V Z\n");
  EXPECT_TRUE(lex.contains("leaves"));
  EXPECT_TRUE(lex.contains("Leaves"));
  EXPECT_FALSE(lex.contains("leave"));
  EXPECT_FALSE(lookup(lex, "zzz"));
}

TEST(PronDict, CommentsAndTrailingAnnotations) {
  const Lexicon lex = parse_cmu(";;; header\n\nabc  EY1 B IY1 S IY1 # abbrev\n");
  ASSERT_TRUE(lex.contains("abc"));
  EXPECT_EQ(lex.lookup("abc")->front().size(), 5u);
}

TEST(PronDict, StrictRejectsMalformedLines) {
  EXPECT_EQ(error_kind([] { parse_cmu("cat K AE1 T\ndog\n"); }), ErrorKind::parse);
  EXPECT_EQ(error_kind([] { parse_cmu("cat K AE9 T\n"); }), ErrorKind::parse);
  EXPECT_EQ(error_kind([] { parse_cmu("cat(x) K AE1 T\n"); }), ErrorKind::parse);
}

TEST(PronDict, ParseErrorNamesTheLine) {
  try {
    parse_cmu("cat K AE1 T\ndog\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(":2"), std::string::npos) << e.what();
  }
}

TEST(PronDict, LenientSkipsMalformedLines) {
  const Lexicon lex = parse_cmu("cat K AE1 T\ndog\ncow K AW1 q\nsaw S AO1\n", true);
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.skipped_lines, 2u);
  EXPECT_EQ(lex.warnings.size(), 2u);
}

TEST(PronDict, Latin1IsDecoded) {
  const Lexicon lex = parse_cmu("caf\xE9 K AE0 F EY1\n");
  EXPECT_TRUE(lex.contains("caf\xC3\xA9"));
}

TEST(PronDict, MfaLayouts) {
  std::istringstream in("b\xC3\xA2teau\tb a t o\nchat\t0.99\t\xCA\x83 a\nmot m o\n");
  const Lexicon lex = parse_pron_dict(in, DictFormat::mfa, Language::fr);
  EXPECT_EQ(lex.phoneset(), PhoneSet::mfa_ipa);
  EXPECT_EQ(lex.lookup("b\xC3\xA2teau")->front().to_string(), "b a t o");
  EXPECT_EQ(lex.lookup("chat")->front().to_string(), "\xCA\x83 a");
  EXPECT_EQ(lex.lookup("mot")->front().to_string(), "m o");
}

TEST(PronDict, MissingFileIsIoError) {
  EXPECT_EQ(error_kind([] { load_pron_dict("/nonexistent/dict", DictFormat::cmu, Language::en); }),
            ErrorKind::io);
}

TEST(PronDictProperty, WriteThenLoadRoundTrips) {
  const Lexicon lex = load_pron_dict(data_path("mini_cmudict.dict"), DictFormat::cmu, Language::en);
  std::ostringstream out;
  for (const auto& w : lex.words()) {
    const auto prons = *lex.lookup(w);
    for (std::size_t k = 0; k < prons.size(); ++k) {
      out << w;
      if (k > 0) out << '(' << k + 1 << ')';
      out << "  " << prons[k].to_string() << '\n';
    }
  }
  const Lexicon again = parse_cmu(out.str());
  ASSERT_EQ(again.words(), lex.words());
  for (const auto& w : lex.words()) {
    const auto a = *lex.lookup(w);
    const auto b = *again.lookup(w);
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end())) << w;
  }
}

TEST(ScCorrection, MergesVowellessSyllables) {
  using V = std::vector<std::string>;
  EXPECT_EQ(sc_correction({"s", "tar"}, Language::en), (V{"star"}));
  EXPECT_EQ(sc_correction({"rhyth", "m"}, Language::en), (V{"rhythm"}));
  EXPECT_EQ(sc_correction({"ex", "tra"}, Language::en), (V{"ex", "tra"}));
  EXPECT_EQ(sc_correction({"s", "truc", "ture"}, Language::fr), (V{"struc", "ture"}));
  EXPECT_EQ(sc_correction({"hmm"}, Language::en), (V{"hmm"}));
  EXPECT_EQ(sc_correction({"a", "b", "c"}, Language::en), (V{"abc"}));
  EXPECT_EQ(sc_correction({"s", "\xC3\xA9"}, Language::fr), (V{"s\xC3\xA9"}));
}

TEST(ScCorrectionProperty, IdempotentConcatPreservingVowelful) {
  std::mt19937 gen(7);
  const std::vector<std::string> pieces = {"s", "t", "a", "ro", "ng", "e", "th", "ia", "r"};
  for (int n = 0; n < 2000; ++n) {
    std::vector<std::string> syl;
    const int len = 1 + static_cast<int>(gen() % 6);
    for (int k = 0; k < len; ++k) syl.push_back(pieces[gen() % pieces.size()]);
    const auto fixed = sc_correction(syl, Language::en);
    EXPECT_EQ(sc_correction(fixed, Language::en), fixed);
    std::string a, b;
    for (const auto& s : syl) a += s;
    for (const auto& s : fixed) b += s;
    EXPECT_EQ(a, b);
    EXPECT_LE(fixed.size(), syl.size());
    if (fixed.size() > 1) {
      for (const auto& s : fixed) EXPECT_TRUE(contains_vowel_letter(s, Language::en)) << a;
    }
  }
}

TEST(SyllabifiedCorpus, HyphenationList) {
  CorpusFormat format;
  format.separator = "\xC2\xB7";
  const auto corpus = load_syllabified_corpus(data_path("mini_hyph.txt"), format, Language::en);
  EXPECT_EQ(corpus.skipped_rows, 0u);
  EXPECT_EQ(corpus.size(), 8u);
  EXPECT_EQ(std::vector<std::string>(corpus.lookup("oceanic")->begin(), corpus.lookup("oceanic")->end()),
            (std::vector<std::string>{"o", "cean", "ic"}));
  EXPECT_EQ(corpus.lookup("star")->size(), 1u);
  EXPECT_EQ(corpus.lookup("rhythm")->size(), 1u);
  EXPECT_EQ(corpus.lookup("Sentence")->size(), 2u);
}

TEST(SyllabifiedCorpus, TsvWithHeaderAndSkippedRows) {
  CorpusFormat format;
  format.word_column = 0;
  format.syll_column = 2;
  format.skip_header = true;
  const auto corpus = load_syllabified_corpus(data_path("mini_lexique.tsv"), format, Language::fr);
  EXPECT_EQ(corpus.size(), 3u);
  EXPECT_EQ(corpus.skipped_rows, 1u);
  EXPECT_FALSE(corpus.lookup("mauvais"));
  EXPECT_EQ(std::vector<std::string>(corpus.lookup("structure")->begin(), corpus.lookup("structure")->end()),
            (std::vector<std::string>{"struc", "ture"}));
}

TEST(SyllabifiedCorpus, DuplicatesKeepFirst) {
  std::istringstream in("ta-ble\nt-able\n");
  const auto corpus = parse_syllabified_corpus(in, CorpusFormat{}, Language::en);
  EXPECT_EQ(corpus.duplicate_rows, 1u);
  EXPECT_EQ(corpus.lookup("table")->front(), "ta");
}

TEST(SyllabifiedCorpus, EmptySeparatorIsConfigurationError) {
  CorpusFormat format;
  format.separator.clear();
  std::istringstream in("a-b\n");
  EXPECT_EQ(error_kind([&] { parse_syllabified_corpus(in, format, Language::en); }),
            ErrorKind::configuration);
}

TEST(SyllabifiedCorpusProperty, EntriesReconcatenateAndHaveVowels) {
  CorpusFormat format;
  format.separator = "\xC2\xB7";
  const auto corpus = load_syllabified_corpus(data_path("mini_hyph.txt"), format, Language::en);
  for (const auto& [word, syl] : corpus.entries()) {
    std::string joined;
    for (const auto& s : syl) joined += s;
    EXPECT_EQ(joined, word);
    if (syl.size() > 1) {
      for (const auto& s : syl) EXPECT_TRUE(contains_vowel_letter(s, Language::en)) << word;
    }
  }
}

}  // namespace
