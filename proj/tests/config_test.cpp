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

#include "sylla/config.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace {

using namespace sylla;
using sylla::testing::data_path;
using sylla::testing::error_kind;

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::ofstream(path) << content;
  return path;
}

TEST(Config, Defaults) {
  const RunConfig c;
  EXPECT_EQ(c.language(), Language::en);
  EXPECT_EQ(c.method, Strategy::lkp_ssp_dtw);
  EXPECT_EQ(c.sample_size, 1000u);
  EXPECT_FALSE(c.seed);
}

TEST(Config, Settings) {
  RunConfig c;
  apply_setting(c, "language", "fr_FR");
  apply_setting(c, "method", "ssp-dtw");
  apply_setting(c, "seed", "42");
  apply_setting(c, "lenient", "yes");
  apply_setting(c, "corpus_delimiter", "comma");
  apply_setting(c, "corpus_word_column", "none");
  apply_setting(c, "output_format", "json");
  EXPECT_EQ(c.language(), Language::fr);
  EXPECT_EQ(c.method, Strategy::ssp_dtw);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_TRUE(c.lenient);
  EXPECT_EQ(c.corpus_format.delimiter, ',');
  EXPECT_EQ(c.corpus_format.word_column, -1);
  EXPECT_EQ(c.output_format, OutputFormat::json);
  apply_setting(c, "corpus", "");
  EXPECT_FALSE(c.corpus_path);
}

TEST(Config, BadValues) {
  RunConfig c;
  EXPECT_EQ(error_kind([&] { apply_setting(c, "colour", "red"); }), ErrorKind::configuration);
  EXPECT_EQ(error_kind([&] { apply_setting(c, "seed", "-3"); }), ErrorKind::configuration);
  EXPECT_EQ(error_kind([&] { apply_setting(c, "lenient", "maybe"); }), ErrorKind::configuration);
  EXPECT_EQ(error_kind([&] { apply_setting(c, "language", "de_DE"); }), ErrorKind::configuration);
  EXPECT_EQ(error_kind([&] { apply_setting(c, "output_format", "xml"); }), ErrorKind::configuration);
  EXPECT_EQ(error_kind([&] { apply_setting(c, "corpus_separator", ""); }), ErrorKind::configuration);
}

TEST(ConfigFile, KeyValueLines) {
  const auto path = write_temp("run.toml",
                               "# run\n[sylla]\nlanguage = \"en_GB\"\nseed = 7 # pinned\n"
                               "corpus_separator = \"#\"\n\nsample_size=12\n");
  RunConfig c;
  apply_config_file(c, path);
  EXPECT_EQ(c.language_variant, "en_GB");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.corpus_format.separator, "#");
  EXPECT_EQ(c.sample_size, 12u);
  EXPECT_EQ(error_kind([] { read_config_file(write_temp("bad.toml", "just words\n")); }), ErrorKind::parse);
  EXPECT_EQ(error_kind([] { read_config_file("/nonexistent.toml"); }), ErrorKind::io);
}

TEST(LoadResources, FixtureWithCorpus) {
  RunConfig c;
  c.dict_path = data_path("mini_cmudict.dict");
  c.corpus_path = data_path("mini_hyph.txt");
  c.corpus_format.separator = "\xC2\xB7";
  std::vector<std::string> warnings;
  const Resources res = load_resources(c, &warnings);
  EXPECT_EQ(res.lexicon.size(), 47u);
  ASSERT_TRUE(res.corpus);
  EXPECT_EQ(res.corpus->size(), 8u);
  EXPECT_TRUE(warnings.empty());
}

TEST(LoadResources, RelativePathsUseResourceRoot) {
  RunConfig c;
  c.resource_root = SYLLA_TEST_DATA;
  c.dict_path = "mini_cmudict.dict";
  c.method = Strategy::ssp_dtw;
  EXPECT_EQ(load_resources(c).lexicon.size(), 47u);
}

TEST(LoadResources, Failures) {
  RunConfig c;
  EXPECT_EQ(error_kind([&] { load_resources(c); }), ErrorKind::configuration);
  c.dict_path = "/nonexistent/cmudict.dict";
  EXPECT_EQ(error_kind([&] { load_resources(c); }), ErrorKind::io);
  c.dict_path = data_path("mini_cmudict.dict");
  c.language_variant = "fr_FR";
  EXPECT_EQ(error_kind([&] { load_resources(c); }), ErrorKind::configuration);
}

TEST(LoadResources, LkpWithoutCorpusWarns) {
  RunConfig c;
  c.dict_path = data_path("mini_cmudict.dict");
  std::vector<std::string> warnings;
  load_resources(c, &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("lkp-ssp-dtw"), std::string::npos);
}

}  // namespace
