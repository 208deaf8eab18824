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

#include "sylla/g2p.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace {

using namespace sylla;

FallbackConfig sh(const std::string& command) {
  FallbackConfig c;
  c.command = command;
  return c;
}

TEST(RunCommand, PipesStdinToStdout) {
  const auto out = run_command("tr a-z A-Z", "abc\n");
  EXPECT_EQ(out.exit_status, 0);
  EXPECT_EQ(out.out, "ABC\n");
}

TEST(RunCommand, LargeInputDoesNotDeadlock) {
  std::string input;
  for (int k = 0; k < 20000; ++k) input += "word" + std::to_string(k) + "\n";
  const auto out = run_command("cat", input);
  EXPECT_EQ(out.out, input);
}

TEST(G2pFallback, DisabledWithoutCommand) {
  const auto r = g2p_fallback("blick", FallbackConfig{});
  EXPECT_FALSE(r.available());
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(G2pFallback, OneLinePerWord) {
  const std::vector<std::string> words = {"blick", "zorp"};
  const auto r = g2p_fallback_batch(words, sh("sed -e 's/blick/B L IH1 K/' -e 's/zorp/Z AO1 R P/'"));
  ASSERT_EQ(r.size(), 2u);
  ASSERT_TRUE(r[0].available());
  EXPECT_EQ(r[0].pronunciation->to_string(), "B L IH1 K");
  EXPECT_EQ(r[1].pronunciation->phones.size(), 4u);
}

TEST(G2pFallback, EmptyLineMeansUnavailable) {
  const std::vector<std::string> words = {"blick", "zorp"};
  const auto r = g2p_fallback_batch(words, sh("sed -e 's/blick/B L IH1 K/' -e 's/zorp//'"));
  EXPECT_TRUE(r[0].available());
  EXPECT_FALSE(r[1].available());
}

TEST(G2pFallback, NonzeroExitFailsAll) {
  const std::vector<std::string> words = {"blick"};
  const auto r = g2p_fallback_batch(words, sh("cat; exit 3"));
  EXPECT_FALSE(r[0].available());
  EXPECT_NE(r[0].diagnostic.find("3"), std::string::npos);
}

TEST(G2pFallback, LineCountMismatchFailsAll) {
  const std::vector<std::string> words = {"a", "b"};
  const auto r = g2p_fallback_batch(words, sh("head -n 1 >/dev/null; echo 'EY1'"));
  EXPECT_FALSE(r[0].available());
  EXPECT_FALSE(r[1].available());
}

TEST(G2pFallback, MissingCommand) {
  EXPECT_FALSE(g2p_fallback("blick", sh("/nonexistent/g2p")).available());
}

}  // namespace
