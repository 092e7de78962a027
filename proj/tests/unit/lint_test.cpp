// Copyright 2026 The lyreval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lint.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "corpusio.hpp"

namespace lyreval::lint {
namespace {

std::vector<std::pair<Rule, std::size_t>> rules_of(std::string_view text) {
  std::vector<std::pair<Rule, std::size_t>> out;
  for (const auto& d : lint_lyrics(text, "en")) out.emplace_back(d.rule, d.line);
  return out;
}

using Found = std::vector<std::pair<Rule, std::size_t>>;

TEST(LintTest, LowercaseLineStart) {
  EXPECT_EQ(rules_of("people gon' hate, let 'em do it"),
            (Found{{Rule::kLineCapitalization, 1}}));
}

TEST(LintTest, TerminalComma) {
  EXPECT_EQ(rules_of("Life goes on,"), (Found{{Rule::kLineEndPunctuation, 1}}));
}

TEST(LintTest, CompliantText) {
  EXPECT_TRUE(lint_lyrics("(Oh yeah)\n\nBye", "en").empty());
  EXPECT_TRUE(lint_lyrics("", "en").empty());
  EXPECT_TRUE(lint_lyrics("Wait for it...\nWhy?\nHey!\n", "en").empty());
}

TEST(LintTest, CapitalizationSkipsOpeningPunctuation) {
  EXPECT_EQ(rules_of("(y a pas)"), (Found{{Rule::kLineCapitalization, 1}}));
  EXPECT_TRUE(lint_lyrics("\xC2\xBF" "D\xC3\xB3nde est\xC3\xA1s?", "es").empty());
  EXPECT_EQ(rules_of("\xC2\xA1" "ay!"), (Found{{Rule::kLineCapitalization, 1}}));
  EXPECT_TRUE(lint_lyrics("\"Hey\"", "en").empty());
  EXPECT_TRUE(lint_lyrics("99 problems", "en").empty());
}

TEST(LintTest, LineEndSkipsClosingParenthesis) {
  EXPECT_EQ(rules_of("Oh (yeah,)"), (Found{{Rule::kLineEndPunctuation, 1}}));
  EXPECT_EQ(rules_of("Oh yeah. (ah)"), Found{});
  EXPECT_EQ(rules_of("The end."), (Found{{Rule::kLineEndPunctuation, 1}}));
  EXPECT_EQ(rules_of("Trailing off..."), Found{});
}

TEST(LintTest, SectionSpacing) {
  EXPECT_EQ(rules_of("A\n\n\nB"), (Found{{Rule::kSectionSpacing, 3}}));
  EXPECT_EQ(rules_of("\nA"), (Found{{Rule::kSectionSpacing, 1}}));
  EXPECT_EQ(rules_of("A\n\n"), (Found{{Rule::kSectionSpacing, 2}}));
  EXPECT_EQ(rules_of("A\n"), Found{});
}

TEST(LintTest, ParenthesesBalancePerSection) {
  EXPECT_TRUE(lint_lyrics("(Across\nTwo lines)", "en").empty());
  EXPECT_EQ(rules_of("(Open\n\nClose)"),
            (Found{{Rule::kParenBalance, 1}, {Rule::kParenBalance, 3}}));
  const auto d = lint_lyrics("Oh)", "en");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_FALSE(d[0].fixable);
}

TEST(LintTest, TrailingWhitespace) {
  EXPECT_EQ(rules_of("Hey \nYou\t"),
            (Found{{Rule::kTrailingWhitespace, 1}, {Rule::kTrailingWhitespace, 2}}));
  EXPECT_TRUE(lint_lyrics("Hey\r\nYou\r\n", "en").empty());
}

TEST(AutofixTest, Examples) {
  const std::string a = "hello world,";
  EXPECT_EQ(autofix(a, lint_lyrics(a, "en")), "Hello world");

  const std::string ok = "(Oh yeah)\n\nBye\n";
  EXPECT_EQ(autofix(ok, lint_lyrics(ok, "en")), ok);

  const std::string b = "A\n\n\nB";
  EXPECT_EQ(autofix(b, lint_lyrics(b, "en")), "A\n\nB");
}

TEST(AutofixTest, KeepsParenthesisAndUnfixableProblems) {
  const std::string t = "oh (yeah ,)\n(never closed \n";
  EXPECT_EQ(autofix(t, lint_lyrics(t, "en")), "Oh (yeah)\n(Never closed\n");
}

TEST(AutofixTest, StrippingPunctuationCanEmptyALine) {
  const std::string t = "A\n,\n\nB";
  const std::string fixed = autofix(t, lint_lyrics(t, "en"));
  EXPECT_EQ(fixed, "A\n\nB");
}

TEST(LintPropertyTest, AutofixLeavesNoFixableDiagnostics) {
  static const char* kPieces[] = {"a", "B", "\xC3\xA9", "\xC3\x9F", " ", "\t", "\n", "\n\n",
                                  "\n\n\n", ",", ".", "...", "(", ")", "?", "\xC2\xBF", "'"};
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPieces) - 1);
  std::uniform_int_distribution<int> len(0, 30);
  for (int iter = 0; iter < 3000; ++iter) {
    std::string text;
    for (int i = len(rng); i > 0; --i) text += kPieces[pick(rng)];
    const auto diagnostics = lint_lyrics(text, "en");

    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    if (!text.empty() && text.back() != '\n') ++lines;
    for (const auto& d : diagnostics) {
      ASSERT_GE(d.line, 1u);
      ASSERT_LE(d.line, lines) << "text: " << text;
    }

    const std::string fixed = autofix(text, diagnostics);
    for (const auto& d : lint_lyrics(fixed, "en")) {
      ASSERT_FALSE(d.fixable) << "text: [" << text << "] fixed: [" << fixed << "] rule "
                              << rule_name(d.rule) << " line " << d.line;
    }
    ASSERT_EQ(autofix(fixed, lint_lyrics(fixed, "en")), fixed);
  }
}

TEST(LintFixtureTest, ReferenceCorpusIsClean) {
  namespace fs = std::filesystem;
  const fs::path refs = fs::path(LYREVAL_FIXTURES_DIR) / "corpus" / "refs";
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(refs)) {
    if (entry.path().extension() != ".txt") continue;
    ++files;
    const auto d = lint_lyrics(corpusio::read_text_file(entry.path()), "");
    EXPECT_TRUE(d.empty()) << entry.path() << ": " << rule_name(d.front().rule) << " line "
                           << d.front().line;
  }
  EXPECT_GE(files, 5u);
}

}  // namespace
}  // namespace lyreval::lint
