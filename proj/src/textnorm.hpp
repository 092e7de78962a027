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

// Lyric text normalization and tokenization.
//
// A lyric document becomes a flat token stream of five kinds: words,
// punctuation marks, round parentheses, and the two layout tokens for a
// line break and a section break (a single blank line in the source).
// Words keep their original spelling alongside a lowercased form that is
// used for matching, so case can be scored separately from content.

#ifndef LYREVAL_TEXTNORM_HPP_
#define LYREVAL_TEXTNORM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lyreval::textnorm {

enum class TokenType : uint8_t {
  kWord,
  kPunctuation,
  kParenthesis,
  kLineBreak,
  kSectionBreak,
};

inline constexpr std::size_t kNumTokenTypes = 5;
inline constexpr std::array<TokenType, kNumTokenTypes> kAllTokenTypes = {
    TokenType::kWord, TokenType::kPunctuation, TokenType::kParenthesis,
    TokenType::kLineBreak, TokenType::kSectionBreak};

// One-letter code: W, P, B, L, S.
char token_type_code(TokenType type);
bool is_break(TokenType type);

struct Token {
  TokenType type = TokenType::kWord;
  std::string original;  // empty for breaks
  std::string matched;   // lowercased for words, == original for P/B
  std::size_t line_index = 0;
  std::size_t char_offset = 0;  // code points from the start of the line

  static Token line_break(std::size_t line, std::size_t offset);
  static Token section_break(std::size_t line, std::size_t offset);
};

struct TokenSequence {
  std::vector<Token> tokens;
  std::string language;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const Token& operator[](std::size_t i) const { return tokens[i]; }
};

enum class CharClass { kLetterOrDigit, kParenthesis, kPunctuation, kSpace };

std::string normalize(std::string_view raw, std::string_view language);

// Expects normalized input, but tolerates stray whitespace-only lines and
// blank-line runs (treated as one section break).
TokenSequence tokenize(std::string_view normalized, std::string_view language);

CharClass classify_char_class(char32_t ch);

TokenSequence words_only(const TokenSequence& seq);

// "[W:Hello][P:,][L]..." for logs and test failure messages.
std::string debug_string(const TokenSequence& seq);

// Checks the TokenSequence and Token invariants; returns an empty string
// when they hold, otherwise a description of the first violation.
std::string check_invariants(const TokenSequence& seq);

}  // namespace lyreval::textnorm

#endif  // LYREVAL_TEXTNORM_HPP_
