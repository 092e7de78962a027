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

#include "textnorm.hpp"

#include "unicode.hpp"

namespace lyreval::textnorm {

namespace {

bool is_newline(char32_t c) {
  return c == U'\n' || c == U'\r' || c == U'\u0085' || c == U'\u2028' ||
         c == U'\u2029';
}

// Character-level substitutions applied after canonical composition.
void append_mapped(std::u32string& out, char32_t c) {
  switch (c) {
    case U'\u2018':  // left single quote
    case U'\u2019':  // right single quote
    case U'\u201A':
    case U'\u201B':
      out.push_back(U'\'');
      return;
    case U'\u201C':  // left double quote
    case U'\u201D':  // right double quote
    case U'\u201E':
    case U'\u201F':
    case U'\u00AB':  // guillemets
    case U'\u00BB':
      out.push_back(U'"');
      return;
    case U'\u2013':  // en dash
    case U'\u2014':  // em dash
      out.push_back(U'-');
      return;
    case U'\u2026':  // horizontal ellipsis
      out.append(U"...");
      return;
    default:
      break;
  }
  if (unicode::is_space(c)) {
    out.push_back(U' ');
  } else {
    out.push_back(c);
  }
}

std::vector<std::u32string> split_lines(std::u32string_view text) {
  std::vector<std::u32string> lines(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t c = text[i];
    if (is_newline(c)) {
      if (c == U'\r' && i + 1 < text.size() && text[i + 1] == U'\n') ++i;
      lines.emplace_back();
    } else {
      lines.back().push_back(c);
    }
  }
  return lines;
}

std::u32string squeeze_spaces(const std::u32string& line) {
  std::u32string out;
  out.reserve(line.size());
  for (char32_t c : line) {
    if (c == U' ' && (out.empty() || out.back() == U' ')) continue;
    out.push_back(c);
  }
  if (!out.empty() && out.back() == U' ') out.pop_back();
  return out;
}

bool is_blank(std::u32string_view line) {
  for (char32_t c : line) {
    if (!unicode::is_space(c)) return false;
  }
  return true;
}

bool word_internal_apostrophe(std::u32string_view chunk, std::size_t k) {
  if (chunk[k] != U'\'') return false;
  if (k > 0 && unicode::is_letter(chunk[k - 1])) return true;
  return k + 1 < chunk.size() && unicode::is_letter(chunk[k + 1]);
}

bool belongs_to_word(std::u32string_view chunk, std::size_t k) {
  return classify_char_class(chunk[k]) == CharClass::kLetterOrDigit ||
         word_internal_apostrophe(chunk, k);
}

Token symbol_token(char32_t c, std::size_t line, std::size_t offset) {
  Token t;
  t.type = classify_char_class(c) == CharClass::kParenthesis
               ? TokenType::kParenthesis
               : TokenType::kPunctuation;
  unicode::append(t.original, c);
  t.matched = t.original;
  t.line_index = line;
  t.char_offset = offset;
  return t;
}

void tokenize_chunk(std::u32string_view chunk, std::size_t line,
                    std::size_t offset, std::vector<Token>& out) {
  std::size_t begin = 0;
  std::size_t end = chunk.size();
  while (begin < end && !belongs_to_word(chunk, begin)) {
    out.push_back(symbol_token(chunk[begin], line, offset + begin));
    ++begin;
  }
  std::size_t word_end = end;
  while (word_end > begin && !belongs_to_word(chunk, word_end - 1)) --word_end;
  if (word_end > begin) {
    Token w;
    w.type = TokenType::kWord;
    w.original = unicode::encode(chunk.substr(begin, word_end - begin));
    w.matched = unicode::to_lower(w.original);
    w.line_index = line;
    w.char_offset = offset + begin;
    out.push_back(std::move(w));
  }
  for (std::size_t k = word_end; k < end; ++k) {
    out.push_back(symbol_token(chunk[k], line, offset + k));
  }
}

}  // namespace

char token_type_code(TokenType type) {
  switch (type) {
    case TokenType::kWord: return 'W';
    case TokenType::kPunctuation: return 'P';
    case TokenType::kParenthesis: return 'B';
    case TokenType::kLineBreak: return 'L';
    case TokenType::kSectionBreak: return 'S';
  }
  return '?';
}

bool is_break(TokenType type) {
  return type == TokenType::kLineBreak || type == TokenType::kSectionBreak;
}

Token Token::line_break(std::size_t line, std::size_t offset) {
  Token t;
  t.type = TokenType::kLineBreak;
  t.line_index = line;
  t.char_offset = offset;
  return t;
}

Token Token::section_break(std::size_t line, std::size_t offset) {
  Token t = line_break(line, offset);
  t.type = TokenType::kSectionBreak;
  return t;
}

std::string normalize(std::string_view raw, std::string_view /*language*/) {
  const std::u32string composed = unicode::decode(unicode::nfc(raw));

  std::u32string mapped;
  mapped.reserve(composed.size());
  for (std::size_t i = 0; i < composed.size(); ++i) {
    const char32_t c = composed[i];
    if (is_newline(c)) {
      if (c == U'\r' && i + 1 < composed.size() && composed[i + 1] == U'\n') ++i;
      mapped.push_back(U'\n');
    } else {
      append_mapped(mapped, c);
    }
  }

  std::u32string out;
  bool pending_blank = false;
  bool seen_content = false;
  for (const std::u32string& line : split_lines(mapped)) {
    std::u32string squeezed = squeeze_spaces(line);
    if (squeezed.empty()) {
      pending_blank = seen_content;
      continue;
    }
    if (seen_content) out.append(pending_blank ? U"\n\n" : U"\n");
    out.append(squeezed);
    seen_content = true;
    pending_blank = false;
  }
  return unicode::encode(out);
}

CharClass classify_char_class(char32_t ch) {
  if (ch == U'(' || ch == U')') return CharClass::kParenthesis;
  if (unicode::is_letter_or_digit(ch)) return CharClass::kLetterOrDigit;
  if (unicode::is_space(ch)) return CharClass::kSpace;
  return CharClass::kPunctuation;
}

TokenSequence tokenize(std::string_view normalized, std::string_view language) {
  TokenSequence seq;
  seq.language = std::string(language);

  const std::vector<std::u32string> lines =
      split_lines(unicode::decode(normalized));
  bool blank_since_content = false;
  bool have_content = false;
  std::size_t last_line = 0;
  std::size_t last_line_length = 0;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::u32string& line = lines[li];
    if (is_blank(line)) {
      blank_since_content = have_content;
      continue;
    }
    if (have_content) {
      seq.tokens.push_back(blank_since_content
                               ? Token::section_break(last_line, last_line_length)
                               : Token::line_break(last_line, last_line_length));
    }
    std::size_t i = 0;
    while (i < line.size()) {
      if (unicode::is_space(line[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !unicode::is_space(line[j])) ++j;
      tokenize_chunk(std::u32string_view(line).substr(i, j - i), li, i,
                     seq.tokens);
      i = j;
    }
    have_content = true;
    blank_since_content = false;
    last_line = li;
    last_line_length = line.size();
  }
  return seq;
}

TokenSequence words_only(const TokenSequence& seq) {
  TokenSequence out;
  out.language = seq.language;
  for (const Token& t : seq.tokens) {
    if (t.type == TokenType::kWord) out.tokens.push_back(t);
  }
  return out;
}

std::string debug_string(const TokenSequence& seq) {
  std::string out;
  for (const Token& t : seq.tokens) {
    out.push_back('[');
    out.push_back(token_type_code(t.type));
    if (!is_break(t.type)) {
      out.push_back(':');
      out.append(t.original);
    }
    out.push_back(']');
  }
  return out;
}

std::string check_invariants(const TokenSequence& seq) {
  const auto& tokens = seq.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    const std::string where = " at token " + std::to_string(i);
    switch (t.type) {
      case TokenType::kWord:
        if (t.original.empty()) return "empty word" + where;
        for (char32_t c : unicode::decode(t.original)) {
          if (unicode::is_space(c)) return "whitespace inside word" + where;
        }
        if (t.matched != unicode::to_lower(t.original)) {
          return "word matched form is not lowercase(original)" + where;
        }
        break;
      case TokenType::kPunctuation:
      case TokenType::kParenthesis:
        if (t.original.empty() || t.original != t.matched) {
          return "symbol token forms differ or are empty" + where;
        }
        if (t.type == TokenType::kParenthesis && t.original != "(" &&
            t.original != ")") {
          return "parenthesis token is not ( or )" + where;
        }
        break;
      case TokenType::kLineBreak:
      case TokenType::kSectionBreak:
        if (!t.original.empty() || !t.matched.empty()) {
          return "break token carries text" + where;
        }
        if (i == 0 || i + 1 == tokens.size()) {
          return "leading or trailing break" + where;
        }
        if (is_break(tokens[i - 1].type)) return "adjacent breaks" + where;
        break;
    }
  }
  return {};
}

}  // namespace lyreval::textnorm
