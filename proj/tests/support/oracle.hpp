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

// Test-only reference implementations. These deliberately avoid the code
// paths they check: edit distance by top-down recursion and by exhaustive
// enumeration of alignment paths, normalization by a plain character
// scanner, tokenization by span enumeration over ASCII input.

#ifndef LYREVAL_TESTS_ORACLE_HPP_
#define LYREVAL_TESTS_ORACLE_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "textnorm.hpp"

namespace lyreval::testing {

using textnorm::Token;
using textnorm::TokenSequence;
using textnorm::TokenType;

// Builds a sequence from space-separated notation: "<L>" and "<S>" are
// breaks, "(" and ")" parentheses, any other single non-alphanumeric ASCII
// character punctuation, everything else a word (matched = ASCII lowercase).
inline TokenSequence seq(const std::string& notation) {
  TokenSequence out;
  std::istringstream in(notation);
  std::string item;
  while (in >> item) {
    Token t;
    if (item == "<L>") {
      t.type = TokenType::kLineBreak;
    } else if (item == "<S>") {
      t.type = TokenType::kSectionBreak;
    } else if (item == "(" || item == ")") {
      t.type = TokenType::kParenthesis;
      t.original = t.matched = item;
    } else if (item.size() == 1 && !std::isalnum(static_cast<unsigned char>(item[0]))) {
      t.type = TokenType::kPunctuation;
      t.original = t.matched = item;
    } else {
      t.type = TokenType::kWord;
      t.original = item;
      for (char c : item) t.matched.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    out.tokens.push_back(std::move(t));
  }
  return out;
}

inline bool same_token(const Token& a, const Token& b) {
  return a.type == b.type && a.matched == b.matched;
}

// Top-down recursive edit distance with memoization on (i, j).
inline std::size_t recursive_distance(const TokenSequence& a, const TokenSequence& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    if (auto it = memo.find({i, j}); it != memo.end()) return it->second;
    std::size_t best = go(i + 1, j + 1) + (same_token(a[i], b[j]) ? 0 : 1);
    best = std::min(best, go(i + 1, j) + 1);
    best = std::min(best, go(i, j + 1) + 1);
    memo[{i, j}] = best;
    return best;
  };
  return go(0, 0);
}

enum class Step { kDiagonal, kDelete, kInsert };

struct OracleCounts {
  std::array<std::array<std::size_t, 4>, 5> by_type{};  // [type][H, S, D, I]
  std::size_t cost = 0;
  friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
  friend bool operator<(const OracleCounts& a, const OracleCounts& b) {
    return std::tie(a.cost, a.by_type) < std::tie(b.cost, b.by_type);
  }
};

// Per-type attribution of one alignment path, written from the definition.
inline OracleCounts count_path(const std::vector<Step>& path, const TokenSequence& ref,
                               const TokenSequence& hyp) {
  OracleCounts c;
  std::size_t i = 0;
  std::size_t j = 0;
  for (Step s : path) {
    if (s == Step::kDiagonal) {
      const auto rt = static_cast<std::size_t>(ref[i].type);
      const auto ht = static_cast<std::size_t>(hyp[j].type);
      if (same_token(ref[i], hyp[j])) {
        ++c.by_type[rt][0];
      } else if (rt == ht) {
        ++c.by_type[rt][1];
        ++c.cost;
      } else {
        ++c.by_type[rt][2];
        ++c.by_type[ht][3];
        ++c.cost;
      }
      ++i;
      ++j;
    } else if (s == Step::kDelete) {
      ++c.by_type[static_cast<std::size_t>(ref[i].type)][2];
      ++c.cost;
      ++i;
    } else {
      ++c.by_type[static_cast<std::size_t>(hyp[j].type)][3];
      ++c.cost;
      ++j;
    }
  }
  return c;
}

// Calls visit(path) for every monotone alignment path of (ref, hyp).
inline void enumerate_alignments(const TokenSequence& ref, const TokenSequence& hyp,
                                 const std::function<void(const std::vector<Step>&)>& visit) {
  std::vector<Step> path;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (i == ref.size() && j == hyp.size()) {
      visit(path);
      return;
    }
    if (i < ref.size() && j < hyp.size()) {
      path.push_back(Step::kDiagonal);
      go(i + 1, j + 1);
      path.pop_back();
    }
    if (i < ref.size()) {
      path.push_back(Step::kDelete);
      go(i + 1, j);
      path.pop_back();
    }
    if (j < hyp.size()) {
      path.push_back(Step::kInsert);
      go(i, j + 1);
      path.pop_back();
    }
  };
  go(0, 0);
}

// Minimum cost over all paths and the distinct per-type counts achieving it.
struct ExhaustiveResult {
  std::size_t min_cost = 0;
  std::vector<OracleCounts> optimal_counts;  // sorted, unique
};

inline ExhaustiveResult exhaustive_alignment(const TokenSequence& ref, const TokenSequence& hyp) {
  ExhaustiveResult result;
  result.min_cost = static_cast<std::size_t>(-1);
  enumerate_alignments(ref, hyp, [&](const std::vector<Step>& path) {
    OracleCounts c = count_path(path, ref, hyp);
    if (c.cost < result.min_cost) {
      result.min_cost = c.cost;
      result.optimal_counts.clear();
    }
    if (c.cost == result.min_cost) result.optimal_counts.push_back(c);
  });
  std::sort(result.optimal_counts.begin(), result.optimal_counts.end());
  result.optimal_counts.erase(
      std::unique(result.optimal_counts.begin(), result.optimal_counts.end()),
      result.optimal_counts.end());
  return result;
}

// Reference normalizer for inputs without combining characters (so NFC is
// the identity): one pass maps characters, a second pass scans lines.
inline std::u32string reference_normalize(const std::u32string& raw) {
  std::u32string mapped;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char32_t c = raw[i];
    if (c == U'\r') {
      mapped.push_back(U'\n');
      if (i + 1 < raw.size() && raw[i + 1] == U'\n') ++i;
    } else if (c == U'\n') {
      mapped.push_back(U'\n');
    } else if (c == U'\u2018' || c == U'\u2019') {
      mapped.push_back(U'\'');
    } else if (c == U'\u201C' || c == U'\u201D' || c == U'\u00AB' || c == U'\u00BB') {
      mapped.push_back(U'"');
    } else if (c == U'\u2013' || c == U'\u2014') {
      mapped.push_back(U'-');
    } else if (c == U'\u2026') {
      mapped += U"...";
    } else if (c == U'\t' || c == U' ' || c == U'\u00A0' || c == U'\u2009' || c == U'\u3000') {
      mapped.push_back(U' ');
    } else {
      mapped.push_back(c);
    }
  }
  // Lines with runs of spaces squeezed and ends trimmed.
  std::vector<std::u32string> lines(1);
  for (char32_t c : mapped) {
    if (c == U'\n') {
      lines.emplace_back();
    } else {
      lines.back().push_back(c);
    }
  }
  std::vector<std::u32string> cleaned;
  for (const auto& line : lines) {
    std::u32string out;
    bool in_space = true;
    for (char32_t c : line) {
      if (c == U' ') {
        in_space = true;
        continue;
      }
      if (in_space && !out.empty()) out.push_back(U' ');
      in_space = false;
      out.push_back(c);
    }
    cleaned.push_back(out);
  }
  std::u32string result;
  int blank_run = 0;
  bool started = false;
  for (const auto& line : cleaned) {
    if (line.empty()) {
      ++blank_run;
      continue;
    }
    if (started) result += blank_run > 0 ? U"\n\n" : U"\n";
    result += line;
    started = true;
    blank_run = 0;
  }
  return result;
}

inline bool ascii_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool ascii_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Tokenizer for single-line ASCII text: the word span of a chunk is found
// by trying every (begin, end) pair and keeping the widest whose endpoints
// may belong to a word.
inline std::string reference_tokenize_line(const std::string& line) {
  std::string out;
  std::istringstream in(line);
  std::string chunk;
  auto keeper = [&](std::size_t k) {
    if (ascii_alnum(chunk[k])) return true;
    if (chunk[k] != '\'') return false;
    return (k > 0 && ascii_letter(chunk[k - 1])) ||
           (k + 1 < chunk.size() && ascii_letter(chunk[k + 1]));
  };
  auto symbol = [](char c) {
    return std::string(c == '(' || c == ')' ? "[B:" : "[P:") + c + "]";
  };
  while (in >> chunk) {
    std::size_t best_b = chunk.size();
    std::size_t best_e = chunk.size();
    for (std::size_t b = 0; b < chunk.size(); ++b) {
      for (std::size_t e = b + 1; e <= chunk.size(); ++e) {
        if (!keeper(b) || !keeper(e - 1)) continue;
        if (best_b == chunk.size() || e - b > best_e - best_b) {
          best_b = b;
          best_e = e;
        }
      }
    }
    if (best_b == chunk.size()) {
      for (char c : chunk) out += symbol(c);
      continue;
    }
    for (std::size_t k = 0; k < best_b; ++k) out += symbol(chunk[k]);
    out += "[W:" + chunk.substr(best_b, best_e - best_b) + "]";
    for (std::size_t k = best_e; k < chunk.size(); ++k) out += symbol(chunk[k]);
  }
  return out;
}

// Random token sequence over 4 words, one punctuation mark and both breaks.
inline TokenSequence random_tokens(std::mt19937& rng, std::size_t max_len) {
  static const char* kAlphabet[] = {"a", "b", "c", "d", ",", "<L>", "<S>"};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kAlphabet) - 1);
  std::string notation;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    notation += kAlphabet[pick(rng)];
    notation += ' ';
  }
  return seq(notation);
}

// Random raw lyric-ish text (UTF-8) drawn from a small alphabet that hits
// every tokenizer and normalizer branch.
inline std::string random_text(std::mt19937& rng, std::size_t max_len) {
  static const char* kPieces[] = {
      "a", "B", "z", "\xC3\xA9", "e\xCC\x81", "\xC3\x9F", "7", " ", " ", "  ", "\n", "\n\n",
      "\r\n", "\t", ",", ".", "!", "?", "'", "\"", "(", ")", "[", "-", "\xE2\x80\x99",
      "\xE2\x80\x9C", "\xE2\x80\xA6", "\xC2\xA0", "\xE2\x80\x94", "\xC2\xBF", "\xC2\xAB"};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPieces) - 1);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) out += kPieces[pick(rng)];
  return out;
}

}  // namespace lyreval::testing

#endif  // LYREVAL_TESTS_ORACLE_HPP_
