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

// Word error rate, case error rate and per-token-type precision/recall/F1.
//
// All rates are kept as exact integer ratios; a metric whose denominator is
// zero is UNDEFINED (std::nullopt) rather than zero. Corpus aggregates pool
// raw counts before dividing (micro-average).

#ifndef LYREVAL_METRICS_HPP_
#define LYREVAL_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "align.hpp"
#include "textnorm.hpp"

namespace lyreval::metrics {

using align::EditCounts;
using align::EditScript;
using textnorm::TokenSequence;
using textnorm::TokenType;

struct Ratio {
  uint64_t num = 0;
  uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Exact comparison by cross-multiplication.
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

// nullopt means UNDEFINED.
using Rate = std::optional<Ratio>;

Rate make_rate(uint64_t num, uint64_t den);

struct WerBreakdown {
  std::size_t hits = 0;
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t ref_words = 0;  // N = H + S + D

  std::size_t errors() const { return substitutions + deletions + insertions; }
  // (S + D + I) / N. With N == 0: 0 if nothing was inserted, else UNDEFINED.
  Rate wer() const;

  WerBreakdown& operator+=(const WerBreakdown& other);
};

struct CaseResult {
  std::size_t case_errors = 0;  // S_Aa
  std::size_t ref_words = 0;

  // S_Aa / N, and 0 when N == 0.
  Ratio rate() const;

  CaseResult& operator+=(const CaseResult& other);
};

struct PRF {
  Rate precision;
  Rate recall;
  Rate f1;
};

struct SongReport {
  std::string song_id;
  std::string language;
  WerBreakdown words;
  CaseResult casing;
  EditCounts tokens;  // full-sequence alignment, attributed per type

  PRF prf(TokenType t) const;
};

// Pooled counts for a group of songs (one language, or all of them).
struct GroupRow {
  std::string group;  // language code, or "All"
  std::size_t songs = 0;
  WerBreakdown words;
  CaseResult casing;
  EditCounts tokens;

  PRF prf(TokenType t) const;
};

inline constexpr std::string_view kOverallGroup = "All";

enum class Grouping { kPerLanguage, kOverall };

WerBreakdown word_error_rate(const TokenSequence& ref_words,
                             const TokenSequence& hyp_words);
// Counts from an existing word-level script.
WerBreakdown word_error_rate(const EditScript& word_script);

CaseResult case_error_rate(const EditScript& script, const TokenSequence& ref,
                           const TokenSequence& hyp);

PRF prf(const EditCounts& counts, TokenType t);

SongReport evaluate_pair(std::string_view ref_text, std::string_view hyp_text,
                         std::string_view language, std::string song_id = {});

// kPerLanguage: the "All" row first, then one row per language in sorted
// order. kOverall: only the "All" row. Throws Error(kNoSongs) on empty input.
std::vector<GroupRow> aggregate(std::span<const SongReport> reports,
                                Grouping grouping);

}  // namespace lyreval::metrics

#endif  // LYREVAL_METRICS_HPP_
