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

#include "metrics.hpp"

#include <map>

#include "error.hpp"

namespace lyreval::metrics {

Rate make_rate(uint64_t num, uint64_t den) {
  if (den == 0) return std::nullopt;
  return Ratio{num, den};
}

Rate WerBreakdown::wer() const {
  if (ref_words == 0) {
    if (insertions == 0) return Ratio{0, 1};
    return std::nullopt;
  }
  return Ratio{errors(), ref_words};
}

WerBreakdown& WerBreakdown::operator+=(const WerBreakdown& other) {
  hits += other.hits;
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  ref_words += other.ref_words;
  return *this;
}

Ratio CaseResult::rate() const {
  if (ref_words == 0) return Ratio{0, 1};
  return Ratio{case_errors, ref_words};
}

CaseResult& CaseResult::operator+=(const CaseResult& other) {
  case_errors += other.case_errors;
  ref_words += other.ref_words;
  return *this;
}

PRF SongReport::prf(TokenType t) const { return metrics::prf(tokens, t); }
PRF GroupRow::prf(TokenType t) const { return metrics::prf(tokens, t); }

WerBreakdown word_error_rate(const EditScript& word_script) {
  WerBreakdown b;
  for (const auto& op : word_script.ops) {
    switch (op.kind) {
      case align::EditKind::kHit: ++b.hits; break;
      case align::EditKind::kSubstitution: ++b.substitutions; break;
      case align::EditKind::kDeletion: ++b.deletions; break;
      case align::EditKind::kInsertion: ++b.insertions; break;
    }
  }
  b.ref_words = b.hits + b.substitutions + b.deletions;
  return b;
}

WerBreakdown word_error_rate(const TokenSequence& ref_words,
                             const TokenSequence& hyp_words) {
  return word_error_rate(align::align(ref_words, hyp_words));
}

CaseResult case_error_rate(const EditScript& script, const TokenSequence& ref,
                           const TokenSequence& hyp) {
  CaseResult result;
  result.ref_words = ref.size();
  for (const auto& op : script.ops) {
    if (op.kind != align::EditKind::kHit) continue;
    if (ref[*op.ref_index].original != hyp[*op.hyp_index].original) {
      ++result.case_errors;
    }
  }
  return result;
}

PRF prf(const EditCounts& counts, TokenType t) {
  const auto& c = counts[t];
  PRF out;
  out.precision = make_rate(c.hits, c.hits + c.substitutions + c.insertions);
  out.recall = make_rate(c.hits, c.hits + c.substitutions + c.deletions);
  // Harmonic mean of H/(H+S+I) and H/(H+S+D) is 2H / (2H + 2S + D + I).
  if (out.precision && out.recall && c.hits > 0) {
    out.f1 = Ratio{2 * c.hits, 2 * c.hits + 2 * c.substitutions + c.deletions +
                                   c.insertions};
  }
  return out;
}

SongReport evaluate_pair(std::string_view ref_text, std::string_view hyp_text,
                         std::string_view language, std::string song_id) {
  const auto ref = textnorm::tokenize(textnorm::normalize(ref_text, language), language);
  const auto hyp = textnorm::tokenize(textnorm::normalize(hyp_text, language), language);
  const auto ref_words = textnorm::words_only(ref);
  const auto hyp_words = textnorm::words_only(hyp);

  SongReport report;
  report.song_id = std::move(song_id);
  report.language = std::string(language);

  const EditScript word_script = align::align(ref_words, hyp_words);
  report.words = word_error_rate(word_script);
  report.casing = case_error_rate(word_script, ref_words, hyp_words);

  const EditScript full_script = align::align(ref, hyp);
  report.tokens = align::attribute(full_script, ref, hyp);
  return report;
}

namespace {

void add_to(GroupRow& row, const SongReport& song) {
  ++row.songs;
  row.words += song.words;
  row.casing += song.casing;
  row.tokens += song.tokens;
}

}  // namespace

std::vector<GroupRow> aggregate(std::span<const SongReport> reports,
                                Grouping grouping) {
  if (reports.empty()) throw Error(ErrorKind::kNoSongs, "no songs matched");

  std::vector<GroupRow> rows;
  GroupRow overall;
  overall.group = std::string(kOverallGroup);
  for (const auto& song : reports) add_to(overall, song);
  rows.push_back(std::move(overall));

  if (grouping == Grouping::kPerLanguage) {
    std::map<std::string, GroupRow> by_language;
    for (const auto& song : reports) {
      GroupRow& row = by_language[song.language];
      row.group = song.language;
      add_to(row, song);
    }
    for (auto& [language, row] : by_language) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lyreval::metrics
