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

#include "lyreval/lyreval.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "corpusio.hpp"
#include "error.hpp"
#include "json.hpp"
#include "lint.hpp"
#include "metrics.hpp"
#include "textnorm.hpp"

struct lyreval_song {
  lyreval::metrics::SongReport report;
};

struct lyreval_corpus {
  lyreval::corpusio::LoadedCorpus loaded;
  std::string refs_root;
  std::string hyps_root;
  std::string manifest;
};

struct lyreval_report {
  lyreval::corpusio::CorpusReport report;
};

struct lyreval_lint_result {
  std::vector<lyreval::lint::LintDiagnostic> diagnostics;
};

namespace {

using lyreval::Error;
using lyreval::ErrorKind;
using lyreval::textnorm::TokenType;

thread_local std::string last_error;

lyreval_status fail(lyreval_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

lyreval_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return LYREVAL_ERR_INVALID_ARGUMENT;
    case ErrorKind::kIo: return LYREVAL_ERR_IO;
    case ErrorKind::kParse: return LYREVAL_ERR_PARSE;
    case ErrorKind::kNoSongs: return LYREVAL_ERR_NO_SONGS;
  }
  return LYREVAL_ERR_INTERNAL;
}

template <typename F>
lyreval_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return LYREVAL_OK;
  } catch (const Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LYREVAL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LYREVAL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LYREVAL_ERR_INTERNAL, "unknown error");
  }
}

#define LYREVAL_REQUIRE(cond)                                                   \
  do {                                                                          \
    if (!(cond)) return fail(LYREVAL_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

const char* language_or_default(const char* language) {
  return language != nullptr ? language : "";
}

bool valid_type(lyreval_token_type type) {
  return type >= LYREVAL_TOKEN_WORD && type <= LYREVAL_TOKEN_SECTION_BREAK;
}

lyreval_rate to_rate(const lyreval::metrics::Rate& rate) {
  lyreval_rate out{};
  if (rate) {
    out.defined = 1;
    out.numerator = rate->num;
    out.denominator = rate->den;
    out.value = rate->value();
  }
  return out;
}

void fill_words(const lyreval::metrics::WerBreakdown& words,
                const lyreval::metrics::CaseResult& casing, lyreval_word_stats* out) {
  out->hits = words.hits;
  out->substitutions = words.substitutions;
  out->deletions = words.deletions;
  out->insertions = words.insertions;
  out->reference_words = words.ref_words;
  out->case_errors = casing.case_errors;
  out->wer = to_rate(words.wer());
  out->case_error_rate = to_rate(casing.rate());
}

void fill_type(const lyreval::align::EditCounts& counts, lyreval_token_type type,
               lyreval_type_stats* out) {
  const auto t = static_cast<TokenType>(type);
  const auto& c = counts[t];
  const auto prf = lyreval::metrics::prf(counts, t);
  out->hits = c.hits;
  out->substitutions = c.substitutions;
  out->deletions = c.deletions;
  out->insertions = c.insertions;
  out->precision = to_rate(prf.precision);
  out->recall = to_rate(prf.recall);
  out->f1 = to_rate(prf.f1);
}

}  // namespace

extern "C" {

const char* lyreval_version(void) { return LYREVAL_VERSION_STRING; }

const char* lyreval_last_error(void) { return last_error.c_str(); }

const char* lyreval_status_name(lyreval_status status) {
  switch (status) {
    case LYREVAL_OK: return "ok";
    case LYREVAL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LYREVAL_ERR_IO: return "i/o error";
    case LYREVAL_ERR_PARSE: return "parse error";
    case LYREVAL_ERR_NO_SONGS: return "no songs matched";
    case LYREVAL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void lyreval_string_free(char* s) { std::free(s); }

lyreval_status lyreval_normalize(const char* text, const char* language, char** out) {
  LYREVAL_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(lyreval::textnorm::normalize(text, language_or_default(language)));
  });
}

lyreval_status lyreval_tokenize_json(const char* text, const char* language, char** out) {
  LYREVAL_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] {
    namespace tn = lyreval::textnorm;
    const char* lang = language_or_default(language);
    const auto seq = tn::tokenize(tn::normalize(text, lang), lang);
    nlohmann::json tokens = nlohmann::json::array();
    for (const auto& t : seq.tokens) {
      tokens.push_back({{"type", std::string(1, tn::token_type_code(t.type))},
                        {"original", t.original},
                        {"matched", t.matched},
                        {"line", t.line_index},
                        {"offset", t.char_offset}});
    }
    *out = copy_string(tokens.dump());
  });
}

lyreval_status lyreval_evaluate_pair(const char* ref_text, const char* hyp_text,
                                     const char* language, lyreval_song** out) {
  LYREVAL_REQUIRE(ref_text != nullptr && hyp_text != nullptr && out != nullptr);
  return guarded([&] {
    auto song = std::make_unique<lyreval_song>();
    song->report = lyreval::metrics::evaluate_pair(ref_text, hyp_text,
                                                   language_or_default(language));
    *out = song.release();
  });
}

lyreval_status lyreval_song_words(const lyreval_song* song, lyreval_word_stats* out) {
  LYREVAL_REQUIRE(song != nullptr && out != nullptr);
  fill_words(song->report.words, song->report.casing, out);
  return LYREVAL_OK;
}

lyreval_status lyreval_song_type(const lyreval_song* song, lyreval_token_type type,
                                 lyreval_type_stats* out) {
  LYREVAL_REQUIRE(song != nullptr && out != nullptr && valid_type(type));
  fill_type(song->report.tokens, type, out);
  return LYREVAL_OK;
}

void lyreval_song_free(lyreval_song* song) { delete song; }

lyreval_status lyreval_corpus_load(const char* refs_root, const char* hyps_root,
                                   const char* manifest, lyreval_corpus** out) {
  LYREVAL_REQUIRE(refs_root != nullptr && hyps_root != nullptr && out != nullptr);
  return guarded([&] {
    auto corpus = std::make_unique<lyreval_corpus>();
    std::optional<std::filesystem::path> manifest_path;
    if (manifest != nullptr) manifest_path = manifest;
    corpus->loaded = lyreval::corpusio::load_corpus(refs_root, hyps_root, manifest_path);
    corpus->refs_root = refs_root;
    corpus->hyps_root = hyps_root;
    corpus->manifest = manifest != nullptr ? manifest : "";
    *out = corpus.release();
  });
}

size_t lyreval_corpus_size(const lyreval_corpus* corpus) {
  return corpus != nullptr ? corpus->loaded.items.size() : 0;
}

size_t lyreval_corpus_warning_count(const lyreval_corpus* corpus) {
  return corpus != nullptr ? corpus->loaded.warnings.size() : 0;
}

const char* lyreval_corpus_warning(const lyreval_corpus* corpus, size_t index) {
  if (corpus == nullptr || index >= corpus->loaded.warnings.size()) return nullptr;
  return corpus->loaded.warnings[index].c_str();
}

void lyreval_corpus_free(lyreval_corpus* corpus) { delete corpus; }

lyreval_status lyreval_corpus_evaluate(const lyreval_corpus* corpus,
                                       const char* const* languages, size_t n_languages,
                                       int stamp_time, lyreval_report** out) {
  LYREVAL_REQUIRE(corpus != nullptr && out != nullptr);
  LYREVAL_REQUIRE(n_languages == 0 || languages != nullptr);
  return guarded([&] {
    lyreval::corpusio::ReportMetadata meta;
    meta.tool_version = LYREVAL_VERSION_STRING;
    meta.refs_root = corpus->refs_root;
    meta.hyps_root = corpus->hyps_root;
    meta.manifest = corpus->manifest;
    for (size_t i = 0; i < n_languages; ++i) {
      if (languages[i] == nullptr) throw Error(ErrorKind::kInvalidArgument, "null language");
      meta.languages.emplace_back(languages[i]);
    }
    if (stamp_time) meta.generated_at = lyreval::corpusio::utc_timestamp();
    auto report = std::make_unique<lyreval_report>();
    report->report = lyreval::corpusio::evaluate_corpus(corpus->loaded.items, std::move(meta),
                                                        corpus->loaded.warnings);
    *out = report.release();
  });
}

size_t lyreval_report_group_count(const lyreval_report* report) {
  return report != nullptr ? report->report.rows.size() : 0;
}

const char* lyreval_report_group_name(const lyreval_report* report, size_t index) {
  if (report == nullptr || index >= report->report.rows.size()) return nullptr;
  return report->report.rows[index].group.c_str();
}

lyreval_status lyreval_report_group_words(const lyreval_report* report, size_t index,
                                          lyreval_word_stats* out) {
  LYREVAL_REQUIRE(report != nullptr && out != nullptr && index < report->report.rows.size());
  const auto& row = report->report.rows[index];
  fill_words(row.words, row.casing, out);
  return LYREVAL_OK;
}

lyreval_status lyreval_report_group_type(const lyreval_report* report, size_t index,
                                         lyreval_token_type type, lyreval_type_stats* out) {
  LYREVAL_REQUIRE(report != nullptr && out != nullptr && valid_type(type) &&
                  index < report->report.rows.size());
  fill_type(report->report.rows[index].tokens, type, out);
  return LYREVAL_OK;
}

lyreval_status lyreval_report_render(const lyreval_report* report, lyreval_format format,
                                     int per_song, char** out) {
  LYREVAL_REQUIRE(report != nullptr && out != nullptr);
  if (format < LYREVAL_FORMAT_JSON || format > LYREVAL_FORMAT_MARKDOWN) {
    return fail(LYREVAL_ERR_INVALID_ARGUMENT, "unknown report format");
  }
  return guarded([&] {
    const auto fmt = static_cast<lyreval::corpusio::ReportFormat>(format);
    *out = copy_string(lyreval::corpusio::render_report(report->report, fmt, per_song != 0));
  });
}

lyreval_status lyreval_parse_format(const char* name, lyreval_format* out) {
  LYREVAL_REQUIRE(name != nullptr && out != nullptr);
  return guarded([&] {
    *out = static_cast<lyreval_format>(lyreval::corpusio::parse_report_format(name));
  });
}

void lyreval_report_free(lyreval_report* report) { delete report; }

lyreval_status lyreval_segments_to_text(const char* segments_json, char** out) {
  LYREVAL_REQUIRE(segments_json != nullptr && out != nullptr);
  return guarded([&] {
    const auto segments = lyreval::corpusio::parse_segments_json(segments_json);
    *out = copy_string(lyreval::corpusio::segments_to_text(segments));
  });
}

lyreval_status lyreval_lint(const char* text, const char* language,
                            lyreval_lint_result** out) {
  LYREVAL_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] {
    auto result = std::make_unique<lyreval_lint_result>();
    result->diagnostics = lyreval::lint::lint_lyrics(text, language_or_default(language));
    *out = result.release();
  });
}

size_t lyreval_lint_count(const lyreval_lint_result* result) {
  return result != nullptr ? result->diagnostics.size() : 0;
}

lyreval_status lyreval_lint_get(const lyreval_lint_result* result, size_t index,
                                lyreval_diagnostic* out) {
  LYREVAL_REQUIRE(result != nullptr && out != nullptr && index < result->diagnostics.size());
  const auto& d = result->diagnostics[index];
  out->rule = static_cast<lyreval_lint_rule>(d.rule);
  out->line = d.line;
  out->message = d.message.c_str();
  out->fixable = d.fixable ? 1 : 0;
  return LYREVAL_OK;
}

lyreval_status lyreval_lint_autofix(const char* text, const lyreval_lint_result* result,
                                    char** out) {
  LYREVAL_REQUIRE(text != nullptr && result != nullptr && out != nullptr);
  return guarded([&] { *out = copy_string(lyreval::lint::autofix(text, result->diagnostics)); });
}

const char* lyreval_lint_rule_name(lyreval_lint_rule rule) {
  if (rule < LYREVAL_LINT_SECTION_SPACING || rule > LYREVAL_LINT_TRAILING_WHITESPACE) {
    return "Unknown";
  }
  return lyreval::lint::rule_name(static_cast<lyreval::lint::Rule>(rule)).data();
}

void lyreval_lint_free(lyreval_lint_result* result) { delete result; }

}  // extern "C"
