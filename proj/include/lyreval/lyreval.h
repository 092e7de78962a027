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

/*
 * lyreval: evaluation of lyrics transcripts, formatting included.
 *
 * C interface to the evaluation core. All text is UTF-8 and NUL-terminated.
 * Objects are opaque handles released with the matching *_free function;
 * strings returned through `char **` are released with lyreval_string_free.
 *
 * Every function returning lyreval_status leaves its output untouched on
 * failure; lyreval_last_error() then describes the problem. The error text
 * is per thread and stays valid until the next failing call on that thread.
 */

#ifndef LYREVAL_LYREVAL_H_
#define LYREVAL_LYREVAL_H_

#include <stddef.h>

#if defined(LYREVAL_BUILDING_LIBRARY)
#define LYREVAL_API __attribute__((visibility("default")))
#else
#define LYREVAL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lyreval_status {
  LYREVAL_OK = 0,
  LYREVAL_ERR_INVALID_ARGUMENT = 1,
  LYREVAL_ERR_IO = 2,
  LYREVAL_ERR_PARSE = 3,
  LYREVAL_ERR_NO_SONGS = 4,
  LYREVAL_ERR_INTERNAL = 5
} lyreval_status;

typedef enum lyreval_token_type {
  LYREVAL_TOKEN_WORD = 0,
  LYREVAL_TOKEN_PUNCTUATION = 1,
  LYREVAL_TOKEN_PARENTHESIS = 2,
  LYREVAL_TOKEN_LINE_BREAK = 3,
  LYREVAL_TOKEN_SECTION_BREAK = 4
} lyreval_token_type;

typedef enum lyreval_format {
  LYREVAL_FORMAT_JSON = 0,
  LYREVAL_FORMAT_CSV = 1,
  LYREVAL_FORMAT_MARKDOWN = 2
} lyreval_format;

typedef enum lyreval_lint_rule {
  LYREVAL_LINT_SECTION_SPACING = 0,
  LYREVAL_LINT_LINE_CAPITALIZATION = 1,
  LYREVAL_LINT_LINE_END_PUNCTUATION = 2,
  LYREVAL_LINT_PAREN_BALANCE = 3,
  LYREVAL_LINT_TRAILING_WHITESPACE = 4
} lyreval_lint_rule;

/* A rate is `defined == 0` when its denominator is zero. */
typedef struct lyreval_rate {
  int defined;
  unsigned long long numerator;
  unsigned long long denominator;
  double value;
} lyreval_rate;

typedef struct lyreval_word_stats {
  size_t hits;
  size_t substitutions;
  size_t deletions;
  size_t insertions;
  size_t reference_words;
  size_t case_errors;
  lyreval_rate wer;
  lyreval_rate case_error_rate;
} lyreval_word_stats;

typedef struct lyreval_type_stats {
  size_t hits;
  size_t substitutions;
  size_t deletions;
  size_t insertions;
  lyreval_rate precision;
  lyreval_rate recall;
  lyreval_rate f1;
} lyreval_type_stats;

typedef struct lyreval_diagnostic {
  lyreval_lint_rule rule;
  size_t line; /* 1-based */
  const char *message; /* owned by the lint result */
  int fixable;
} lyreval_diagnostic;

typedef struct lyreval_song lyreval_song;
typedef struct lyreval_corpus lyreval_corpus;
typedef struct lyreval_report lyreval_report;
typedef struct lyreval_lint_result lyreval_lint_result;

LYREVAL_API const char *lyreval_version(void);
LYREVAL_API const char *lyreval_last_error(void);
LYREVAL_API const char *lyreval_status_name(lyreval_status status);
LYREVAL_API void lyreval_string_free(char *s);

/* Text processing */
LYREVAL_API lyreval_status lyreval_normalize(const char *text, const char *language,
                                             char **out);
/* Normalizes, tokenizes and writes the tokens as a JSON array of
 * {"type","original","matched","line","offset"} objects. */
LYREVAL_API lyreval_status lyreval_tokenize_json(const char *text, const char *language,
                                                 char **out);

/* Single reference/hypothesis pair */
LYREVAL_API lyreval_status lyreval_evaluate_pair(const char *ref_text, const char *hyp_text,
                                                 const char *language, lyreval_song **out);
LYREVAL_API lyreval_status lyreval_song_words(const lyreval_song *song,
                                              lyreval_word_stats *out);
LYREVAL_API lyreval_status lyreval_song_type(const lyreval_song *song,
                                             lyreval_token_type type,
                                             lyreval_type_stats *out);
LYREVAL_API void lyreval_song_free(lyreval_song *song);

/* Corpus evaluation. `manifest` may be NULL. */
LYREVAL_API lyreval_status lyreval_corpus_load(const char *refs_root, const char *hyps_root,
                                               const char *manifest, lyreval_corpus **out);
LYREVAL_API size_t lyreval_corpus_size(const lyreval_corpus *corpus);
LYREVAL_API size_t lyreval_corpus_warning_count(const lyreval_corpus *corpus);
LYREVAL_API const char *lyreval_corpus_warning(const lyreval_corpus *corpus, size_t index);
LYREVAL_API void lyreval_corpus_free(lyreval_corpus *corpus);

/* Scores songs whose language is in `languages` (all songs when
 * n_languages == 0). With stamp_time != 0 the report records a UTC
 * generation time, which makes JSON output differ between runs. */
LYREVAL_API lyreval_status lyreval_corpus_evaluate(const lyreval_corpus *corpus,
                                                   const char *const *languages,
                                                   size_t n_languages, int stamp_time,
                                                   lyreval_report **out);
LYREVAL_API size_t lyreval_report_group_count(const lyreval_report *report);
LYREVAL_API const char *lyreval_report_group_name(const lyreval_report *report, size_t index);
LYREVAL_API lyreval_status lyreval_report_group_words(const lyreval_report *report,
                                                      size_t index, lyreval_word_stats *out);
LYREVAL_API lyreval_status lyreval_report_group_type(const lyreval_report *report,
                                                     size_t index, lyreval_token_type type,
                                                     lyreval_type_stats *out);
LYREVAL_API lyreval_status lyreval_report_render(const lyreval_report *report,
                                                 lyreval_format format, int per_song,
                                                 char **out);
LYREVAL_API lyreval_status lyreval_parse_format(const char *name, lyreval_format *out);
LYREVAL_API void lyreval_report_free(lyreval_report *report);

/* Timestamped ASR segments (JSON) to line-broken text. */
LYREVAL_API lyreval_status lyreval_segments_to_text(const char *segments_json, char **out);

/* Formatting lint */
LYREVAL_API lyreval_status lyreval_lint(const char *text, const char *language,
                                        lyreval_lint_result **out);
LYREVAL_API size_t lyreval_lint_count(const lyreval_lint_result *result);
LYREVAL_API lyreval_status lyreval_lint_get(const lyreval_lint_result *result, size_t index,
                                            lyreval_diagnostic *out);
LYREVAL_API lyreval_status lyreval_lint_autofix(const char *text,
                                                const lyreval_lint_result *result,
                                                char **out);
LYREVAL_API const char *lyreval_lint_rule_name(lyreval_lint_rule rule);
LYREVAL_API void lyreval_lint_free(lyreval_lint_result *result);

#ifdef __cplusplus
}
#endif

#endif /* LYREVAL_LYREVAL_H_ */
