/* Copyright 2026 The lyreval Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiled as C to keep the public header free of C++-only constructs. */

#include "lyreval/lyreval.h"

#include <stdio.h>
#include <string.h>

int main(void) {
  char *out = NULL;
  lyreval_song *song = NULL;
  lyreval_word_stats stats;

  if (lyreval_normalize("A  b", "en", &out) != LYREVAL_OK || strcmp(out, "A b") != 0) {
    fprintf(stderr, "normalize failed: %s\n", lyreval_last_error());
    return 1;
  }
  lyreval_string_free(out);

  if (lyreval_evaluate_pair("a b", "a c", "en", &song) != LYREVAL_OK ||
      lyreval_song_words(song, &stats) != LYREVAL_OK) {
    fprintf(stderr, "evaluate failed: %s\n", lyreval_last_error());
    return 1;
  }
  lyreval_song_free(song);
  if (!stats.wer.defined || stats.wer.numerator * 2 != stats.wer.denominator) {
    fprintf(stderr, "unexpected WER\n");
    return 1;
  }
  return 0;
}
