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

// Checks for the mechanically verifiable lyric formatting rules: single
// blank lines between sections, capitalized line starts, no comma or full
// stop at line end, balanced parentheses within a section, and no trailing
// whitespace. Rules that need the audio or editorial judgment (what to
// transcribe, repetitions, spelling, which background vocals matter) are
// not checked.

#ifndef LYREVAL_LINT_HPP_
#define LYREVAL_LINT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lyreval::lint {

enum class Rule {
  kSectionSpacing,
  kLineCapitalization,
  kLineEndPunctuation,
  kParenBalance,
  kTrailingWhitespace,
};

std::string_view rule_name(Rule rule);

struct LintDiagnostic {
  Rule rule = Rule::kSectionSpacing;
  std::size_t line = 1;  // 1-based
  std::string message;
  bool fixable = false;
};

// Diagnostics are ordered by line, then by rule.
std::vector<LintDiagnostic> lint_lyrics(std::string_view text,
                                        std::string_view language);

// Applies the fixes for the given diagnostics, then repeats lint/fix until no
// fixable diagnostic remains (a fix can expose another, e.g. stripping a
// comma leaves trailing spaces). ParenBalance is never touched. A trailing
// newline in the input is preserved.
std::string autofix(std::string_view text,
                    std::span<const LintDiagnostic> diagnostics);

}  // namespace lyreval::lint

#endif  // LYREVAL_LINT_HPP_
