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

#include <algorithm>
#include <set>
#include <utility>

#include "textnorm.hpp"
#include "unicode.hpp"

namespace lyreval::lint {

namespace {

struct Document {
  std::vector<std::u32string> lines;
  bool final_newline = false;
};

Document split_document(std::string_view text) {
  Document doc;
  const std::u32string s = unicode::decode(text);
  if (s.empty()) return doc;
  std::u32string current;
  for (char32_t c : s) {
    if (c == U'\n') {
      if (!current.empty() && current.back() == U'\r') current.pop_back();
      doc.lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  doc.final_newline = s.back() == U'\n';
  if (!doc.final_newline) doc.lines.push_back(std::move(current));
  return doc;
}

std::string join(const Document& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    if (i > 0) out.push_back('\n');
    out += unicode::encode(doc.lines[i]);
  }
  if (doc.final_newline && !doc.lines.empty()) out.push_back('\n');
  return out;
}

bool is_blank(std::u32string_view line) {
  return std::all_of(line.begin(), line.end(), unicode::is_space);
}

bool is_word_char(char32_t c) {
  return textnorm::classify_char_class(c) == textnorm::CharClass::kLetterOrDigit;
}

// Index of the first letter or digit, or npos.
std::size_t first_word_char(std::u32string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (is_word_char(line[i])) return i;
  }
  return std::u32string_view::npos;
}

std::size_t trim_end(std::u32string_view line, std::size_t end) {
  while (end > 0 && unicode::is_space(line[end - 1])) --end;
  return end;
}

// Span [begin, end) of a forbidden terminal "," or "." run (before any
// closing parentheses), or an empty span when the line ending is fine.
std::pair<std::size_t, std::size_t> bad_line_end(std::u32string_view line) {
  std::size_t end = trim_end(line, line.size());
  while (end > 0 && line[end - 1] == U')') end = trim_end(line, end - 1);
  if (end == 0) return {0, 0};
  if (line[end - 1] == U',') return {end - 1, end};
  if (line[end - 1] == U'.') {
    std::size_t begin = end - 1;
    while (begin > 0 && line[begin - 1] == U'.') --begin;
    if (end - begin < 3) return {begin, end};
  }
  return {0, 0};
}

void check_section_spacing(const Document& doc, std::vector<LintDiagnostic>& out) {
  const auto& lines = doc.lines;
  const std::size_t n = lines.size();
  std::size_t first = 0;
  while (first < n && is_blank(lines[first])) ++first;
  if (first > 0) {
    out.push_back({Rule::kSectionSpacing, 1, "leading blank line", true});
  }
  if (first == n) return;
  std::size_t last = n;
  while (last > first && is_blank(lines[last - 1])) --last;
  if (last < n) {
    out.push_back({Rule::kSectionSpacing, last + 1, "trailing blank line", true});
  }
  std::size_t i = first;
  while (i < last) {
    if (!is_blank(lines[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < last && is_blank(lines[j])) ++j;
    if (j - i >= 2) {
      out.push_back({Rule::kSectionSpacing, i + 2,
                     std::to_string(j - i) +
                         " consecutive blank lines; sections are separated by one",
                     true});
    }
    i = j;
  }
}

void check_parentheses(const Document& doc, std::vector<LintDiagnostic>& out) {
  std::set<std::size_t> flagged;
  std::vector<std::size_t> open;  // 0-based lines of unclosed "("
  auto close_section = [&] {
    for (std::size_t line : open) {
      if (flagged.insert(line).second) {
        out.push_back({Rule::kParenBalance, line + 1, "unclosed '(' in section", false});
      }
    }
    open.clear();
  };
  for (std::size_t li = 0; li < doc.lines.size(); ++li) {
    const auto& line = doc.lines[li];
    if (is_blank(line)) {
      close_section();
      continue;
    }
    for (char32_t c : line) {
      if (c == U'(') {
        open.push_back(li);
      } else if (c == U')') {
        if (!open.empty()) {
          open.pop_back();
        } else if (flagged.insert(li).second) {
          out.push_back({Rule::kParenBalance, li + 1, "unmatched ')'", false});
        }
      }
    }
  }
  close_section();
}

void check_lines(const Document& doc, std::vector<LintDiagnostic>& out) {
  for (std::size_t li = 0; li < doc.lines.size(); ++li) {
    const auto& line = doc.lines[li];
    if (line.empty()) continue;
    if (unicode::is_space(line.back())) {
      out.push_back({Rule::kTrailingWhitespace, li + 1, "trailing whitespace", true});
    }
    if (is_blank(line)) continue;

    const std::size_t first = first_word_char(line);
    if (first != std::u32string_view::npos && unicode::is_lower(line[first])) {
      const bool fixable = unicode::to_upper(line[first]) != line[first];
      out.push_back({Rule::kLineCapitalization, li + 1,
                     "line starts with a lowercase letter", fixable});
    }
    const auto [begin, end] = bad_line_end(line);
    if (begin != end) {
      out.push_back({Rule::kLineEndPunctuation, li + 1,
                     line[begin] == U',' ? "line ends with a comma"
                                         : "line ends with a full stop",
                     true});
    }
  }
}

void fix_line_end(std::u32string& line) {
  for (;;) {
    line.erase(trim_end(line, line.size()));
    const auto [begin, end] = bad_line_end(line);
    if (begin == end) return;
    const std::size_t cut = trim_end(line, begin);
    line.erase(cut, end - cut);
  }
}

Document apply_fixes(Document doc, std::span<const LintDiagnostic> diagnostics) {
  bool collapse_blank_lines = false;
  for (const auto& d : diagnostics) {
    if (!d.fixable || d.line == 0 || d.line > doc.lines.size()) continue;
    auto& line = doc.lines[d.line - 1];
    switch (d.rule) {
      case Rule::kTrailingWhitespace:
        line.erase(trim_end(line, line.size()));
        break;
      case Rule::kLineEndPunctuation:
        fix_line_end(line);
        break;
      case Rule::kLineCapitalization: {
        const std::size_t first = first_word_char(line);
        if (first != std::u32string::npos) line[first] = unicode::to_upper(line[first]);
        break;
      }
      case Rule::kSectionSpacing:
        collapse_blank_lines = true;
        break;
      case Rule::kParenBalance:
        break;
    }
  }
  if (collapse_blank_lines) {
    std::vector<std::u32string> kept;
    bool pending_blank = false;
    for (auto& line : doc.lines) {
      if (is_blank(line)) {
        pending_blank = !kept.empty();
        continue;
      }
      if (pending_blank) kept.emplace_back();
      kept.push_back(std::move(line));
      pending_blank = false;
    }
    doc.lines = std::move(kept);
  }
  return doc;
}

std::vector<LintDiagnostic> lint_document(const Document& doc) {
  std::vector<LintDiagnostic> out;
  check_section_spacing(doc, out);
  check_lines(doc, out);
  check_parentheses(doc, out);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.line, a.rule) < std::pair(b.line, b.rule);
  });
  return out;
}

bool any_fixable(const std::vector<LintDiagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const auto& d) { return d.fixable; });
}

}  // namespace

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kSectionSpacing: return "SectionSpacing";
    case Rule::kLineCapitalization: return "LineCapitalization";
    case Rule::kLineEndPunctuation: return "LineEndPunctuation";
    case Rule::kParenBalance: return "ParenBalance";
    case Rule::kTrailingWhitespace: return "TrailingWhitespace";
  }
  return "Unknown";
}

std::vector<LintDiagnostic> lint_lyrics(std::string_view text,
                                        std::string_view /*language*/) {
  return lint_document(split_document(text));
}

std::string autofix(std::string_view text,
                    std::span<const LintDiagnostic> diagnostics) {
  Document doc = apply_fixes(split_document(text), diagnostics);
  // Stripping a comma can leave trailing spaces or an empty line behind.
  for (int pass = 0; pass < 16; ++pass) {
    const auto remaining = lint_document(doc);
    if (!any_fixable(remaining)) break;
    doc = apply_fixes(std::move(doc), remaining);
  }
  return join(doc);
}

}  // namespace lyreval::lint
