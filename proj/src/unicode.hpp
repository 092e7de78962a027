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

// Thin wrappers over ICU for the handful of Unicode operations the
// tokenizer and linter need. Everything else works on UTF-8 std::string.

#ifndef LYREVAL_UNICODE_HPP_
#define LYREVAL_UNICODE_HPP_

#include <string>
#include <string_view>

namespace lyreval::unicode {

// Invalid sequences decode to U+FFFD.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

std::string nfc(std::string_view utf8);
// Default (root locale) full lowercase mapping.
std::string to_lower(std::string_view utf8);

bool is_letter(char32_t cp);            // L* or M*
bool is_letter_or_digit(char32_t cp);   // L*, M*, N*
bool is_space(char32_t cp);             // White_Space property
bool is_lower(char32_t cp);             // Ll
char32_t to_upper(char32_t cp);         // simple mapping

}  // namespace lyreval::unicode

#endif  // LYREVAL_UNICODE_HPP_
