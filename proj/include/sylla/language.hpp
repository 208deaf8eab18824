// Copyright 2026 The Sylla Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYLLA_LANGUAGE_HPP
#define SYLLA_LANGUAGE_HPP

#include <string>
#include <string_view>

#include "sylla/error.hpp"
#include "sylla/utf8.hpp"

namespace sylla {

enum class Language { en, fr, es };

inline const char* to_string(Language lang) {
  switch (lang) {
    case Language::en: return "en";
    case Language::fr: return "fr";
    case Language::es: return "es";
  }
  return "?";
}

/// Accepts bare codes ("en") and regional variants ("en_US", "fr-FR").
inline Language parse_language(std::string_view code) {
  std::string base = utf8::to_lower(code.substr(0, code.find_first_of("_-")));
  if (base == "en") return Language::en;
  if (base == "fr") return Language::fr;
  if (base == "es") return Language::es;
  throw Error(ErrorKind::configuration,
              "unsupported language '" + std::string(code) + "'");
}

/// Orthographic vowel letters of a language, lowercase.
inline std::u32string_view vowel_letters(Language lang) {
  switch (lang) {
    case Language::en: return U"aeiouy";
    case Language::fr: return U"aeiouyéèêëàâîïôûùüœ";
    case Language::es: return U"aeiouáéíóúü";
  }
  return U"";
}

/// True for the language's vowel letters. Accented Latin letters outside the
/// language's set (loanwords such as "café" in English) count as vowels when
/// their base letter does.
inline bool is_vowel_letter(char32_t cp, Language lang) {
  const char32_t lower = utf8::to_lower(cp);
  const std::u32string_view set = vowel_letters(lang);
  if (set.find(lower) != std::u32string_view::npos) return true;
  if (lower < 0x80) return false;
  const char base = utf8::fold_to_base(lower);
  return base != 0 && set.find(static_cast<char32_t>(base)) != std::u32string_view::npos;
}

inline bool contains_vowel_letter(std::string_view text, Language lang) {
  for (std::size_t pos = 0; pos < text.size();) {
    if (is_vowel_letter(utf8::decode(text, pos), lang)) return true;
  }
  return false;
}

}  // namespace sylla

#endif  // SYLLA_LANGUAGE_HPP
