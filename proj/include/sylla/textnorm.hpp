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

// Text normalization: sentence text to dictionary-ready word tokens.
//
// Punctuation is assumed to be attached to words, either at the start
// (opening quotes, brackets) or at the end (commas, dots, closing quotes).
// Acronyms are runs of two or more capital letters without dots and are
// spelled out letter by letter; the letter pronunciations come from the
// lexicon's single-letter entries. Integer numerals are verbalized.

#ifndef SYLLA_TEXTNORM_HPP
#define SYLLA_TEXTNORM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylla/error.hpp"
#include "sylla/language.hpp"
#include "sylla/numwords.hpp"
#include "sylla/utf8.hpp"

namespace sylla {

enum class TokenKind { word, acronym, numeral, punctuation_only };

inline const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::word: return "word";
    case TokenKind::acronym: return "acronym";
    case TokenKind::numeral: return "numeral";
    case TokenKind::punctuation_only: return "punctuation";
  }
  return "?";
}

struct Token {
  std::string raw;
  std::string core;     ///< Lookup key, case-folded.
  std::string written;  ///< Core as written; leading + written + trailing == raw.
  std::string leading;
  std::string trailing;
  TokenKind kind = TokenKind::word;
  bool numeral_unsupported = false;
};

namespace detail {

inline bool is_word_char(char32_t cp) {
  return utf8::is_letter(cp) || utf8::is_digit(cp);
}

inline bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

// Characters that split a word into separate tokens (hyphens, slashes and the
// pipe, which is reserved as the output syllable separator).
inline bool is_word_splitter(char32_t cp) {
  return cp == '-' || cp == '/' || cp == '|' || cp == '_' ||
         (cp >= 0x2010 && cp <= 0x2015);
}

inline std::string fold_core(std::string_view written) {
  std::string out;
  for (std::size_t pos = 0; pos < written.size();) {
    char32_t cp = utf8::decode(written, pos);
    if (cp == 0x2019) cp = '\'';
    utf8::append(out, utf8::to_lower(cp));
  }
  return out;
}

// Parses an integer, optionally with thousands grouping ("1,000" in English,
// "1.000" in French/Spanish). Returns nullopt for anything else.
inline std::optional<std::int64_t> parse_integer(std::string_view s, Language lang) {
  const char group = lang == Language::en ? ',' : '.';
  if (s.empty() || s.front() == group || s.back() == group) return std::nullopt;
  std::int64_t value = 0;
  std::size_t digits_in_group = 0;
  bool grouped = false;
  std::size_t first_group = 0;
  for (char c : s) {
    if (c == group) {
      if (!grouped) first_group = digits_in_group;
      else if (digits_in_group != 3) return std::nullopt;
      grouped = true;
      digits_in_group = 0;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    if (value > 100'000'000'000'000LL) return std::nullopt;
    value = value * 10 + (c - '0');
    ++digits_in_group;
  }
  if (grouped && (digits_in_group != 3 || first_group == 0 || first_group > 3)) {
    return std::nullopt;
  }
  return value;
}

inline bool is_numeral_text(std::string_view s, Language lang) {
  if (parse_integer(s, lang)) return true;
  // Decimal: digits, one separator, digits.
  const auto sep = s.find_first_of(".,");
  if (sep == std::string_view::npos || sep == 0 || sep + 1 >= s.size()) return false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k == sep) continue;
    if (s[k] < '0' || s[k] > '9') return false;
  }
  return true;
}

inline bool is_acronym_text(std::string_view s) {
  std::size_t letters = 0;
  for (std::size_t pos = 0; pos < s.size();) {
    const char32_t cp = utf8::decode(s, pos);
    if (!utf8::is_letter(cp) || !utf8::is_upper(cp)) return false;
    ++letters;
  }
  return letters >= 2;
}

inline Token classify_unit(std::string_view raw, Language lang) {
  Token token;
  token.raw = std::string(raw);
  // Locate the first and last word characters.
  std::size_t first = std::string_view::npos;
  std::size_t last_end = 0;
  for (std::size_t pos = 0; pos < raw.size();) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(raw, pos);
    if (is_word_char(cp) || (utf8::is_combining(cp) && first != std::string_view::npos)) {
      if (first == std::string_view::npos) first = start;
      last_end = pos;
    }
  }
  if (first == std::string_view::npos) {
    token.leading = token.raw;
    token.kind = TokenKind::punctuation_only;
    return token;
  }
  token.leading = std::string(raw.substr(0, first));
  token.written = std::string(raw.substr(first, last_end - first));
  token.trailing = std::string(raw.substr(last_end));
  token.core = fold_core(token.written);
  if (is_numeral_text(token.written, lang)) {
    token.kind = TokenKind::numeral;
  } else if (is_acronym_text(token.written)) {
    token.kind = TokenKind::acronym;
  } else {
    token.kind = TokenKind::word;
  }
  return token;
}

inline Token word_token(std::string_view written) {
  Token t;
  t.raw = std::string(written);
  t.written = t.raw;
  t.core = fold_core(written);
  t.kind = TokenKind::word;
  return t;
}

}  // namespace detail

/// Splits on whitespace and separates leading/trailing punctuation. Each
/// whitespace-delimited unit yields exactly one token, so joining the `raw`
/// fields with single spaces reproduces the whitespace-normalized input.
inline std::vector<Token> tokenize(std::string_view text, Language lang) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    char32_t cp = utf8::decode(text, pos);
    if (utf8::is_space(cp)) continue;
    std::size_t end = pos;
    while (pos < text.size()) {
      const std::size_t before = pos;
      cp = utf8::decode(text, pos);
      if (utf8::is_space(cp)) {
        pos = before;
        break;
      }
      end = pos;
    }
    tokens.push_back(detail::classify_unit(text.substr(start, end - start), lang));
  }
  return tokens;
}

/// One word token per letter of an acronym token.
inline std::vector<Token> expand_acronym(const Token& token) {
  if (token.kind != TokenKind::acronym) {
    throw Error(ErrorKind::contract_violation,
                "expand_acronym: '" + token.raw + "' is not an acronym");
  }
  std::vector<Token> out;
  for (const std::string& letter : utf8::split_graphemes(token.written)) {
    out.push_back(detail::word_token(letter));
  }
  return out;
}

namespace detail {

inline void expand_into(const Token& token, Language lang, std::vector<Token>& out);

inline void expand_word(const Token& token, Language lang, std::vector<Token>& out) {
  // Split at interior hyphens, slashes and pipes; each piece is classified
  // again so "covid-19" yields a word and a numeral.
  const std::string& w = token.written;
  std::size_t piece_start = 0;
  bool split = false;
  std::vector<std::string> pieces;
  for (std::size_t pos = 0; pos < w.size();) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(w, pos);
    if (is_word_splitter(cp)) {
      pieces.push_back(w.substr(piece_start, start - piece_start));
      piece_start = pos;
      split = true;
    }
  }
  if (!split) {
    out.push_back(token);
    return;
  }
  pieces.push_back(w.substr(piece_start));
  for (const std::string& piece : pieces) {
    if (piece.empty()) continue;
    expand_into(classify_unit(piece, lang), lang, out);
  }
}

inline void expand_into(const Token& token, Language lang, std::vector<Token>& out) {
  switch (token.kind) {
    case TokenKind::punctuation_only:
      return;
    case TokenKind::acronym:
      for (Token& letter : expand_acronym(token)) out.push_back(std::move(letter));
      return;
    case TokenKind::numeral: {
      const auto value = parse_integer(token.written, lang);
      if (value && *value <= kMaxVerbalizedNumber) {
        for (const std::string& w : num_to_words(*value, lang)) {
          out.push_back(word_token(w));
        }
      } else {
        Token flagged = token;
        flagged.numeral_unsupported = true;
        out.push_back(std::move(flagged));
      }
      return;
    }
    case TokenKind::word:
      expand_word(token, lang, out);
      return;
  }
}

}  // namespace detail

/// Tokenizes and expands acronyms and numerals in place. Punctuation-only
/// tokens are dropped. Numerals that cannot be verbalized (decimals, values
/// beyond 999,999,999) are kept with `numeral_unsupported` set.
inline std::vector<Token> normalize(std::string_view text, Language lang) {
  std::vector<Token> out;
  for (const Token& token : tokenize(text, lang)) {
    detail::expand_into(token, lang, out);
  }
  return out;
}

}  // namespace sylla

#endif  // SYLLA_TEXTNORM_HPP
