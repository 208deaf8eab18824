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

// Rule-based cardinal number verbalization for English, French and Spanish.
// Output is a list of lowercase words with no hyphens, so every token can be
// looked up in a pronunciation dictionary on its own ("quatre-vingt-dix" is
// emitted as {"quatre", "vingt", "dix"}).

#ifndef SYLLA_NUMWORDS_HPP
#define SYLLA_NUMWORDS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sylla/error.hpp"
#include "sylla/language.hpp"

namespace sylla {

inline constexpr std::int64_t kMaxVerbalizedNumber = 999'999'999;

namespace detail {

using Words = std::vector<std::string>;

inline void push_all(Words& out, const Words& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// ---------------------------------------------------------------- English

inline Words en_below_thousand(int n) {
  static const std::array<const char*, 20> kOnes = {
      "zero",    "one",     "two",       "three",    "four",
      "five",    "six",     "seven",     "eight",    "nine",
      "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
      "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
  static const std::array<const char*, 10> kTens = {
      "", "", "twenty", "thirty", "forty", "fifty",
      "sixty", "seventy", "eighty", "ninety"};
  Words out;
  if (n >= 100) {
    out.emplace_back(kOnes[n / 100]);
    out.emplace_back("hundred");
    n %= 100;
    if (n == 0) return out;
  }
  if (n < 20) {
    out.emplace_back(kOnes[n]);
  } else {
    out.emplace_back(kTens[n / 10]);
    if (n % 10 != 0) out.emplace_back(kOnes[n % 10]);
  }
  return out;
}

inline Words en_words(std::int64_t value) {
  if (value == 0) return {"zero"};
  Words out;
  const int millions = static_cast<int>(value / 1'000'000);
  const int thousands = static_cast<int>(value / 1000 % 1000);
  const int rest = static_cast<int>(value % 1000);
  if (millions > 0) {
    push_all(out, en_below_thousand(millions));
    out.emplace_back("million");
  }
  if (thousands > 0) {
    push_all(out, en_below_thousand(thousands));
    out.emplace_back("thousand");
  }
  if (rest > 0) push_all(out, en_below_thousand(rest));
  return out;
}

// ----------------------------------------------------------------- French

inline Words fr_below_twenty(int n) {
  static const std::array<const char*, 17> kUnits = {
      "zéro", "un",   "deux",  "trois",    "quatre", "cinq",
      "six",  "sept", "huit",  "neuf",     "dix",    "onze",
      "douze", "treize", "quatorze", "quinze", "seize"};
  if (n < 17) return {kUnits[n]};
  return {"dix", kUnits[n - 10]};
}

// `final` is false when the number is followed by "mille"; it controls the
// plural "s" of "quatre-vingts" and "deux cents".
inline Words fr_below_hundred(int n, bool final) {
  static const std::array<const char*, 7> kTens = {
      "", "", "vingt", "trente", "quarante", "cinquante", "soixante"};
  if (n < 20) return fr_below_twenty(n);
  const int tens = n / 10;
  const int units = n % 10;
  Words out;
  if (tens <= 6) {
    out.emplace_back(kTens[tens]);
    if (units == 1) {
      out.emplace_back("et");
      out.emplace_back("un");
    } else if (units > 0) {
      push_all(out, fr_below_twenty(units));
    }
  } else if (tens == 7) {
    out.emplace_back("soixante");
    if (units == 1) out.emplace_back("et");
    push_all(out, fr_below_twenty(10 + units));
  } else if (tens == 8) {
    out.emplace_back("quatre");
    if (units == 0) {
      out.emplace_back(final ? "vingts" : "vingt");
    } else {
      out.emplace_back("vingt");
      push_all(out, fr_below_twenty(units));
    }
  } else {
    out.emplace_back("quatre");
    out.emplace_back("vingt");
    push_all(out, fr_below_twenty(10 + units));
  }
  return out;
}

inline Words fr_below_thousand(int n, bool final) {
  Words out;
  const int hundreds = n / 100;
  const int rest = n % 100;
  if (hundreds > 0) {
    if (hundreds > 1) push_all(out, fr_below_twenty(hundreds));
    out.emplace_back(hundreds > 1 && rest == 0 && final ? "cents" : "cent");
    if (rest == 0) return out;
  }
  push_all(out, fr_below_hundred(rest, final));
  return out;
}

inline Words fr_words(std::int64_t value) {
  if (value == 0) return {"zéro"};
  Words out;
  const int millions = static_cast<int>(value / 1'000'000);
  const int thousands = static_cast<int>(value / 1000 % 1000);
  const int rest = static_cast<int>(value % 1000);
  if (millions > 0) {
    push_all(out, fr_below_thousand(millions, true));
    out.emplace_back(millions > 1 ? "millions" : "million");
  }
  if (thousands > 0) {
    if (thousands > 1) push_all(out, fr_below_thousand(thousands, false));
    out.emplace_back("mille");
  }
  if (rest > 0) push_all(out, fr_below_thousand(rest, true));
  return out;
}

// ---------------------------------------------------------------- Spanish

// `apocope` shortens a trailing "uno" before "mil"/"millón(es)".
inline Words es_below_hundred(int n, bool apocope) {
  static const std::array<const char*, 30> kSmall = {
      "cero",       "uno",        "dos",         "tres",
      "cuatro",     "cinco",      "seis",        "siete",
      "ocho",       "nueve",      "diez",        "once",
      "doce",       "trece",      "catorce",     "quince",
      "dieciséis",  "diecisiete", "dieciocho",   "diecinueve",
      "veinte",     "veintiuno",  "veintidós",   "veintitrés",
      "veinticuatro", "veinticinco", "veintiséis", "veintisiete",
      "veintiocho", "veintinueve"};
  static const std::array<const char*, 10> kTens = {
      "", "", "", "treinta", "cuarenta", "cincuenta",
      "sesenta", "setenta", "ochenta", "noventa"};
  if (n < 30) {
    if (apocope && n == 1) return {"un"};
    if (apocope && n == 21) return {"veintiún"};
    return {kSmall[n]};
  }
  Words out{kTens[n / 10]};
  if (n % 10 != 0) {
    out.emplace_back("y");
    out.emplace_back(apocope && n % 10 == 1 ? "un" : kSmall[n % 10]);
  }
  return out;
}

inline Words es_below_thousand(int n, bool apocope) {
  static const std::array<const char*, 10> kHundreds = {
      "", "ciento", "doscientos", "trescientos", "cuatrocientos",
      "quinientos", "seiscientos", "setecientos", "ochocientos",
      "novecientos"};
  const int hundreds = n / 100;
  const int rest = n % 100;
  if (hundreds == 1 && rest == 0) return {"cien"};
  Words out;
  if (hundreds > 0) out.emplace_back(kHundreds[hundreds]);
  if (rest > 0) push_all(out, es_below_hundred(rest, apocope));
  return out;
}

inline Words es_words(std::int64_t value) {
  if (value == 0) return {"cero"};
  Words out;
  const int millions = static_cast<int>(value / 1'000'000);
  const int thousands = static_cast<int>(value / 1000 % 1000);
  const int rest = static_cast<int>(value % 1000);
  if (millions == 1) {
    out = {"un", "millón"};
  } else if (millions > 1) {
    push_all(out, es_below_thousand(millions, true));
    out.emplace_back("millones");
  }
  if (thousands > 0) {
    if (thousands > 1) push_all(out, es_below_thousand(thousands, true));
    out.emplace_back("mil");
  }
  if (rest > 0) push_all(out, es_below_thousand(rest, false));
  return out;
}

}  // namespace detail

/// Cardinal reading of `value` in [0, 999'999'999]. Throws
/// Error(numeral_unsupported) outside that range.
inline std::vector<std::string> num_to_words(std::int64_t value, Language lang) {
  if (value < 0 || value > kMaxVerbalizedNumber) {
    throw Error(ErrorKind::numeral_unsupported,
                "numeral " + std::to_string(value) + " outside [0, 999999999]");
  }
  switch (lang) {
    case Language::en: return detail::en_words(value);
    case Language::fr: return detail::fr_words(value);
    case Language::es: return detail::es_words(value);
  }
  throw Error(ErrorKind::numeral_unsupported, "unsupported language");
}

}  // namespace sylla

#endif  // SYLLA_NUMWORDS_HPP
