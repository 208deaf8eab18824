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

// Sonority hierarchies for phone sets and letters, and the expanded sonority
// sequences the syllabifier and the aligner work on.
//
// Five classes, most sonorous first: vowel (5), approximant (4),
// fricative (3), nasal (2), stop (1). In a sequence every vowel contributes
// two points, 5 then 4, so that two adjacent vowels (a hiatus) produce a
// local minimum between them while a diphthong, written as one phone, does
// not.

#ifndef SYLLA_SONORITY_HPP
#define SYLLA_SONORITY_HPP

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylla/error.hpp"
#include "sylla/language.hpp"
#include "sylla/utf8.hpp"

namespace sylla {

enum class SonorityClass { stop = 1, nasal = 2, fricative = 3, approximant = 4, vowel = 5 };

inline constexpr int kNucleusLevel = 5;
inline constexpr int kVowelTailLevel = 4;

inline constexpr int level_of(SonorityClass c) { return static_cast<int>(c); }

inline const char* to_string(SonorityClass c) {
  switch (c) {
    case SonorityClass::stop: return "stop";
    case SonorityClass::nasal: return "nasal";
    case SonorityClass::fricative: return "fricative";
    case SonorityClass::approximant: return "approximant";
    case SonorityClass::vowel: return "vowel";
  }
  return "?";
}

inline SonorityClass parse_sonority_class(std::string_view name) {
  if (name == "vowel" || name == "5") return SonorityClass::vowel;
  if (name == "approximant" || name == "4") return SonorityClass::approximant;
  if (name == "fricative" || name == "3") return SonorityClass::fricative;
  if (name == "nasal" || name == "2") return SonorityClass::nasal;
  if (name == "stop" || name == "1") return SonorityClass::stop;
  throw Error(ErrorKind::configuration, "unknown sonority class '" + std::string(name) + "'");
}

enum class SymbolSet { cmu_arpabet, mfa_ipa, letters };

inline const char* to_string(SymbolSet s) {
  switch (s) {
    case SymbolSet::cmu_arpabet: return "cmu-arpabet";
    case SymbolSet::mfa_ipa: return "mfa-ipa";
    case SymbolSet::letters: return "letters";
  }
  return "?";
}

inline SymbolSet parse_symbol_set(std::string_view name) {
  if (name == "cmu-arpabet" || name == "cmu" || name == "arpabet") return SymbolSet::cmu_arpabet;
  if (name == "mfa-ipa" || name == "mfa" || name == "ipa") return SymbolSet::mfa_ipa;
  if (name == "letters") return SymbolSet::letters;
  throw Error(ErrorKind::configuration, "unknown symbol set '" + std::string(name) + "'");
}

namespace detail {

// IPA modifiers that do not change a segment's sonority class.
inline bool is_ipa_modifier(char32_t cp) {
  return utf8::is_combining(cp) || (cp >= 0x02B0 && cp <= 0x02FF) || cp == 0x1D5D ||
         cp == 0x207F;
}

inline std::optional<SonorityClass> ipa_base_class(char32_t cp) {
  static constexpr std::u32string_view kVowels = U"aeiouyæøœɶɐɑɒɔəɘɵɛɜɞɨɪɯɤʉʊʌʏɚɝʚɷ";
  static constexpr std::u32string_view kApproximants = U"lɫɭʎʟɹɻrɾɽʀʁjwɥɰʋɺ";
  static constexpr std::u32string_view kFricatives = U"fvθðszʃʒʂʐɕʑçʝxɣχħʕhɦɸβɬɮʍɧ";
  static constexpr std::u32string_view kNasals = U"mnŋɲɳɴɱ";
  static constexpr std::u32string_view kStops = U"pbtdkgɡqɢʔcɟʈɖʡ";
  if (kVowels.find(cp) != std::u32string_view::npos) return SonorityClass::vowel;
  if (kApproximants.find(cp) != std::u32string_view::npos) return SonorityClass::approximant;
  if (kFricatives.find(cp) != std::u32string_view::npos) return SonorityClass::fricative;
  if (kNasals.find(cp) != std::u32string_view::npos) return SonorityClass::nasal;
  if (kStops.find(cp) != std::u32string_view::npos) return SonorityClass::stop;
  return std::nullopt;
}

// Class of an IPA phone: the class of its first base character, ignoring
// length marks and diacritics. Affricates (tʃ, dʒ) therefore count as stops
// and diphthongs (aj, ow) as vowels.
inline std::optional<SonorityClass> classify_ipa(std::string_view symbol) {
  for (std::size_t pos = 0; pos < symbol.size();) {
    const char32_t cp = utf8::decode(symbol, pos);
    if (is_ipa_modifier(cp) || cp == 0x0361 || cp == 0x035C) continue;
    return ipa_base_class(cp);
  }
  return std::nullopt;
}

inline std::map<std::string, SonorityClass, std::less<>> arpabet_table() {
  std::map<std::string, SonorityClass, std::less<>> t;
  for (const char* v : {"AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER", "EY", "IH", "IY", "OW",
                        "OY", "UH", "UW", "AX", "AXR", "IX", "UX"}) {
    t[v] = SonorityClass::vowel;
  }
  for (const char* a : {"L", "R", "W", "Y", "EL", "WH"}) t[a] = SonorityClass::approximant;
  for (const char* f : {"F", "V", "TH", "DH", "S", "Z", "SH", "ZH", "HH", "H"}) {
    t[f] = SonorityClass::fricative;
  }
  for (const char* n : {"M", "N", "NG", "EM", "EN", "ENG", "NX"}) t[n] = SonorityClass::nasal;
  for (const char* s : {"P", "B", "T", "D", "K", "G", "CH", "JH", "DX", "Q"}) {
    t[s] = SonorityClass::stop;
  }
  return t;
}

// Phone inventories of the MFA English, French and Spanish dictionaries.
inline std::vector<std::string_view> mfa_inventory(Language lang) {
  switch (lang) {
    case Language::en:
      return {"a", "aj", "aw", "aː", "b", "bʲ", "c", "cʰ", "cʷ", "d", "dʒ", "dʲ", "e", "ej",
              "f", "fʲ", "fʷ", "h", "i", "iː", "j", "k", "kʰ", "kʷ", "l", "m", "mʲ", "m̩",
              "n", "n̩", "o", "ow", "p", "pʰ", "pʲ", "pʷ", "s", "t", "tʃ", "tʰ", "tʲ", "tʷ",
              "u", "uː", "v", "vʲ", "vʷ", "w", "z", "æ", "ç", "ð", "ŋ", "ɐ", "ɑ", "ɑː", "ɒ",
              "ɒː", "ɔ", "ɔj", "ə", "əw", "ɚ", "ɛ", "ɛː", "ɜ", "ɜː", "ɝ", "ɟ", "ɟʷ", "ɡ",
              "ɡʷ", "ɪ", "ɫ", "ɫ̩", "ɲ", "ɹ", "ɾ", "ɾʲ", "ɾ̃", "ʃ", "ʉ", "ʉː", "ʊ", "ʎ", "ʒ",
              "ʔ", "θ"};
    case Language::fr:
      return {"a", "b", "bʲ", "c", "d", "dʒ", "dʲ", "e", "f", "fʲ", "i", "j", "k", "l", "m",
              "mʲ", "n", "o", "p", "pʲ", "s", "t", "ts", "tʃ", "tʲ", "u", "v", "vʲ", "w", "y",
              "z", "ø", "ŋ", "œ", "œ̃", "ɑ", "ɑ̃", "ɔ", "ɔ̃", "ə", "ɛ", "ɛ̃", "ɟ", "ɡ", "ɥ",
              "ɲ", "ʁ", "ʃ", "ʎ", "ʒ"};
    case Language::es:
      return {"a", "b", "c", "d", "e", "f", "i", "j", "k", "l", "m", "n", "o", "p", "r", "s",
              "t", "tʃ", "u", "w", "x", "ç", "ð", "ŋ", "ɟ", "ɟʝ", "ɡ", "ɣ", "ɱ", "ɲ", "ɾ",
              "ʃ", "ʎ", "ʝ", "β", "θ"};
  }
  return {};
}

inline void add_letters(std::map<std::string, SonorityClass, std::less<>>& t,
                        std::u32string_view letters, SonorityClass c) {
  for (char32_t cp : letters) t[utf8::encode(cp)] = c;
}

// Consonant letters are classified by their dominant phonetic value:
// c and q (/k/), j in English (/dʒ/) as stops; x (/ks/), and h as fricatives.
inline std::map<std::string, SonorityClass, std::less<>> letter_table(Language lang) {
  std::map<std::string, SonorityClass, std::less<>> t;
  add_letters(t, vowel_letters(lang), SonorityClass::vowel);
  switch (lang) {
    case Language::en:
      add_letters(t, U"lrw", SonorityClass::approximant);
      add_letters(t, U"fvszhx", SonorityClass::fricative);
      add_letters(t, U"mn", SonorityClass::nasal);
      add_letters(t, U"bcdgjkpqt", SonorityClass::stop);
      break;
    case Language::fr:
      add_letters(t, U"lrw", SonorityClass::approximant);
      add_letters(t, U"fvszhxjç", SonorityClass::fricative);
      add_letters(t, U"mn", SonorityClass::nasal);
      add_letters(t, U"bcdgkpqt", SonorityClass::stop);
      break;
    case Language::es:
      add_letters(t, U"lrwy", SonorityClass::approximant);
      add_letters(t, U"fszhxj", SonorityClass::fricative);
      add_letters(t, U"mnñ", SonorityClass::nasal);
      add_letters(t, U"bcdgkpqtv", SonorityClass::stop);
      break;
  }
  return t;
}

}  // namespace detail

/// Symbol to sonority class for one symbol set. ARPABET stress digits are
/// ignored; IPA symbols not listed explicitly are classified by their base
/// character; letters are case-folded and accented Latin letters fall back to
/// their base letter.
class SonorityHierarchy {
 public:
  using Table = std::map<std::string, SonorityClass, std::less<>>;

  SonorityHierarchy() = default;
  SonorityHierarchy(SymbolSet set, Language lang, Table table)
      : set_(set), language_(lang), table_(std::move(table)) {}

  std::optional<SonorityClass> classify(std::string_view symbol) const {
    switch (set_) {
      case SymbolSet::cmu_arpabet: {
        std::string_view key = symbol;
        if (key.size() > 1 && key.back() >= '0' && key.back() <= '9') key.remove_suffix(1);
        if (auto c = find(key)) return c;
        return find(upper_ascii(key));
      }
      case SymbolSet::mfa_ipa: {
        if (auto c = find(symbol)) return c;
        return detail::classify_ipa(symbol);
      }
      case SymbolSet::letters: {
        const std::string lower = utf8::to_lower(symbol);
        if (auto c = find(lower)) return c;
        const auto graphemes = utf8::split_graphemes(lower);
        if (graphemes.size() != 1) return std::nullopt;
        const char32_t cp = utf8::first_codepoint(graphemes.front());
        const char base = utf8::fold_to_base(cp);
        if (base == 0) return std::nullopt;
        if (is_vowel_letter(cp, language_)) return SonorityClass::vowel;
        return find(std::string(1, base));
      }
    }
    return std::nullopt;
  }

  SonorityClass class_of(std::string_view symbol) const {
    if (auto c = classify(symbol)) return *c;
    throw UnknownSymbolError(std::string(symbol));
  }

  int level(std::string_view symbol) const { return level_of(class_of(symbol)); }
  bool contains(std::string_view symbol) const { return classify(symbol).has_value(); }
  bool is_vowel(std::string_view symbol) const {
    return classify(symbol) == SonorityClass::vowel;
  }

  /// Adds or overrides one entry.
  void set(std::string symbol, SonorityClass c) { table_[std::move(symbol)] = c; }

  const Table& table() const { return table_; }
  SymbolSet symbol_set() const { return set_; }
  Language language() const { return language_; }

 private:
  std::optional<SonorityClass> find(std::string_view key) const {
    const auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  static std::string upper_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 32);
    }
    return out;
  }

  SymbolSet set_ = SymbolSet::letters;
  Language language_ = Language::en;
  Table table_;
};

/// Built-in hierarchy for a symbol set and language. ARPABET is English-only.
inline SonorityHierarchy hierarchy_for(SymbolSet set, Language lang) {
  switch (set) {
    case SymbolSet::cmu_arpabet:
      if (lang != Language::en) {
        throw Error(ErrorKind::configuration, "the ARPABET hierarchy is only defined for English");
      }
      return SonorityHierarchy(set, lang, detail::arpabet_table());
    case SymbolSet::mfa_ipa: {
      SonorityHierarchy::Table table;
      for (std::string_view phone : detail::mfa_inventory(lang)) {
        if (auto c = detail::classify_ipa(phone)) table.emplace(std::string(phone), *c);
      }
      return SonorityHierarchy(set, lang, std::move(table));
    }
    case SymbolSet::letters:
      return SonorityHierarchy(set, lang, detail::letter_table(lang));
  }
  throw Error(ErrorKind::configuration, "unsupported symbol set");
}

/// Same as above but taking names such as "cmu-arpabet" and "en_US".
inline SonorityHierarchy hierarchy_for(std::string_view set, std::string_view lang) {
  return hierarchy_for(parse_symbol_set(set), parse_language(lang));
}

/// Applies `symbol<TAB>class` lines on top of `base`. Blank lines and lines
/// starting with '#' are ignored.
inline SonorityHierarchy apply_hierarchy_mapping(std::istream& in, SonorityHierarchy base,
                                                 const std::string& source = "<mapping>") {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = utf8::ensure_utf8(raw);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError(source, line_no, "expected symbol<TAB>class");
    }
    try {
      base.set(line.substr(0, tab), parse_sonority_class(line.substr(tab + 1)));
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return base;
}

inline SonorityHierarchy load_hierarchy_mapping(const std::string& path, SonorityHierarchy base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "'");
  return apply_hierarchy_mapping(in, std::move(base), path);
}

struct SonorityPoint {
  int level = 0;
  std::size_t source = 0;  ///< Index into the originating symbol list.

  friend bool operator==(const SonorityPoint&, const SonorityPoint&) = default;
};

struct SonoritySequence {
  std::vector<SonorityPoint> points;
  std::vector<std::string> symbols;

  std::vector<int> levels() const {
    std::vector<int> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.level);
    return out;
  }

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }

  /// Index of the first expanded point of `symbol_index` (points.size() for
  /// one past the end).
  std::size_t first_point_of(std::size_t symbol_index) const {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].source >= symbol_index) return i;
    }
    return points.size();
  }
};

/// Expands a level list (one level per symbol) into sonority points.
inline SonoritySequence expand_levels(std::span<const int> levels) {
  SonoritySequence seq;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k] == kNucleusLevel) {
      seq.points.push_back({kNucleusLevel, k});
      seq.points.push_back({kVowelTailLevel, k});
    } else {
      seq.points.push_back({levels[k], k});
    }
  }
  return seq;
}

/// Throws UnknownSymbolError for symbols outside the hierarchy.
inline SonoritySequence sonority_sequence(std::span<const std::string> symbols,
                                          const SonorityHierarchy& hierarchy) {
  std::vector<int> levels;
  levels.reserve(symbols.size());
  for (const auto& s : symbols) levels.push_back(hierarchy.level(s));
  SonoritySequence seq = expand_levels(levels);
  seq.symbols.assign(symbols.begin(), symbols.end());
  return seq;
}

}  // namespace sylla

#endif  // SYLLA_SONORITY_HPP
