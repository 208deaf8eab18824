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

// Pronunciation dictionaries (CMU and MFA formats) and corpora of manually
// syllabified words.

#ifndef SYLLA_LEXICON_HPP
#define SYLLA_LEXICON_HPP

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sylla/error.hpp"
#include "sylla/language.hpp"
#include "sylla/utf8.hpp"

namespace sylla {

enum class PhoneSet { cmu_arpabet, mfa_ipa };
enum class DictFormat { cmu, mfa };

inline const char* to_string(PhoneSet set) {
  return set == PhoneSet::cmu_arpabet ? "cmu-arpabet" : "mfa-ipa";
}

inline PhoneSet parse_phoneset(std::string_view name) {
  if (name == "cmu-arpabet" || name == "cmu" || name == "arpabet") return PhoneSet::cmu_arpabet;
  if (name == "mfa-ipa" || name == "mfa" || name == "ipa") return PhoneSet::mfa_ipa;
  throw Error(ErrorKind::configuration, "unknown phone set '" + std::string(name) + "'");
}

inline DictFormat parse_dict_format(std::string_view name) {
  if (name == "cmu") return DictFormat::cmu;
  if (name == "mfa") return DictFormat::mfa;
  throw Error(ErrorKind::configuration, "unknown dictionary format '" + std::string(name) + "'");
}

inline PhoneSet phoneset_of(DictFormat format) {
  return format == DictFormat::cmu ? PhoneSet::cmu_arpabet : PhoneSet::mfa_ipa;
}

struct Phone {
  std::string symbol;
  std::optional<int> stress;  ///< ARPABET vowel stress 0/1/2.

  /// The phone as written in the dictionary.
  std::string text() const {
    return stress ? symbol + static_cast<char>('0' + *stress) : symbol;
  }

  friend bool operator==(const Phone&, const Phone&) = default;
};

inline Phone parse_phone(std::string_view text, PhoneSet set) {
  Phone phone;
  if (set == PhoneSet::cmu_arpabet && text.size() > 1) {
    const char last = text.back();
    if (last >= '0' && last <= '2') {
      phone.symbol = std::string(text.substr(0, text.size() - 1));
      phone.stress = last - '0';
      return phone;
    }
  }
  phone.symbol = std::string(text);
  return phone;
}

struct Pronunciation {
  std::vector<Phone> phones;

  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    out.reserve(phones.size());
    for (const Phone& p : phones) out.push_back(p.text());
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (const Phone& p : phones) {
      if (!out.empty()) out.push_back(' ');
      out += p.text();
    }
    return out;
  }

  bool empty() const { return phones.empty(); }
  std::size_t size() const { return phones.size(); }

  friend bool operator==(const Pronunciation&, const Pronunciation&) = default;
};

/// Parses a space-separated phone string. Returns nullopt when empty.
inline std::optional<Pronunciation> parse_pronunciation(std::string_view text, PhoneSet set) {
  Pronunciation pron;
  std::istringstream in{std::string(text)};
  std::string item;
  while (in >> item) pron.phones.push_back(parse_phone(item, set));
  if (pron.phones.empty()) return std::nullopt;
  return pron;
}

struct LoadOptions {
  bool lenient = false;  ///< Skip malformed lines instead of throwing.
};

/// Word to pronunciation variants (in file order). Keys are case-folded.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(PhoneSet phoneset, Language language)
      : phoneset_(phoneset), language_(language) {}

  void add(std::string_view word, Pronunciation pron) {
    entries_[utf8::to_lower(word)].push_back(std::move(pron));
  }

  /// All variants of `word`, or nullopt when out of vocabulary.
  std::optional<std::span<const Pronunciation>> lookup(std::string_view word) const {
    const auto it = entries_.find(utf8::to_lower(word));
    if (it == entries_.end()) return std::nullopt;
    return std::span<const Pronunciation>(it->second);
  }

  bool contains(std::string_view word) const { return lookup(word).has_value(); }

  /// Distinct words, in sorted (byte) order.
  std::vector<std::string> words() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [word, prons] : entries_) out.push_back(word);
    return out;
  }

  std::size_t size() const { return entries_.size(); }
  PhoneSet phoneset() const { return phoneset_; }
  Language language() const { return language_; }

  std::size_t skipped_lines = 0;
  std::vector<std::string> warnings;

 private:
  PhoneSet phoneset_ = PhoneSet::cmu_arpabet;
  Language language_ = Language::en;
  std::map<std::string, std::vector<Pronunciation>, std::less<>> entries_;
};

/// `lookup` as a free function, mirroring the dictionary API.
inline std::optional<std::span<const Pronunciation>> lookup(const Lexicon& lexicon,
                                                            std::string_view word) {
  return lexicon.lookup(word);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_any(std::string_view s, std::string_view delims) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto b = s.find_first_not_of(delims, pos);
    if (b == std::string_view::npos) break;
    auto e = s.find_first_of(delims, b);
    if (e == std::string_view::npos) e = s.size();
    out.push_back(s.substr(b, e - b));
    pos = e;
  }
  return out;
}

inline std::vector<std::string_view> split_exact(std::string_view s, char delim) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto e = s.find(delim, pos);
    if (e == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, e - pos));
    pos = e + 1;
  }
}

inline bool is_number(std::string_view s) {
  if (s.empty()) return false;
  std::size_t digits = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if (c >= '0' && c <= '9') {
      ++digits;
    } else if (!(c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E')) {
      return false;
    }
  }
  return digits > 0;
}

inline bool is_arpabet_phone(std::string_view p) {
  std::size_t k = 0;
  while (k < p.size() && p[k] >= 'A' && p[k] <= 'Z') ++k;
  if (k == 0) return false;
  if (k == p.size()) return true;
  return k + 1 == p.size() && p[k] >= '0' && p[k] <= '2';
}

// Strips a "(n)" variant suffix; returns false if the suffix is malformed.
inline bool strip_variant_suffix(std::string_view& word) {
  if (word.empty() || word.back() != ')') return true;
  const auto open = word.rfind('(');
  if (open == std::string_view::npos || open == 0) return false;
  const auto digits = word.substr(open + 1, word.size() - open - 2);
  if (digits.empty()) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  word = word.substr(0, open);
  return true;
}

inline void report_bad_line(Lexicon& lex, const LoadOptions& options, const std::string& path,
                            std::size_t line_no, const std::string& detail) {
  if (!options.lenient) throw ParseError(path, line_no, detail);
  ++lex.skipped_lines;
  lex.warnings.push_back(path + ":" + std::to_string(line_no) + ": " + detail);
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "'");
  return in;
}

}  // namespace detail

/// Parses CMU (`WORD  P1 P2 ...`) or MFA (`word<TAB>p1 p2 ...`) dictionary
/// text. `source` names the input in diagnostics.
inline Lexicon parse_pron_dict(std::istream& in, DictFormat format, Language lang,
                               const LoadOptions& options = {},
                               const std::string& source = "<input>") {
  Lexicon lex(phoneset_of(format), lang);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = utf8::ensure_utf8(raw);
    std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    if (format == DictFormat::cmu) {
      if (view.starts_with(";;;")) continue;
      // Newer releases carry trailing "# comment" annotations.
      if (const auto hash = view.find(" #"); hash != std::string_view::npos) {
        view = detail::trim(view.substr(0, hash));
      }
      const auto fields = detail::split_any(view, " \t");
      std::string_view word = fields.front();
      if (!detail::strip_variant_suffix(word)) {
        detail::report_bad_line(lex, options, source, line_no, "malformed variant suffix");
        continue;
      }
      if (fields.size() < 2) {
        detail::report_bad_line(lex, options, source, line_no, "entry has no phones");
        continue;
      }
      Pronunciation pron;
      bool ok = true;
      for (std::size_t k = 1; k < fields.size(); ++k) {
        if (!detail::is_arpabet_phone(fields[k])) {
          detail::report_bad_line(lex, options, source, line_no,
                                  "invalid ARPABET phone '" + std::string(fields[k]) + "'");
          ok = false;
          break;
        }
        pron.phones.push_back(parse_phone(fields[k], PhoneSet::cmu_arpabet));
      }
      if (ok) lex.add(word, std::move(pron));
    } else {
      std::vector<std::string_view> fields;
      if (view.find('\t') != std::string_view::npos) {
        fields = detail::split_exact(view, '\t');
      } else {
        // Whitespace-only layout: first item is the word, rest are phones.
        const auto items = detail::split_any(view, " ");
        if (items.size() < 2) {
          detail::report_bad_line(lex, options, source, line_no, "entry has no phones");
          continue;
        }
        const auto rest = view.substr(items[1].data() - view.data());
        fields = {items[0], rest};
      }
      const std::string_view word = detail::trim(fields.front());
      std::string phones;
      for (std::size_t k = 1; k < fields.size(); ++k) {
        const auto field = detail::trim(fields[k]);
        if (field.empty() || detail::is_number(field)) continue;  // probability columns
        if (!phones.empty()) phones.push_back(' ');
        phones += field;
      }
      auto pron = parse_pronunciation(phones, PhoneSet::mfa_ipa);
      if (word.empty() || !pron) {
        detail::report_bad_line(lex, options, source, line_no, "entry has no phones");
        continue;
      }
      lex.add(word, std::move(*pron));
    }
  }
  return lex;
}

inline Lexicon load_pron_dict(const std::string& path, DictFormat format, Language lang,
                              const LoadOptions& options = {}) {
  std::ifstream in = detail::open_input(path);
  return parse_pron_dict(in, format, lang, options, path);
}

// ------------------------------------------------------------------------
// Syllabified corpora

/// Merges every syllable without a vowel letter into the following syllable
/// (the preceding one when it is last) until none remain. Fixes onset
/// clusters split off by hyphenation lists, e.g. {"s", "tar"} -> {"star"}.
inline std::vector<std::string> sc_correction(std::vector<std::string> syllables, Language lang) {
  while (syllables.size() > 1) {
    std::size_t bad = syllables.size();
    for (std::size_t k = 0; k < syllables.size(); ++k) {
      if (!contains_vowel_letter(syllables[k], lang)) {
        bad = k;
        break;
      }
    }
    if (bad == syllables.size()) break;
    if (bad + 1 < syllables.size()) {
      syllables[bad + 1] = syllables[bad] + syllables[bad + 1];
    } else {
      syllables[bad - 1] += syllables[bad];
    }
    syllables.erase(syllables.begin() + static_cast<std::ptrdiff_t>(bad));
  }
  return syllables;
}

/// Column layout of a syllabified-word corpus. Columns are 0-based; a
/// negative word column means the word is the syllabification with the
/// separators removed (the layout of a plain hyphenation list).
struct CorpusFormat {
  int word_column = -1;
  int syll_column = 0;
  std::string separator = "-";  ///< Syllable separator, may be multi-byte UTF-8.
  char delimiter = '\t';
  bool skip_header = false;
};

class SyllabifiedLexicon {
 public:
  SyllabifiedLexicon() = default;
  explicit SyllabifiedLexicon(Language language) : language_(language) {}

  /// Adds an entry after sC correction. Returns false (and keeps the first
  /// entry) when the word is already present.
  bool add(std::string_view word, std::vector<std::string> syllables) {
    auto [it, inserted] = entries_.try_emplace(utf8::to_lower(word));
    if (!inserted) return false;
    for (auto& s : syllables) s = utf8::to_lower(s);
    it->second = sc_correction(std::move(syllables), language_);
    return true;
  }

  std::optional<std::span<const std::string>> lookup(std::string_view word) const {
    const auto it = entries_.find(utf8::to_lower(word));
    if (it == entries_.end()) return std::nullopt;
    return std::span<const std::string>(it->second);
  }

  const std::map<std::string, std::vector<std::string>, std::less<>>& entries() const {
    return entries_;
  }

  std::size_t size() const { return entries_.size(); }
  Language language() const { return language_; }

  std::size_t skipped_rows = 0;
  std::size_t duplicate_rows = 0;

 private:
  Language language_ = Language::en;
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

namespace detail {

inline std::vector<std::string> split_syllables(std::string_view text, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto e = text.find(sep, pos);
    if (e == std::string_view::npos) {
      out.emplace_back(text.substr(pos));
      return out;
    }
    out.emplace_back(text.substr(pos, e - pos));
    pos = e + sep.size();
  }
}

}  // namespace detail

/// Loads a syllabified-word corpus. Rows whose syllables are empty or do not
/// re-concatenate to the word are skipped and counted in `skipped_rows`.
inline SyllabifiedLexicon parse_syllabified_corpus(std::istream& in, const CorpusFormat& format,
                                                   Language lang) {
  if (format.separator.empty()) {
    throw Error(ErrorKind::configuration, "syllable separator must not be empty");
  }
  SyllabifiedLexicon lex(lang);
  std::string raw;
  bool first = true;
  while (std::getline(in, raw)) {
    if (first && format.skip_header) {
      first = false;
      continue;
    }
    first = false;
    const std::string line = utf8::ensure_utf8(raw);
    const std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    const auto columns = detail::split_exact(view, format.delimiter);
    const auto column = [&](int index) -> std::optional<std::string_view> {
      if (index < 0 || static_cast<std::size_t>(index) >= columns.size()) return std::nullopt;
      return detail::trim(columns[static_cast<std::size_t>(index)]);
    };
    const auto syll = column(format.syll_column);
    if (!syll || syll->empty()) {
      ++lex.skipped_rows;
      continue;
    }
    std::vector<std::string> syllables = detail::split_syllables(*syll, format.separator);
    std::string joined;
    bool empty_piece = false;
    for (const auto& s : syllables) {
      if (s.empty()) empty_piece = true;
      joined += s;
    }
    std::string word;
    if (format.word_column >= 0) {
      const auto w = column(format.word_column);
      if (!w) {
        ++lex.skipped_rows;
        continue;
      }
      word = std::string(*w);
    } else {
      word = joined;
    }
    if (empty_piece || utf8::to_lower(joined) != utf8::to_lower(word)) {
      ++lex.skipped_rows;
      continue;
    }
    if (!lex.add(word, std::move(syllables))) ++lex.duplicate_rows;
  }
  return lex;
}

inline SyllabifiedLexicon load_syllabified_corpus(const std::string& path,
                                                  const CorpusFormat& format, Language lang) {
  std::ifstream in = detail::open_input(path);
  return parse_syllabified_corpus(in, format, lang);
}

}  // namespace sylla

#endif  // SYLLA_LEXICON_HPP
