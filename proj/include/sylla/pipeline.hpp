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

// Per-word unified syllabification.
//
// Step order for one word:
//   0. pronunciation from the lexicon, else the fallback G2P command, else
//      letters-only SSP as a best effort;
//   1. a pronunciation with exactly one vowel is one syllable in both domains;
//   2. with a syllabified corpus, its entry is accepted when its syllable
//      count equals the number of vowel phones;
//   3. otherwise SSP-DTW projection, or letters-only SSP.

#ifndef SYLLA_PIPELINE_HPP
#define SYLLA_PIPELINE_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "sylla/align.hpp"
#include "sylla/error.hpp"
#include "sylla/g2p.hpp"
#include "sylla/language.hpp"
#include "sylla/letters.hpp"
#include "sylla/lexicon.hpp"
#include "sylla/sonority.hpp"
#include "sylla/ssp.hpp"
#include "sylla/textnorm.hpp"

namespace sylla {

/// How the text-domain syllabification of a record was obtained.
enum class Method { single_vowel, corpus_lookup, ssp_dtw, ssp_letters, oov_unresolved };

/// Method requested by the caller.
enum class Strategy { ssp, lkp_ssp, ssp_dtw, lkp_ssp_dtw };

enum class Flag : std::uint8_t {
  oov,
  count_mismatch,
  degenerate_projection,
  no_nucleus,
  no_stress,
  numeral_unsupported,
  corpus_mismatch,  ///< A corpus entry was rejected for its syllable count.
  unknown_symbol,   ///< A phone or letter has no sonority class.
};

inline constexpr std::array<Flag, 8> kAllFlags = {
    Flag::oov,       Flag::count_mismatch,      Flag::degenerate_projection, Flag::no_nucleus,
    Flag::no_stress, Flag::numeral_unsupported, Flag::corpus_mismatch,       Flag::unknown_symbol};

inline constexpr std::array<Strategy, 4> kAllStrategies = {Strategy::ssp, Strategy::lkp_ssp,
                                                           Strategy::ssp_dtw, Strategy::lkp_ssp_dtw};

inline const char* to_string(Method m) {
  switch (m) {
    case Method::single_vowel: return "single-vowel";
    case Method::corpus_lookup: return "corpus-lookup";
    case Method::ssp_dtw: return "ssp-dtw";
    case Method::ssp_letters: return "ssp-letters";
    case Method::oov_unresolved: return "oov-unresolved";
  }
  return "?";
}

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::ssp: return "ssp";
    case Strategy::lkp_ssp: return "lkp-ssp";
    case Strategy::ssp_dtw: return "ssp-dtw";
    case Strategy::lkp_ssp_dtw: return "lkp-ssp-dtw";
  }
  return "?";
}

inline const char* to_string(Flag f) {
  switch (f) {
    case Flag::oov: return "oov";
    case Flag::count_mismatch: return "count-mismatch";
    case Flag::degenerate_projection: return "degenerate-projection";
    case Flag::no_nucleus: return "no-nucleus";
    case Flag::no_stress: return "no-stress";
    case Flag::numeral_unsupported: return "numeral-unsupported";
    case Flag::corpus_mismatch: return "corpus-mismatch";
    case Flag::unknown_symbol: return "unknown-symbol";
  }
  return "?";
}

inline Method parse_method(std::string_view name) {
  for (Method m : {Method::single_vowel, Method::corpus_lookup, Method::ssp_dtw, Method::ssp_letters,
                   Method::oov_unresolved}) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorKind::parse, "unknown method '" + std::string(name) + "'");
}

inline Strategy parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (name == to_string(s)) return s;
  }
  throw Error(ErrorKind::configuration, "unknown method '" + std::string(name) +
                                            "' (expected ssp, lkp-ssp, ssp-dtw or lkp-ssp-dtw)");
}

inline Flag parse_flag(std::string_view name) {
  for (Flag f : kAllFlags) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorKind::parse, "unknown flag '" + std::string(name) + "'");
}

inline bool uses_corpus(Strategy s) { return s == Strategy::lkp_ssp || s == Strategy::lkp_ssp_dtw; }
inline bool uses_dtw(Strategy s) { return s == Strategy::ssp_dtw || s == Strategy::lkp_ssp_dtw; }

/// Small ordered flag set; iteration and printing follow declaration order.
class FlagSet {
 public:
  void insert(Flag f) { bits_ |= bit(f); }
  void erase(Flag f) { bits_ &= static_cast<std::uint32_t>(~bit(f)); }
  bool contains(Flag f) const { return (bits_ & bit(f)) != 0; }
  bool empty() const { return bits_ == 0; }

  std::vector<Flag> list() const {
    std::vector<Flag> out;
    for (Flag f : kAllFlags) {
      if (contains(f)) out.push_back(f);
    }
    return out;
  }

  /// Comma-joined names, or "-" when empty.
  std::string to_string() const {
    if (empty()) return "-";
    std::string out;
    for (Flag f : list()) {
      if (!out.empty()) out.push_back(',');
      out += sylla::to_string(f);
    }
    return out;
  }

  friend bool operator==(const FlagSet&, const FlagSet&) = default;

 private:
  static std::uint32_t bit(Flag f) { return 1u << static_cast<unsigned>(f); }
  std::uint32_t bits_ = 0;
};

struct WordRecord {
  std::string word;
  std::vector<Pronunciation> pronunciations;
  std::size_t chosen_variant = 0;
  Syllabification phone_syll;
  Syllabification text_syll;
  std::optional<std::size_t> stress_index;
  Method method = Method::oov_unresolved;
  FlagSet flags;

  const Pronunciation* chosen() const {
    return chosen_variant < pronunciations.size() ? &pronunciations[chosen_variant] : nullptr;
  }
};

/// Stress information from a pre-generated secondary transcription.
struct SecondaryStress {
  std::size_t syllable_count = 0;
  std::optional<std::size_t> stress_index;
};

/// Loaded, immutable inputs of a run.
struct Resources {
  Language language = Language::en;
  Lexicon lexicon;
  std::optional<SyllabifiedLexicon> corpus;
  SonorityHierarchy phone_hierarchy;
  SonorityHierarchy letter_hierarchy;
  FallbackConfig fallback;
  std::map<std::string, SecondaryStress, std::less<>> secondary_stress;
};

/// Hierarchies matching the lexicon's phone set and language.
inline void attach_default_hierarchies(Resources& res) {
  res.phone_hierarchy = hierarchy_for(
      res.lexicon.phoneset() == PhoneSet::cmu_arpabet ? SymbolSet::cmu_arpabet : SymbolSet::mfa_ipa,
      res.language);
  res.letter_hierarchy = hierarchy_for(SymbolSet::letters, res.language);
}

/// Stress index when the secondary transcription has the same number of
/// syllables as the phone domain; absent otherwise.
inline std::optional<std::size_t> merge_stress(const Syllabification& phone_syll,
                                               std::size_t secondary_syll_count,
                                               std::size_t secondary_stress_index) {
  if (secondary_syll_count != phone_syll.syllable_count()) return std::nullopt;
  if (secondary_stress_index >= secondary_syll_count) return std::nullopt;
  return secondary_stress_index;
}

namespace detail {

inline std::size_t syllable_of(const Syllabification& syll, std::size_t symbol_index) {
  std::size_t s = 0;
  for (std::size_t b : syll.breaks) {
    if (b <= symbol_index) ++s;
  }
  return s;
}

// Syllable of the first primary-stressed vowel, else the first secondary one.
inline std::optional<std::size_t> stress_from_digits(const Pronunciation& pron,
                                                     const Syllabification& syll) {
  for (int level : {1, 2}) {
    for (std::size_t k = 0; k < pron.phones.size(); ++k) {
      if (pron.phones[k].stress == level) return syllable_of(syll, k);
    }
  }
  return std::nullopt;
}

inline Syllabification letter_ssp(std::string_view word, const SonorityHierarchy& letter_h) {
  const LetterView view = letter_view(word);
  const auto letters = view.letters();
  if (letters.empty()) return unbroken(word);
  return view.lift(ssp_breaks(sonority_sequence(letters, letter_h)));
}

inline Syllabification corpus_syllabification(std::span<const std::string> syllables) {
  std::vector<std::vector<std::string>> parts;
  parts.reserve(syllables.size());
  for (const auto& s : syllables) parts.push_back(utf8::split_graphemes(s));
  return from_syllables(parts);
}

inline void finalize(WordRecord& r) {
  if (r.phone_syll.syllable_count() != r.text_syll.syllable_count()) {
    r.flags.insert(Flag::count_mismatch);
  } else {
    r.flags.erase(Flag::count_mismatch);
  }
}

}  // namespace detail

/// Syllabifies `word` given its pronunciation variants (possibly none).
/// `oov` records that the word was missing from the lexicon.
inline WordRecord syllabify_with(std::string_view word, std::span<const Pronunciation> variants,
                                 bool oov, const Resources& res, Strategy strategy) {
  WordRecord r;
  r.word = utf8::to_lower(word);
  r.pronunciations.assign(variants.begin(), variants.end());
  if (oov) r.flags.insert(Flag::oov);

  const auto letters_best_effort = [&] {
    try {
      r.text_syll = detail::letter_ssp(r.word, res.letter_hierarchy);
    } catch (const UnknownSymbolError&) {
      r.text_syll = unbroken(r.word);
      r.flags.insert(Flag::unknown_symbol);
    }
  };

  if (r.pronunciations.empty()) {
    r.method = Method::oov_unresolved;
    letters_best_effort();
    r.flags.insert(Flag::no_stress);
    detail::finalize(r);
    return r;
  }

  const Pronunciation& pron = r.pronunciations.front();
  const auto phones = pron.symbols();
  SonoritySequence phone_seq;
  try {
    phone_seq = sonority_sequence(phones, res.phone_hierarchy);
  } catch (const UnknownSymbolError&) {
    r.flags.insert(Flag::unknown_symbol);
    r.flags.insert(Flag::no_stress);
    r.phone_syll.symbols = phones;
    r.method = Method::ssp_letters;
    letters_best_effort();
    detail::finalize(r);
    return r;
  }
  r.phone_syll = ssp_breaks(phone_seq);
  const std::size_t nuclei = count_nuclei(phone_seq);
  if (nuclei == 0) r.flags.insert(Flag::no_nucleus);

  if (nuclei == 1) {
    r.method = Method::single_vowel;
    r.text_syll = unbroken(r.word);
  } else {
    bool resolved = false;
    if (uses_corpus(strategy) && res.corpus) {
      if (auto entry = res.corpus->lookup(r.word)) {
        if (entry->size() == nuclei) {
          r.text_syll = detail::corpus_syllabification(*entry);
          r.method = Method::corpus_lookup;
          resolved = true;
        } else {
          r.flags.insert(Flag::corpus_mismatch);
        }
      }
    }
    if (!resolved && uses_dtw(strategy)) {
      try {
        const WordAlignment wa = ssp_dtw_syllabify(r.word, pron, res.phone_hierarchy,
                                                   res.letter_hierarchy);
        r.text_syll = wa.text_syll;
        if (wa.degenerate) r.flags.insert(Flag::degenerate_projection);
        r.method = Method::ssp_dtw;
      } catch (const UnknownSymbolError&) {
        r.flags.insert(Flag::unknown_symbol);
        r.text_syll = unbroken(r.word);
        r.method = Method::ssp_dtw;
      }
    } else if (!resolved) {
      r.method = Method::ssp_letters;
      letters_best_effort();
    }
  }

  r.stress_index = detail::stress_from_digits(pron, r.phone_syll);
  if (!r.stress_index) {
    const auto it = res.secondary_stress.find(r.word);
    if (it != res.secondary_stress.end() && it->second.stress_index) {
      r.stress_index =
          merge_stress(r.phone_syll, it->second.syllable_count, *it->second.stress_index);
    }
  }
  if (!r.stress_index) r.flags.insert(Flag::no_stress);
  detail::finalize(r);
  return r;
}

/// Full per-word step: lexicon lookup, then the fallback command for OOV
/// words, then syllabify_with.
inline WordRecord syllabify_word(std::string_view word, const Resources& res, Strategy strategy) {
  const std::string key = utf8::to_lower(word);
  if (auto prons = res.lexicon.lookup(key)) return syllabify_with(key, *prons, false, res, strategy);
  std::vector<Pronunciation> variants;
  if (res.fallback.enabled()) {
    FallbackResult fb = g2p_fallback(key, res.fallback);
    if (fb.pronunciation) variants.push_back(std::move(*fb.pronunciation));
  }
  return syllabify_with(key, variants, true, res, strategy);
}

namespace detail {

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < n;) fn(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// Syllabifies a list of words with one batched fallback call for all OOV
/// words. Output order follows the input.
inline std::vector<WordRecord> syllabify_words(std::span<const std::string> words,
                                               const Resources& res, Strategy strategy,
                                               unsigned jobs = 1) {
  std::vector<std::string> keys;
  keys.reserve(words.size());
  for (const auto& w : words) keys.push_back(utf8::to_lower(w));
  std::vector<std::optional<Pronunciation>> fallback(keys.size());
  if (res.fallback.enabled()) {
    std::vector<std::string> oov_words;
    std::vector<std::size_t> oov_slots;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      if (!res.lexicon.contains(keys[k])) {
        oov_words.push_back(keys[k]);
        oov_slots.push_back(k);
      }
    }
    const auto results = g2p_fallback_batch(oov_words, res.fallback);
    for (std::size_t k = 0; k < results.size(); ++k) fallback[oov_slots[k]] = results[k].pronunciation;
  }
  std::vector<WordRecord> out(keys.size());
  detail::parallel_for(keys.size(), jobs, [&](std::size_t k) {
    if (auto prons = res.lexicon.lookup(keys[k])) {
      out[k] = syllabify_with(keys[k], *prons, false, res, strategy);
    } else if (fallback[k]) {
      out[k] = syllabify_with(keys[k], std::span<const Pronunciation>(&*fallback[k], 1), true, res,
                              strategy);
    } else {
      out[k] = syllabify_with(keys[k], {}, true, res, strategy);
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Secondary stress transcriptions.

namespace detail {

inline bool is_stress_mark(char32_t cp) { return cp == 0x02C8 || cp == '\''; }
inline bool is_secondary_mark(char32_t cp) { return cp == 0x02CC || cp == ','; }

// Splits an unspaced IPA string into phones, attaching modifiers (length
// marks, diacritics, tie bars) to the preceding character.
inline std::vector<std::string> split_ipa(std::string_view s) {
  std::vector<std::string> out;
  bool attach_next = false;
  for (std::size_t pos = 0; pos < s.size();) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(s, pos);
    const std::string_view piece = s.substr(start, pos - start);
    const bool mark = is_stress_mark(cp) || is_secondary_mark(cp);
    if (!mark && (attach_next || (is_ipa_modifier(cp) && !out.empty()))) {
      if (out.empty()) out.emplace_back();
      out.back().append(piece);
      attach_next = cp == 0x0361 || cp == 0x035C;
      continue;
    }
    out.emplace_back(piece);
    attach_next = false;
  }
  return out;
}

}  // namespace detail

/// Parses one secondary transcription: space-separated phones (or an
/// unspaced IPA string) where the primary stress mark precedes the stressed
/// syllable or its vowel. Returns nullopt when a phone is unclassifiable.
inline std::optional<SecondaryStress> parse_secondary_transcription(
    std::string_view text, const SonorityHierarchy& ipa_h) {
  std::vector<std::string> raw;
  if (text.find(' ') != std::string_view::npos) {
    std::istringstream in{std::string(text)};
    for (std::string item; in >> item;) raw.push_back(item);
  } else {
    raw = detail::split_ipa(detail::trim(text));
  }
  std::vector<std::string> phones;
  std::optional<std::size_t> stressed_from;
  for (const auto& item : raw) {
    std::string phone;
    bool stressed = false;
    for (std::size_t pos = 0; pos < item.size();) {
      const std::size_t start = pos;
      const char32_t cp = utf8::decode(item, pos);
      if (detail::is_stress_mark(cp)) {
        stressed = true;
      } else if (!detail::is_secondary_mark(cp)) {
        phone.append(item, start, pos - start);
      }
    }
    if (stressed && !stressed_from) stressed_from = phones.size();
    if (!phone.empty()) phones.push_back(std::move(phone));
  }
  if (phones.empty()) return std::nullopt;
  SonoritySequence seq;
  try {
    seq = sonority_sequence(phones, ipa_h);
  } catch (const UnknownSymbolError&) {
    return std::nullopt;
  }
  const Syllabification syll = ssp_breaks(seq);
  SecondaryStress out;
  out.syllable_count = syll.syllable_count();
  if (stressed_from) {
    for (std::size_t k = *stressed_from; k < phones.size(); ++k) {
      if (ipa_h.is_vowel(phones[k])) {
        out.stress_index = detail::syllable_of(syll, k);
        break;
      }
    }
  }
  return out;
}

/// Loads `word<TAB>transcription` lines. Unparseable lines are skipped and
/// counted in `skipped` when given.
inline std::map<std::string, SecondaryStress, std::less<>> load_secondary_stress(
    const std::string& path, Language lang, std::size_t* skipped = nullptr) {
  std::ifstream in = detail::open_input(path);
  const SonorityHierarchy ipa_h = hierarchy_for(SymbolSet::mfa_ipa, lang);
  std::map<std::string, SecondaryStress, std::less<>> out;
  std::size_t bad = 0;
  for (std::string raw; std::getline(in, raw);) {
    const std::string line = utf8::ensure_utf8(raw);
    const auto fields = detail::split_exact(line, '\t');
    if (detail::trim(line).empty()) continue;
    if (fields.size() < 2) {
      ++bad;
      continue;
    }
    auto parsed = parse_secondary_transcription(fields[1], ipa_h);
    if (!parsed) {
      ++bad;
      continue;
    }
    out.try_emplace(utf8::to_lower(detail::trim(fields[0])), *parsed);
  }
  if (skipped) *skipped = bad;
  return out;
}

// ---------------------------------------------------------------------------
// Consistency report.

struct ConsistencyReport {
  /// Record indices per flag, ordered by word then input position. Every
  /// flag has an entry, possibly empty.
  std::map<Flag, std::vector<std::size_t>> groups;
  std::size_t flagged_records = 0;

  std::size_t count(Flag f) const {
    const auto it = groups.find(f);
    return it == groups.end() ? 0 : it->second.size();
  }
  bool empty() const { return flagged_records == 0; }
};

inline ConsistencyReport consistency_report(std::span<const WordRecord> records) {
  ConsistencyReport report;
  for (Flag f : kAllFlags) report.groups[f];
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (records[k].flags.empty()) continue;
    ++report.flagged_records;
    for (Flag f : records[k].flags.list()) report.groups[f].push_back(k);
  }
  for (auto& [flag, idx] : report.groups) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return records[a].word < records[b].word;
    });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Corpus annotation.

struct Sentence {
  std::string id;
  std::string text;
};

struct AnnotatedToken {
  std::size_t token_index = 0;
  WordRecord record;
};

struct SentenceAnnotation {
  std::string id;
  std::vector<AnnotatedToken> tokens;
};

/// Parses a prompt file. Accepted line shapes:
///   ( arctic_a0001 "Author of the danger trail." )
///   id<TAB>sentence
///   sentence                      (id is the 1-based line number)
inline std::vector<Sentence> parse_sentences(std::istream& in) {
  std::vector<Sentence> out;
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = utf8::ensure_utf8(raw);
    const std::string_view t = detail::trim(line);
    if (t.empty()) continue;
    if (t.front() == '(' && t.back() == ')') {
      const auto q1 = t.find('"');
      const auto q2 = t.rfind('"');
      if (q1 != std::string_view::npos && q2 > q1) {
        out.push_back({std::string(detail::trim(t.substr(1, q1 - 1))),
                       std::string(t.substr(q1 + 1, q2 - q1 - 1))});
        continue;
      }
    }
    const auto tab = t.find('\t');
    if (tab != std::string_view::npos) {
      out.push_back({std::string(detail::trim(t.substr(0, tab))),
                     std::string(detail::trim(t.substr(tab + 1)))});
      continue;
    }
    out.push_back({std::to_string(line_no), std::string(t)});
  }
  return out;
}

inline std::vector<Sentence> load_sentences(const std::string& path) {
  std::ifstream in = detail::open_input(path);
  return parse_sentences(in);
}

/// Normalizes and syllabifies every sentence. Distinct words are processed
/// once, across `jobs` worker threads; output order follows the input.
inline std::vector<SentenceAnnotation> annotate_corpus(std::span<const Sentence> sentences,
                                                       const Resources& res, Strategy strategy,
                                                       unsigned jobs = 1) {
  struct Item {
    std::string core;
    bool numeral_unsupported = false;
  };
  std::vector<std::vector<Item>> tokens(sentences.size());
  std::unordered_map<std::string, std::size_t> index;  // word key -> slot
  std::vector<Item> unique;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (const Token& tok : normalize(sentences[s].text, res.language)) {
      Item item{tok.core, tok.numeral_unsupported};
      const std::string key = (item.numeral_unsupported ? "#" : "w") + item.core;
      if (index.try_emplace(key, unique.size()).second) unique.push_back(item);
      tokens[s].push_back(std::move(item));
    }
  }

  std::vector<std::string> words;
  std::vector<std::size_t> word_slots;
  for (std::size_t k = 0; k < unique.size(); ++k) {
    if (unique[k].numeral_unsupported) continue;
    words.push_back(unique[k].core);
    word_slots.push_back(k);
  }
  std::vector<WordRecord> records(unique.size());
  std::vector<WordRecord> done = syllabify_words(words, res, strategy, jobs);
  for (std::size_t k = 0; k < done.size(); ++k) records[word_slots[k]] = std::move(done[k]);
  for (std::size_t k = 0; k < unique.size(); ++k) {
    if (!unique[k].numeral_unsupported) continue;
    WordRecord& r = records[k];
    r.word = unique[k].core;
    r.text_syll = unbroken(r.word);
    r.method = Method::oov_unresolved;
    r.flags.insert(Flag::numeral_unsupported);
    r.flags.insert(Flag::oov);
    r.flags.insert(Flag::no_stress);
    detail::finalize(r);
  }

  std::vector<SentenceAnnotation> out(sentences.size());
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    out[s].id = sentences[s].id;
    for (std::size_t t = 0; t < tokens[s].size(); ++t) {
      const Item& item = tokens[s][t];
      const std::string key = (item.numeral_unsupported ? "#" : "w") + item.core;
      out[s].tokens.push_back({t, records[index.at(key)]});
    }
  }
  return out;
}

/// All word records of an annotation, in order.
inline std::vector<WordRecord> flatten(std::span<const SentenceAnnotation> annotations) {
  std::vector<WordRecord> out;
  for (const auto& s : annotations) {
    for (const auto& t : s.tokens) out.push_back(t.record);
  }
  return out;
}

}  // namespace sylla

#endif  // SYLLA_PIPELINE_HPP
