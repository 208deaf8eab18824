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

// Tab-separated annotation rows.
//
//   word  phones  phone-syllables  text-syllables  stress  method  flags
//
// Phones are space-separated, phone syllables are joined by " . ", text
// syllables by "|". Missing values are written as "-". Fields never contain
// tabs or newlines, so no quoting is needed.

#ifndef SYLLA_RECORDS_HPP
#define SYLLA_RECORDS_HPP

#include <charconv>
#include <nlohmann/json.hpp>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylla/error.hpp"
#include "sylla/pipeline.hpp"

namespace sylla {

inline constexpr std::string_view kPhoneSyllableSeparator = " . ";
inline constexpr std::string_view kTextSyllableSeparator = "|";

inline std::string format_row(const WordRecord& r) {
  std::string out = r.word;
  out.push_back('\t');
  const Pronunciation* pron = r.chosen();
  out += pron ? pron->to_string() : "-";
  out.push_back('\t');
  out += r.phone_syll.symbols.empty()
             ? std::string("-")
             : r.phone_syll.join(" ", kPhoneSyllableSeparator);
  out.push_back('\t');
  out += r.text_syll.symbols.empty() ? std::string("-")
                                     : r.text_syll.join("", kTextSyllableSeparator);
  out.push_back('\t');
  out += r.stress_index ? std::to_string(*r.stress_index) : "-";
  out.push_back('\t');
  out += to_string(r.method);
  out.push_back('\t');
  out += r.flags.to_string();
  return out;
}

inline const char* row_header() {
  return "word\tphones\tphone_syllables\ttext_syllables\tstress\tmethod\tflags";
}

namespace detail {

inline std::vector<std::string_view> split_on(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s.find(sep, pos);
    if (hit == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, hit - pos));
    pos = hit + sep.size();
  }
}

}  // namespace detail

/// Parses a row written by format_row. The record carries only the chosen
/// variant. Throws Error(parse) on malformed input.
inline WordRecord parse_row(std::string_view line, PhoneSet phoneset = PhoneSet::cmu_arpabet) {
  const auto fields = detail::split_exact(line, '\t');
  if (fields.size() != 7) {
    throw Error(ErrorKind::parse, "annotation row needs 7 fields, got " + std::to_string(fields.size()));
  }
  WordRecord r;
  r.word = std::string(fields[0]);
  if (fields[1] != "-") {
    auto pron = parse_pronunciation(fields[1], phoneset);
    if (!pron) throw Error(ErrorKind::parse, "empty phone field");
    r.pronunciations.push_back(std::move(*pron));
  }
  if (fields[2] != "-") {
    std::vector<std::vector<std::string>> sylls;
    for (std::string_view syl : detail::split_on(fields[2], kPhoneSyllableSeparator)) {
      std::vector<std::string> phones;
      for (std::string_view p : detail::split_any(syl, " ")) phones.emplace_back(p);
      if (phones.empty()) throw Error(ErrorKind::parse, "empty phone syllable");
      sylls.push_back(std::move(phones));
    }
    r.phone_syll = from_syllables(sylls);
  }
  if (fields[3] != "-") {
    std::vector<std::vector<std::string>> sylls;
    for (std::string_view syl : detail::split_on(fields[3], kTextSyllableSeparator)) {
      if (syl.empty()) throw Error(ErrorKind::parse, "empty text syllable");
      sylls.push_back(utf8::split_graphemes(syl));
    }
    r.text_syll = from_syllables(sylls);
  }
  if (fields[4] != "-") {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(), value);
    if (ec != std::errc() || ptr != fields[4].data() + fields[4].size()) {
      throw Error(ErrorKind::parse, "bad stress index '" + std::string(fields[4]) + "'");
    }
    r.stress_index = value;
  }
  r.method = parse_method(fields[5]);
  if (fields[6] != "-") {
    for (std::string_view f : detail::split_on(fields[6], ",")) r.flags.insert(parse_flag(f));
  }
  return r;
}

inline nlohmann::ordered_json record_json(const WordRecord& r) {
  nlohmann::ordered_json j;
  j["word"] = r.word;
  const Pronunciation* pron = r.chosen();
  j["phones"] = pron ? nlohmann::ordered_json(pron->to_string()) : nlohmann::ordered_json(nullptr);
  j["phone_syllables"] = r.phone_syll.syllables();
  std::vector<std::string> text;
  for (const auto& syl : r.text_syll.syllables()) {
    std::string s;
    for (const auto& g : syl) s += g;
    text.push_back(std::move(s));
  }
  j["text_syllables"] = text;
  j["stress"] = r.stress_index ? nlohmann::ordered_json(*r.stress_index) : nlohmann::ordered_json(nullptr);
  j["method"] = to_string(r.method);
  std::vector<std::string> flags;
  for (Flag f : r.flags.list()) flags.emplace_back(to_string(f));
  j["flags"] = flags;
  return j;
}

/// Annotation file layout: sentence id and token position before the row.
inline const char* annotation_header() {
  return "sentence_id\ttoken_index\tword\tphones\tphone_syllables\ttext_syllables\tstress\tmethod\tflags";
}

inline void write_annotation(std::ostream& out, std::span<const SentenceAnnotation> annotations) {
  out << annotation_header() << '\n';
  for (const auto& s : annotations) {
    for (const auto& t : s.tokens) {
      out << s.id << '\t' << t.token_index << '\t' << format_row(t.record) << '\n';
    }
  }
}

/// Writes the consistency report: per-flag counts, then one line per
/// flagged record under each of its flags.
inline void write_report(std::ostream& out, std::span<const WordRecord> records,
                         const ConsistencyReport& report) {
  out << "# flagged_records\t" << report.flagged_records << '\n';
  for (const auto& [flag, idx] : report.groups) out << "# " << to_string(flag) << '\t' << idx.size() << '\n';
  for (const auto& [flag, idx] : report.groups) {
    for (std::size_t k : idx) out << to_string(flag) << '\t' << format_row(records[k]) << '\n';
  }
}

}  // namespace sylla

#endif  // SYLLA_RECORDS_HPP
