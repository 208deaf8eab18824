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

// Run configuration and resource loading.
//
// A config file holds `key = value` lines; `#` starts a comment and values
// may be double-quoted. Relative paths are tried as given, then under the
// resource root (SYLLA_RESOURCES).

#ifndef SYLLA_CONFIG_HPP
#define SYLLA_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylla/error.hpp"
#include "sylla/language.hpp"
#include "sylla/lexicon.hpp"
#include "sylla/pipeline.hpp"

namespace sylla {

enum class OutputFormat { tsv, json };

struct RunConfig {
  std::string language_variant = "en_US";
  std::string dict_path;
  DictFormat dict_format = DictFormat::cmu;
  bool lenient = false;
  std::optional<std::string> corpus_path;
  CorpusFormat corpus_format;
  std::optional<std::string> fallback_command;
  std::optional<std::string> secondary_stress_path;
  std::optional<std::string> hierarchy_path;  ///< Overrides for the phone hierarchy.
  Strategy method = Strategy::lkp_ssp_dtw;
  std::optional<std::uint64_t> seed;
  std::size_t sample_size = 1000;
  OutputFormat output_format = OutputFormat::tsv;
  std::string resource_root;

  Language language() const { return parse_language(language_variant); }
};

namespace detail {

inline bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error(ErrorKind::configuration, std::string(key) + ": expected a boolean, got '" +
                                            std::string(v) + "'");
}

inline std::uint64_t parse_u64(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  if (v.empty()) throw Error(ErrorKind::configuration, std::string(key) + ": empty value");
  for (char c : v) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::configuration, std::string(key) + ": expected an integer, got '" +
                                                std::string(v) + "'");
    }
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return out;
}

inline int parse_column(std::string_view key, std::string_view v) {
  if (v == "-1" || v == "none") return -1;
  return static_cast<int>(parse_u64(key, v));
}

inline char parse_delimiter(std::string_view v) {
  if (v == "tab" || v == "\\t") return '\t';
  if (v == "comma") return ',';
  if (v == "semicolon") return ';';
  if (v == "space") return ' ';
  if (v.size() == 1) return v.front();
  throw Error(ErrorKind::configuration, "corpus_delimiter: expected one character, got '" +
                                            std::string(v) + "'");
}

}  // namespace detail

/// Sets one configuration key. Unknown keys are configuration errors.
inline void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  const std::string v(value);
  if (key == "language") {
    parse_language(v);
    c.language_variant = v;
  } else if (key == "dict") {
    c.dict_path = v;
  } else if (key == "dict_format") {
    c.dict_format = parse_dict_format(v);
  } else if (key == "lenient") {
    c.lenient = detail::parse_bool(key, v);
  } else if (key == "corpus") {
    if (v.empty()) c.corpus_path.reset(); else c.corpus_path = v;
  } else if (key == "corpus_word_column") {
    c.corpus_format.word_column = detail::parse_column(key, v);
  } else if (key == "corpus_syll_column") {
    c.corpus_format.syll_column = detail::parse_column(key, v);
  } else if (key == "corpus_separator") {
    if (v.empty()) throw Error(ErrorKind::configuration, "corpus_separator must not be empty");
    c.corpus_format.separator = v;
  } else if (key == "corpus_delimiter") {
    c.corpus_format.delimiter = detail::parse_delimiter(v);
  } else if (key == "corpus_skip_header") {
    c.corpus_format.skip_header = detail::parse_bool(key, v);
  } else if (key == "fallback_command") {
    if (v.empty()) c.fallback_command.reset(); else c.fallback_command = v;
  } else if (key == "secondary_stress") {
    if (v.empty()) c.secondary_stress_path.reset(); else c.secondary_stress_path = v;
  } else if (key == "hierarchy") {
    if (v.empty()) c.hierarchy_path.reset(); else c.hierarchy_path = v;
  } else if (key == "method") {
    c.method = parse_strategy(v);
  } else if (key == "seed") {
    c.seed = detail::parse_u64(key, v);
  } else if (key == "sample_size") {
    c.sample_size = static_cast<std::size_t>(detail::parse_u64(key, v));
  } else if (key == "output_format") {
    if (v == "tsv") c.output_format = OutputFormat::tsv;
    else if (v == "json") c.output_format = OutputFormat::json;
    else throw Error(ErrorKind::configuration, "output_format: expected tsv or json");
  } else if (key == "resources") {
    c.resource_root = v;
  } else {
    throw Error(ErrorKind::configuration, "unknown configuration key '" + std::string(key) + "'");
  }
}

/// Reads `key = value` pairs in file order.
inline std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    bool quoted = false;
    std::size_t cut = line.size();
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '"') quoted = !quoted;
      if (line[k] == '#' && !quoted) {
        cut = k;
        break;
      }
    }
    line = detail::trim(line.substr(0, cut));
    if (line.empty() || line.front() == '[') continue;  // blank, or a TOML table header
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(path, line_no, "expected key = value");
    std::string_view key = detail::trim(line.substr(0, eq));
    std::string_view value = detail::trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

inline void apply_config_file(RunConfig& c, const std::string& path) {
  for (const auto& [k, v] : read_config_file(path)) apply_setting(c, k, v);
}

/// Resource root: explicit setting, else SYLLA_RESOURCES, else empty.
inline std::string resource_root(const RunConfig& c) {
  if (!c.resource_root.empty()) return c.resource_root;
  if (const char* env = std::getenv("SYLLA_RESOURCES")) return env;
  return {};
}

/// Resolves a configured path; throws Error(io) when the file is missing.
inline std::string resolve_path(const RunConfig& c, const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  const std::string root = resource_root(c);
  if (!root.empty() && fs::path(path).is_relative()) {
    const fs::path candidate = fs::path(root) / path;
    if (fs::exists(candidate)) return candidate.string();
  }
  throw Error(ErrorKind::io, "resource file not found: '" + path + "'");
}

/// Loads everything a run needs. `warnings` receives non-fatal notes.
inline Resources load_resources(const RunConfig& c, std::vector<std::string>* warnings = nullptr) {
  const auto warn = [&](std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
  };
  if (c.dict_path.empty()) throw Error(ErrorKind::configuration, "no pronunciation dictionary configured");
  Resources res;
  res.language = c.language();
  if (c.dict_format == DictFormat::cmu && res.language != Language::en) {
    throw Error(ErrorKind::configuration, "CMU-format dictionaries are English-only");
  }
  LoadOptions opts;
  opts.lenient = c.lenient;
  res.lexicon = load_pron_dict(resolve_path(c, c.dict_path), c.dict_format, res.language, opts);
  attach_default_hierarchies(res);
  if (c.hierarchy_path) {
    res.phone_hierarchy = load_hierarchy_mapping(resolve_path(c, *c.hierarchy_path), res.phone_hierarchy);
  }
  if (c.corpus_path) {
    res.corpus = load_syllabified_corpus(resolve_path(c, *c.corpus_path), c.corpus_format, res.language);
    if (res.corpus->skipped_rows > 0) {
      warn("syllabified corpus: skipped " + std::to_string(res.corpus->skipped_rows) + " malformed rows");
    }
  } else if (uses_corpus(c.method)) {
    warn(std::string("method ") + to_string(c.method) +
         " without a syllabified corpus: corpus lookup is skipped");
  }
  if (c.fallback_command) {
    res.fallback.command = *c.fallback_command;
    res.fallback.phoneset = phoneset_of(c.dict_format);
  }
  if (c.secondary_stress_path) {
    std::size_t skipped = 0;
    res.secondary_stress =
        load_secondary_stress(resolve_path(c, *c.secondary_stress_path), res.language, &skipped);
    if (skipped > 0) warn("secondary stress file: skipped " + std::to_string(skipped) + " lines");
  }
  return res;
}

}  // namespace sylla

#endif  // SYLLA_CONFIG_HPP
