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

// Word accuracy, juncture accuracy, syllable-count histograms and the
// seeded method ablation.

#ifndef SYLLA_EVAL_HPP
#define SYLLA_EVAL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "sylla/error.hpp"
#include "sylla/pipeline.hpp"

namespace sylla {

/// Percentage of records whose text-domain syllable count equals the
/// phone-domain count.
inline double word_accuracy(std::span<const WordRecord> records) {
  if (records.empty()) throw Error(ErrorKind::undefined_metric, "word accuracy of an empty set");
  std::size_t hits = 0;
  for (const auto& r : records) {
    if (r.text_syll.syllable_count() == r.phone_syll.syllable_count()) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(records.size());
}

/// Fraction of inter-symbol positions where both agree on break/no-break.
/// A single-symbol word has no junctures and scores 1.
inline double juncture_accuracy(const Syllabification& pred, const Syllabification& gold) {
  if (pred.symbols != gold.symbols) {
    throw Error(ErrorKind::contract_violation, "juncture accuracy needs identical symbol sequences");
  }
  const std::size_t n = pred.symbols.size();
  if (n < 2) return 1.0;
  std::vector<bool> a(n, false);
  std::vector<bool> b(n, false);
  for (std::size_t k : pred.breaks) a[k] = true;
  for (std::size_t k : gold.breaks) b[k] = true;
  std::size_t agree = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (a[k] == b[k]) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(n - 1);
}

/// Percentage of records per phone-domain syllable count. Records without
/// phone syllables (unresolved OOV, no nucleus) are left out.
inline std::map<std::size_t, double> syllable_histogram(std::span<const WordRecord> records) {
  std::map<std::size_t, std::size_t> counts;
  std::size_t total = 0;
  for (const auto& r : records) {
    const std::size_t n = r.phone_syll.syllable_count();
    if (n == 0) continue;
    ++counts[n];
    ++total;
  }
  if (total == 0) throw Error(ErrorKind::undefined_metric, "histogram of an empty set");
  std::map<std::size_t, double> out;
  for (const auto& [k, c] : counts) {
    out[k] = 100.0 * static_cast<double>(c) / static_cast<double>(total);
  }
  return out;
}

/// One decimal place, as in the published tables.
inline std::string format_percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

// ---------------------------------------------------------------------------
// Seeded sampling. The uniform draw and the shuffle are written out instead
// of using std::uniform_int_distribution / std::sample, whose outputs differ
// between standard library implementations.

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = gen();
    if (x < limit) return x % bound;
  }
}

/// `k` distinct indices from [0, n), in draw order (partial Fisher-Yates).
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) {
    throw Error(ErrorKind::contract_violation, "sample size " + std::to_string(k) +
                                                   " exceeds population " + std::to_string(n));
  }
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::mt19937_64 gen(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(gen, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

struct AblationResult {
  std::string language_variant;
  std::map<Strategy, std::optional<double>> accuracies;  ///< Absent: method not applicable.
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> words;  ///< The sampled words, in draw order.

  friend bool operator==(const AblationResult&, const AblationResult&) = default;
};

/// Runs every method on a seeded sample of dictionary words. Corpus-based
/// methods are reported as absent when no syllabified corpus is loaded.
inline AblationResult run_ablation(const Resources& res, std::size_t sample_size, std::uint64_t seed,
                                   std::string language_variant = {}, unsigned jobs = 1) {
  const std::vector<std::string> all = res.lexicon.words();
  if (sample_size > all.size()) {
    throw Error(ErrorKind::contract_violation, "sample size " + std::to_string(sample_size) +
                                                   " exceeds lexicon size " +
                                                   std::to_string(all.size()));
  }
  AblationResult result;
  result.language_variant = std::move(language_variant);
  result.sample_size = sample_size;
  result.seed = seed;
  for (std::size_t k : sample_indices(all.size(), sample_size, seed)) result.words.push_back(all[k]);

  for (Strategy s : kAllStrategies) {
    if (uses_corpus(s) && !res.corpus) {
      result.accuracies[s] = std::nullopt;
      continue;
    }
    std::vector<WordRecord> records(result.words.size());
    const auto work = [&](std::size_t k) {
      const auto prons = res.lexicon.lookup(result.words[k]);
      records[k] = syllabify_with(result.words[k], *prons, false, res, s);
    };
    detail::parallel_for(records.size(), jobs, work);
    result.accuracies[s] = word_accuracy(records);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Emitters.

inline void write_ablation_tsv(std::ostream& out, const AblationResult& r) {
  out << "# variant=" << (r.language_variant.empty() ? "-" : r.language_variant)
      << " sample_size=" << r.sample_size << " seed=" << r.seed << '\n';
  out << "method\taccuracy\n";
  for (Strategy s : kAllStrategies) {
    const auto it = r.accuracies.find(s);
    out << to_string(s) << '\t'
        << (it != r.accuracies.end() && it->second ? format_percent(*it->second) : "-") << '\n';
  }
}

inline nlohmann::ordered_json ablation_json(const AblationResult& r) {
  nlohmann::ordered_json j;
  j["variant"] = r.language_variant;
  j["sample_size"] = r.sample_size;
  j["seed"] = r.seed;
  nlohmann::ordered_json acc = nlohmann::ordered_json::object();
  for (Strategy s : kAllStrategies) {
    const auto it = r.accuracies.find(s);
    if (it != r.accuracies.end() && it->second) {
      acc[to_string(s)] = std::stod(format_percent(*it->second));
    } else {
      acc[to_string(s)] = nullptr;
    }
  }
  j["accuracies"] = acc;
  return j;
}

inline void write_histogram_tsv(std::ostream& out, const std::map<std::size_t, double>& h) {
  out << "syllables\tpercent\n";
  for (const auto& [k, v] : h) out << k << '\t' << format_percent(v) << '\n';
}

inline void write_histogram_csv(std::ostream& out, const std::map<std::size_t, double>& h) {
  out << "count,percentage\n";
  for (const auto& [k, v] : h) out << k << ',' << format_percent(v) << '\n';
}

inline nlohmann::ordered_json histogram_json(const std::map<std::size_t, double>& h) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = std::stod(format_percent(v));
  return j;
}

}  // namespace sylla

#endif  // SYLLA_EVAL_HPP
