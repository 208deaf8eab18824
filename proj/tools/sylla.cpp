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

// sylla: command-line front end.
//
//   sylla normalize  [TEXT...]            normalized tokens, one line per input
//   sylla syllabify  [WORD...]            one annotation row per word
//   sylla annotate   PROMPTS -o OUT       sentence corpus annotation + report
//   sylla ablate                          method ablation on a seeded sample
//   sylla histogram  [PROMPTS]            syllable-count distribution
//   sylla report     ANNOTATION           consistency report of an annotation
//
// Exit status: 0 on success (flags never change it), 2 on configuration or
// I/O failure, 3 on a violated precondition such as a sample larger than the
// lexicon, 4 when a metric is undefined.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sylla/config.hpp"
#include "sylla/eval.hpp"
#include "sylla/records.hpp"
#include "sylla/textnorm.hpp"

namespace {

using namespace sylla;

struct Setting {
  const char* flag;
  const char* key;
  const char* help;
  std::string value;
  std::vector<CLI::Option*> options;  // one per subcommand
};

std::vector<Setting> make_settings() {
  return {
      {"--language", "language", "language variant: en_US, en_GB, fr_FR, es_ES", {}, {}},
      {"--dict", "dict", "pronunciation dictionary path", {}, {}},
      {"--dict-format", "dict_format", "dictionary format: cmu or mfa", {}, {}},
      {"--lenient", "lenient", "skip malformed dictionary lines (true/false)", {}, {}},
      {"--corpus", "corpus", "syllabified word corpus path", {}, {}},
      {"--corpus-word-column", "corpus_word_column", "0-based word column, -1 to derive the word", {}, {}},
      {"--corpus-syll-column", "corpus_syll_column", "0-based syllabification column", {}, {}},
      {"--corpus-separator", "corpus_separator", "syllable separator in the corpus", {}, {}},
      {"--corpus-delimiter", "corpus_delimiter", "column delimiter: tab, comma or one character", {}, {}},
      {"--corpus-skip-header", "corpus_skip_header", "skip the first corpus row (true/false)", {}, {}},
      {"--fallback-command", "fallback_command", "G2P command for out-of-vocabulary words", {}, {}},
      {"--secondary-stress", "secondary_stress", "word<TAB>stress-marked transcription file", {}, {}},
      {"--hierarchy", "hierarchy", "symbol<TAB>class overrides for the phone hierarchy", {}, {}},
      {"--method", "method", "ssp, lkp-ssp, ssp-dtw or lkp-ssp-dtw", {}, {}},
      {"--seed", "seed", "sampling seed", {}, {}},
      {"--sample-size", "sample_size", "number of sampled dictionary words", {}, {}},
      {"--format", "output_format", "output format: tsv or json", {}, {}},
      {"--resources", "resources", "resource root for relative paths (default $SYLLA_RESOURCES)", {}, {}},
  };
}

struct Options {
  std::vector<Setting> settings = make_settings();
  std::string config_path;
  unsigned jobs = 1;
  std::string output_path;
};

void add_common(CLI::App& cmd, Options& opts) {
  cmd.add_option("--config", opts.config_path, "key = value configuration file (flags win)");
  cmd.add_option("-j,--jobs", opts.jobs, "worker threads (0: all cores)");
  cmd.add_option("-o,--output", opts.output_path, "output file (default: standard output)");
  for (auto& s : opts.settings) s.options.push_back(cmd.add_option(s.flag, s.value, s.help));
}

RunConfig build_config(const Options& opts) {
  RunConfig c;
  if (!opts.config_path.empty()) apply_config_file(c, opts.config_path);
  for (const auto& s : opts.settings) {
    const bool given = std::any_of(s.options.begin(), s.options.end(),
                                   [](const CLI::Option* o) { return o->count() > 0; });
    if (given) apply_setting(c, s.key, s.value);
  }
  return c;
}

unsigned effective_jobs(unsigned jobs) {
  if (jobs == 0) return std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

Resources load(const RunConfig& c) {
  std::vector<std::string> warnings;
  Resources res = load_resources(c, &warnings);
  for (const auto& w : warnings) std::cerr << "sylla: warning: " << w << '\n';
  return res;
}

// Output sink: the -o file when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorKind::io, "cannot write '" + path + "'");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }
  bool is_stdout() const { return !file_; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw Error(ErrorKind::io, "write failed");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(utf8::ensure_utf8(line));
  }
  return out;
}

int cmd_normalize(const Options& opts, const std::vector<std::string>& texts) {
  const RunConfig c = build_config(opts);
  const Language lang = c.language();
  std::vector<std::string> inputs = texts;
  if (inputs.empty()) inputs = read_lines(std::cin);
  Sink sink(opts.output_path);
  for (const auto& text : inputs) {
    std::string line;
    for (const Token& t : normalize(utf8::ensure_utf8(text), lang)) {
      if (!line.empty()) line.push_back(' ');
      line += t.core;
    }
    sink.out() << line << '\n';
  }
  sink.close();
  return 0;
}

int cmd_syllabify(const Options& opts, const std::vector<std::string>& args, bool header,
                  const std::string& dump_path) {
  const RunConfig c = build_config(opts);
  const Resources res = load(c);
  std::vector<std::string> words;
  if (args.empty()) {
    for (const auto& line : read_lines(std::cin)) {
      std::istringstream in(line);
      for (std::string w; in >> w;) words.push_back(w);
    }
  } else {
    for (const auto& a : args) words.push_back(utf8::ensure_utf8(a));
  }
  const auto records = syllabify_words(words, res, c.method, effective_jobs(opts.jobs));
  Sink sink(opts.output_path);
  if (c.output_format == OutputFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) arr.push_back(record_json(r));
    sink.out() << arr.dump(2) << '\n';
  } else {
    if (header) sink.out() << row_header() << '\n';
    for (const auto& r : records) sink.out() << format_row(r) << '\n';
  }
  sink.close();

  if (!dump_path.empty()) {
    std::ofstream dump(dump_path, std::ios::binary);
    if (!dump) throw Error(ErrorKind::io, "cannot write '" + dump_path + "'");
    dump << "word\ti\tj\tlevel_a\tlevel_b\n";
    for (const auto& r : records) {
      const Pronunciation* pron = r.chosen();
      if (pron == nullptr) continue;
      try {
        write_alignment_tsv(dump, r.word,
                            ssp_dtw_syllabify(r.word, *pron, res.phone_hierarchy, res.letter_hierarchy));
      } catch (const UnknownSymbolError&) {
      }
    }
  }
  return 0;
}

std::string report_path_for(const std::string& output, const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  if (output.empty()) return {};
  return output + ".report.tsv";
}

int cmd_annotate(const Options& opts, const std::string& corpus_path, const std::string& report) {
  const RunConfig c = build_config(opts);
  const Resources res = load(c);
  const auto sentences = load_sentences(corpus_path);
  const auto annotations = annotate_corpus(sentences, res, c.method, effective_jobs(opts.jobs));
  const auto records = flatten(annotations);

  Sink sink(opts.output_path);
  write_annotation(sink.out(), annotations);
  sink.close();

  const std::string rpath = report_path_for(opts.output_path, report);
  if (!rpath.empty()) {
    std::ofstream rout(rpath, std::ios::binary);
    if (!rout) throw Error(ErrorKind::io, "cannot write '" + rpath + "'");
    write_report(rout, records, consistency_report(records));
  }

  std::ostream& summary = sink.is_stdout() ? std::cerr : std::cout;
  summary << "sentences\t" << sentences.size() << '\n' << "tokens\t" << records.size() << '\n';
  if (records.empty()) {
    std::cerr << "sylla: warning: no tokens, word accuracy undefined\n";
  } else {
    summary << "word_accuracy\t" << format_percent(word_accuracy(records)) << '\n';
  }
  return 0;
}

int cmd_ablate(const Options& opts) {
  const RunConfig c = build_config(opts);
  const Resources res = load(c);
  const std::uint64_t seed = c.seed.value_or(1);
  const AblationResult r =
      run_ablation(res, c.sample_size, seed, c.language_variant, effective_jobs(opts.jobs));
  Sink sink(opts.output_path);
  if (c.output_format == OutputFormat::json) {
    sink.out() << ablation_json(r).dump(2) << '\n';
  } else {
    write_ablation_tsv(sink.out(), r);
  }
  sink.close();
  return 0;
}

int cmd_histogram(const Options& opts, const std::string& corpus_path, bool csv) {
  const RunConfig c = build_config(opts);
  const Resources res = load(c);
  std::vector<WordRecord> records;
  if (!corpus_path.empty()) {
    records = flatten(annotate_corpus(load_sentences(corpus_path), res, c.method,
                                      effective_jobs(opts.jobs)));
  } else {
    const auto all = res.lexicon.words();
    if (c.sample_size > all.size()) {
      throw Error(ErrorKind::contract_violation, "sample size " + std::to_string(c.sample_size) +
                                                     " exceeds lexicon size " +
                                                     std::to_string(all.size()));
    }
    std::vector<std::string> words;
    for (std::size_t k : sample_indices(all.size(), c.sample_size, c.seed.value_or(1))) {
      words.push_back(all[k]);
    }
    records = syllabify_words(words, res, c.method, effective_jobs(opts.jobs));
  }
  const auto h = syllable_histogram(records);
  Sink sink(opts.output_path);
  if (csv) {
    write_histogram_csv(sink.out(), h);
  } else if (c.output_format == OutputFormat::json) {
    sink.out() << histogram_json(h).dump(2) << '\n';
  } else {
    write_histogram_tsv(sink.out(), h);
  }
  sink.close();
  return 0;
}

int cmd_report(const Options& opts, const std::string& annotation_path) {
  std::ifstream in(annotation_path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + annotation_path + "'");
  std::vector<WordRecord> records;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(in)) {
    ++line_no;
    if (line.empty() || line.rfind("sentence_id\t", 0) == 0 || line.rfind("word\t", 0) == 0) continue;
    std::string_view row = line;
    // Annotation rows carry a sentence id and token index before the record.
    if (std::count(line.begin(), line.end(), '\t') == 8) {
      row.remove_prefix(line.find('\t') + 1);
      row.remove_prefix(row.find('\t') + 1);
    }
    try {
      records.push_back(parse_row(row));
    } catch (const Error& e) {
      throw ParseError(annotation_path, line_no, e.what());
    }
  }
  Sink sink(opts.output_path);
  write_report(sink.out(), records, consistency_report(records));
  sink.close();
  return 0;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::configuration:
    case ErrorKind::io:
    case ErrorKind::parse:
      return 2;
    case ErrorKind::contract_violation:
      return 3;
    case ErrorKind::undefined_metric:
      return 4;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Unified phone- and letter-domain syllabification"};
  app.require_subcommand(1);

  Options opts;
  std::vector<std::string> positional;
  std::string path;
  std::string report;
  std::string dump;
  bool header = false;
  bool csv = false;

  auto* normalize_cmd = app.add_subcommand("normalize", "normalize sentence text into lookup tokens");
  add_common(*normalize_cmd, opts);
  normalize_cmd->add_option("text", positional, "sentences (default: lines of standard input)");

  auto* syllabify_cmd = app.add_subcommand("syllabify", "syllabify words");
  add_common(*syllabify_cmd, opts);
  syllabify_cmd->add_option("words", positional, "words (default: standard input)");
  syllabify_cmd->add_flag("--header", header, "print a column header");
  syllabify_cmd->add_option("--dump-alignment", dump, "write DTW alignment paths as TSV");

  auto* annotate_cmd = app.add_subcommand("annotate", "annotate a sentence corpus");
  add_common(*annotate_cmd, opts);
  annotate_cmd->add_option("prompts", path, "prompt file")->required();
  annotate_cmd->add_option("--report", report, "consistency report path (default: OUTPUT.report.tsv)");

  auto* ablate_cmd = app.add_subcommand("ablate", "compare methods on a seeded dictionary sample");
  add_common(*ablate_cmd, opts);

  auto* histogram_cmd = app.add_subcommand("histogram", "syllable-count distribution");
  add_common(*histogram_cmd, opts);
  histogram_cmd->add_option("prompts", path, "prompt file (default: seeded dictionary sample)");
  histogram_cmd->add_flag("--csv", csv, "plot-ready count,percentage CSV");

  auto* report_cmd = app.add_subcommand("report", "consistency report of an annotation file");
  add_common(*report_cmd, opts);
  report_cmd->add_option("annotation", path, "file written by annotate or syllabify")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize_cmd) return cmd_normalize(opts, positional);
    if (*syllabify_cmd) return cmd_syllabify(opts, positional, header, dump);
    if (*annotate_cmd) return cmd_annotate(opts, path, report);
    if (*ablate_cmd) return cmd_ablate(opts);
    if (*histogram_cmd) return cmd_histogram(opts, path, csv);
    if (*report_cmd) return cmd_report(opts, path);
  } catch (const Error& e) {
    std::cerr << "sylla: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "sylla: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
