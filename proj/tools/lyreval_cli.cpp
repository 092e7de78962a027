// Copyright 2026 The lyreval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lyreval command line: corpus scoring, segment conversion and lyric lint.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 lint diagnostics remain.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lyreval/lyreval.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitLint = 2;

struct CStringDeleter {
  void operator()(char* s) const { lyreval_string_free(s); }
};
using CString = std::unique_ptr<char, CStringDeleter>;

struct CorpusDeleter {
  void operator()(lyreval_corpus* c) const { lyreval_corpus_free(c); }
};
struct ReportDeleter {
  void operator()(lyreval_report* r) const { lyreval_report_free(r); }
};
struct LintDeleter {
  void operator()(lyreval_lint_result* r) const { lyreval_lint_free(r); }
};

int report_failure(const std::string& what) {
  std::cerr << "lyreval: " << what << ": " << lyreval_last_error() << "\n";
  return kExitError;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << data;
  return static_cast<bool>(out.flush());
}

struct EvalOptions {
  std::string refs;
  std::string hyps;
  std::string manifest;
  std::vector<std::string> languages;
  std::string format = "markdown";
  std::string out;
  bool per_song = false;
  bool timestamp = false;
};

int run_eval(const EvalOptions& opt) {
  lyreval_format format;
  if (lyreval_parse_format(opt.format.c_str(), &format) != LYREVAL_OK) {
    return report_failure("--format");
  }

  lyreval_corpus* raw_corpus = nullptr;
  if (lyreval_corpus_load(opt.refs.c_str(), opt.hyps.c_str(),
                          opt.manifest.empty() ? nullptr : opt.manifest.c_str(),
                          &raw_corpus) != LYREVAL_OK) {
    return report_failure("cannot load corpus");
  }
  std::unique_ptr<lyreval_corpus, CorpusDeleter> corpus(raw_corpus);
  for (size_t i = 0; i < lyreval_corpus_warning_count(corpus.get()); ++i) {
    std::cerr << "warning: " << lyreval_corpus_warning(corpus.get(), i) << "\n";
  }

  std::vector<const char*> languages;
  for (const auto& l : opt.languages) languages.push_back(l.c_str());
  lyreval_report* raw_report = nullptr;
  if (lyreval_corpus_evaluate(corpus.get(), languages.data(), languages.size(),
                              opt.timestamp ? 1 : 0, &raw_report) != LYREVAL_OK) {
    return report_failure("evaluation failed");
  }
  std::unique_ptr<lyreval_report, ReportDeleter> report(raw_report);

  char* raw_text = nullptr;
  if (lyreval_report_render(report.get(), format, opt.per_song ? 1 : 0, &raw_text) !=
      LYREVAL_OK) {
    return report_failure("cannot render report");
  }
  CString text(raw_text);
  if (!write_output(opt.out, text.get())) {
    std::cerr << "lyreval: cannot write " << opt.out << "\n";
    return kExitError;
  }
  return kExitOk;
}

int run_segments(const std::string& in_path, const std::string& out_path) {
  std::string json;
  if (!read_file(in_path, json)) {
    std::cerr << "lyreval: cannot read " << in_path << "\n";
    return kExitError;
  }
  char* raw_text = nullptr;
  if (lyreval_segments_to_text(json.c_str(), &raw_text) != LYREVAL_OK) {
    return report_failure(in_path);
  }
  CString text(raw_text);
  std::string data = text.get();
  if (!data.empty()) data.push_back('\n');
  if (!write_output(out_path, data)) {
    std::cerr << "lyreval: cannot write " << out_path << "\n";
    return kExitError;
  }
  return kExitOk;
}

void print_diagnostics(const std::string& file, const lyreval_lint_result* result) {
  for (size_t i = 0; i < lyreval_lint_count(result); ++i) {
    lyreval_diagnostic d;
    if (lyreval_lint_get(result, i, &d) != LYREVAL_OK) continue;
    std::cerr << file << ":" << d.line << ": " << lyreval_lint_rule_name(d.rule) << ": "
              << d.message << (d.fixable ? " [fixable]" : "") << "\n";
  }
}

int run_lint(const std::vector<std::string>& files, const std::string& language, bool fix) {
  int status = kExitOk;
  bool any_remaining = false;
  for (const auto& file : files) {
    std::string text;
    if (!read_file(file, text)) {
      std::cerr << "lyreval: cannot read " << file << "\n";
      status = kExitError;
      continue;
    }
    lyreval_lint_result* raw = nullptr;
    if (lyreval_lint(text.c_str(), language.c_str(), &raw) != LYREVAL_OK) {
      status = report_failure(file);
      continue;
    }
    std::unique_ptr<lyreval_lint_result, LintDeleter> result(raw);

    if (fix && lyreval_lint_count(result.get()) > 0) {
      char* raw_fixed = nullptr;
      if (lyreval_lint_autofix(text.c_str(), result.get(), &raw_fixed) != LYREVAL_OK) {
        status = report_failure(file);
        continue;
      }
      CString fixed(raw_fixed);
      if (text != fixed.get()) {
        if (!write_output(file, fixed.get())) {
          std::cerr << "lyreval: cannot write " << file << "\n";
          status = kExitError;
          continue;
        }
        text = fixed.get();
      }
      if (lyreval_lint(text.c_str(), language.c_str(), &raw) != LYREVAL_OK) {
        status = report_failure(file);
        continue;
      }
      result.reset(raw);
    }
    print_diagnostics(file, result.get());
    any_remaining = any_remaining || lyreval_lint_count(result.get()) > 0;
  }
  if (status != kExitOk) return status;
  return any_remaining ? kExitLint : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyrics transcription evaluation, formatting included"};
  app.set_version_flag("--version", std::string(lyreval_version()));
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Score a hypothesis corpus against references");
  eval_cmd->add_option("--refs", eval.refs, "Reference root (one subdirectory per language)")
      ->required();
  eval_cmd->add_option("--hyps", eval.hyps, "Hypothesis root (flat or per language)")
      ->required();
  eval_cmd->add_option("--manifest", eval.manifest, "CSV with song_id,language columns");
  eval_cmd->add_option("--language", eval.languages, "Only score this language (repeatable)");
  eval_cmd->add_option("--format", eval.format, "json, csv or markdown")
      ->capture_default_str();
  eval_cmd->add_option("--out", eval.out, "Output file (default: standard output)");
  eval_cmd->add_flag("--per-song", eval.per_song, "Include per-song results");
  eval_cmd->add_flag("--timestamp", eval.timestamp, "Record the generation time in the report");

  std::string seg_in;
  std::string seg_out;
  auto* seg_cmd =
      app.add_subcommand("segments", "Turn timestamped ASR segments (JSON) into lyric lines");
  seg_cmd->add_option("--in", seg_in, "JSON array of {text, start, end}")->required();
  seg_cmd->add_option("--out", seg_out, "Output text file (default: standard output)");

  std::vector<std::string> lint_files;
  std::string lint_language;
  bool lint_fix = false;
  auto* lint_cmd = app.add_subcommand("lint", "Check lyric files against formatting rules");
  lint_cmd->add_option("files", lint_files, "Lyric files")->required();
  lint_cmd->add_option("--language", lint_language, "Language code");
  lint_cmd->add_flag("--fix", lint_fix, "Rewrite files with fixable problems corrected");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitError;
  }

  if (*eval_cmd) return run_eval(eval);
  if (*seg_cmd) return run_segments(seg_in, seg_out);
  if (*lint_cmd) return run_lint(lint_files, lint_language, lint_fix);
  return kExitError;
}
