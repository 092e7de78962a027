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

#include "corpusio.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "error.hpp"
#include "json.hpp"
#include "unicode.hpp"

namespace lyreval::corpusio {

namespace fs = std::filesystem;
using nlohmann::json;
using textnorm::TokenType;

namespace {

constexpr std::string_view kUndefinedCell = "\xE2\x80\x94";  // em dash

// Types shown in the headline tables; W is kept for JSON diagnostics only.
constexpr TokenType kReportedTypes[] = {TokenType::kPunctuation,
                                        TokenType::kParenthesis,
                                        TokenType::kLineBreak,
                                        TokenType::kSectionBreak};

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool row_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        row_started = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        row_started = true;
        break;
      case '\r':
        break;
      case '\n':
        if (row_started || !field.empty()) {
          row.push_back(std::move(field));
          rows.push_back(std::move(row));
        }
        field.clear();
        row.clear();
        row_started = false;
        break;
      default:
        field.push_back(c);
        row_started = true;
    }
  }
  if (quoted) throw Error(ErrorKind::kParse, "unterminated quoted CSV field");
  if (row_started || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string trim_ascii(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// song_id -> language
std::map<std::string, std::string> read_manifest(const fs::path& path) {
  const auto rows = parse_csv(read_text_file(path));
  if (rows.empty()) throw Error(ErrorKind::kParse, "manifest is empty: " + path.string());
  std::size_t id_col = rows[0].size();
  std::size_t lang_col = rows[0].size();
  for (std::size_t c = 0; c < rows[0].size(); ++c) {
    const std::string name = trim_ascii(rows[0][c]);
    if (name == "song_id") id_col = c;
    if (name == "language") lang_col = c;
  }
  if (id_col == rows[0].size() || lang_col == rows[0].size()) {
    throw Error(ErrorKind::kParse,
                "manifest needs song_id and language columns: " + path.string());
  }
  std::map<std::string, std::string> languages;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() <= std::max(id_col, lang_col)) {
      throw Error(ErrorKind::kParse, "manifest row " + std::to_string(r + 1) +
                                         " has too few columns");
    }
    std::string id = trim_ascii(row[id_col]);
    std::string language = trim_ascii(row[lang_col]);
    if (id.empty() || language.empty()) {
      throw Error(ErrorKind::kParse,
                  "manifest row " + std::to_string(r + 1) + " has an empty field");
    }
    if (!languages.emplace(id, language).second) {
      throw Error(ErrorKind::kInvalidArgument, "manifest lists song '" + id + "' twice");
    }
  }
  return languages;
}

struct RefFile {
  fs::path path;
  std::string directory;  // language subdirectory name, empty when flat
};

std::vector<fs::path> sorted_txt_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::map<std::string, RefFile> scan_references(const fs::path& refs_root) {
  std::map<std::string, RefFile> refs;
  auto add = [&](const fs::path& file, const std::string& directory) {
    const std::string stem = file.stem().string();
    auto [it, inserted] = refs.emplace(stem, RefFile{file, directory});
    if (!inserted) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate song id '" + stem + "': " + it->second.path.string() +
                      " and " + file.string());
    }
  };
  for (const auto& file : sorted_txt_files(refs_root)) add(file, "");

  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(refs_root)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());
  for (const auto& dir : dirs) {
    for (const auto& file : sorted_txt_files(dir)) add(file, dir.filename().string());
  }
  return refs;
}

std::optional<fs::path> find_hypothesis(const fs::path& hyps_root,
                                        const std::string& stem,
                                        const std::string& ref_dir,
                                        const std::string& language) {
  std::vector<fs::path> candidates;
  if (!ref_dir.empty()) candidates.push_back(hyps_root / ref_dir / (stem + ".txt"));
  if (language != ref_dir) candidates.push_back(hyps_root / language / (stem + ".txt"));
  candidates.push_back(hyps_root / (stem + ".txt"));
  for (const auto& c : candidates) {
    if (fs::is_regular_file(c)) return c;
  }
  return std::nullopt;
}

std::string trim_unicode(std::string_view text) {
  std::u32string s = unicode::decode(text);
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && unicode::is_space(s[b])) ++b;
  while (e > b && unicode::is_space(s[e - 1])) --e;
  return unicode::encode(std::u32string_view(s).substr(b, e - b));
}

json rate_json(const metrics::Rate& rate) {
  if (!rate) return nullptr;
  return rate->value();
}

json type_json(const align::EditCounts& counts, TokenType t) {
  const auto& c = counts[t];
  const auto prf = metrics::prf(counts, t);
  return json{{"hits", c.hits},
              {"substitutions", c.substitutions},
              {"deletions", c.deletions},
              {"insertions", c.insertions},
              {"precision", rate_json(prf.precision)},
              {"recall", rate_json(prf.recall)},
              {"f1", rate_json(prf.f1)}};
}

json metrics_json(const metrics::WerBreakdown& words, const metrics::CaseResult& casing,
                  const align::EditCounts& tokens) {
  json types = json::object();
  for (TokenType t : textnorm::kAllTokenTypes) {
    types[std::string(1, textnorm::token_type_code(t))] = type_json(tokens, t);
  }
  return json{{"words",
               {{"hits", words.hits},
                {"substitutions", words.substitutions},
                {"deletions", words.deletions},
                {"insertions", words.insertions},
                {"reference_words", words.ref_words}}},
              {"wer", rate_json(words.wer())},
              {"case_errors", casing.case_errors},
              {"case_error_rate", casing.rate().value()},
              {"types", std::move(types)}};
}

std::string render_json(const CorpusReport& report, bool per_song) {
  const auto& meta = report.metadata;
  json metadata = {{"refs", meta.refs_root},
                   {"hyps", meta.hyps_root},
                   {"manifest", meta.manifest.empty() ? json(nullptr) : json(meta.manifest)},
                   {"languages", meta.languages}};
  if (!meta.generated_at.empty()) metadata["generated_at"] = meta.generated_at;

  json groups = json::array();
  for (const auto& row : report.rows) {
    json g = metrics_json(row.words, row.casing, row.tokens);
    g["group"] = row.group;
    g["songs"] = row.songs;
    groups.push_back(std::move(g));
  }
  json doc = {{"tool", {{"name", "lyreval"}, {"version", meta.tool_version}}},
              {"metadata", std::move(metadata)},
              {"groups", std::move(groups)},
              {"warnings", report.warnings}};
  if (per_song) {
    json songs = json::array();
    for (const auto& song : report.songs) {
      json s = metrics_json(song.words, song.casing, song.tokens);
      s["song_id"] = song.song_id;
      s["language"] = song.language;
      songs.push_back(std::move(s));
    }
    doc["songs"] = std::move(songs);
  }
  return doc.dump(2) + "\n";
}

template <typename Row>
std::vector<std::string> metric_cells(const Row& row) {
  std::vector<std::string> cells;
  cells.push_back(format_percent(row.words.wer()));
  cells.push_back(format_percent(row.casing.rate()));
  for (TokenType t : kReportedTypes) {
    const auto prf = row.prf(t);
    cells.push_back(format_percent(prf.precision));
    cells.push_back(format_percent(prf.recall));
    cells.push_back(format_percent(prf.f1));
  }
  return cells;
}

std::vector<std::string> metric_headers() {
  std::vector<std::string> headers = {"WER", "E_Aa"};
  for (TokenType t : kReportedTypes) {
    const char code = textnorm::token_type_code(t);
    for (const char* m : {"P_", "R_", "F_"}) headers.push_back(m + std::string(1, code));
  }
  return headers;
}

std::string csv_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_csv_row(std::ostringstream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_quote(cells[i] == kUndefinedCell ? std::string_view() : cells[i]);
  }
  out << '\n';
}

std::string render_csv(const CorpusReport& report, bool per_song) {
  std::ostringstream out;
  std::vector<std::string> header = {"group", "song", "songs"};
  for (auto& h : metric_headers()) header.push_back(std::move(h));
  write_csv_row(out, header);
  for (const auto& row : report.rows) {
    std::vector<std::string> cells = {row.group, "", std::to_string(row.songs)};
    for (auto& c : metric_cells(row)) cells.push_back(std::move(c));
    write_csv_row(out, cells);
  }
  if (per_song) {
    for (const auto& song : report.songs) {
      std::vector<std::string> cells = {song.language, song.song_id, "1"};
      for (auto& c : metric_cells(song)) cells.push_back(std::move(c));
      write_csv_row(out, cells);
    }
  }
  return out.str();
}

void write_markdown_row(std::ostringstream& out, const std::vector<std::string>& cells) {
  out << '|';
  for (const auto& c : cells) out << ' ' << c << " |";
  out << '\n';
}

void write_markdown_rule(std::ostringstream& out, std::size_t text_columns,
                         std::size_t total_columns) {
  out << '|';
  for (std::size_t i = 0; i < total_columns; ++i) out << (i < text_columns ? "---|" : "---:|");
  out << '\n';
}

std::string render_markdown(const CorpusReport& report, bool per_song) {
  std::ostringstream out;
  std::vector<std::string> header = {"Language", "Songs"};
  for (auto& h : metric_headers()) header.push_back(std::move(h));
  write_markdown_row(out, header);
  write_markdown_rule(out, 1, header.size());
  for (const auto& row : report.rows) {
    std::vector<std::string> cells = {language_display_name(row.group),
                                      std::to_string(row.songs)};
    for (auto& c : metric_cells(row)) cells.push_back(std::move(c));
    write_markdown_row(out, cells);
  }
  if (per_song && !report.songs.empty()) {
    out << '\n';
    std::vector<std::string> song_header = {"Song", "Language"};
    for (auto& h : metric_headers()) song_header.push_back(std::move(h));
    write_markdown_row(out, song_header);
    write_markdown_rule(out, 2, song_header.size());
    for (const auto& song : report.songs) {
      std::vector<std::string> cells = {song.song_id, song.language};
      for (auto& c : metric_cells(song)) cells.push_back(std::move(c));
      write_markdown_row(out, cells);
    }
  }
  return out.str();
}

}  // namespace

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
  return text;
}

LoadedCorpus load_corpus(const fs::path& refs_root, const fs::path& hyps_root,
                         const std::optional<fs::path>& manifest) {
  if (!fs::is_directory(refs_root)) {
    throw Error(ErrorKind::kIo, "reference directory not found: " + refs_root.string());
  }
  if (!fs::is_directory(hyps_root)) {
    throw Error(ErrorKind::kIo, "hypothesis directory not found: " + hyps_root.string());
  }
  const auto refs = scan_references(refs_root);
  std::map<std::string, std::string> manifest_languages;
  if (manifest) {
    manifest_languages = read_manifest(*manifest);
    for (const auto& [id, language] : manifest_languages) {
      if (!refs.contains(id)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "manifest references unknown song '" + id + "'");
      }
    }
  }

  LoadedCorpus corpus;
  for (const auto& [stem, ref] : refs) {
    CorpusItem item;
    item.song_id = stem;
    item.language = ref.directory;
    if (auto it = manifest_languages.find(stem); it != manifest_languages.end()) {
      item.language = it->second;
    }
    if (item.language.empty()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "no language for song '" + stem +
                      "': place it in a language directory or list it in a manifest");
    }
    item.ref_text = read_text_file(ref.path);
    if (auto hyp = find_hypothesis(hyps_root, stem, ref.directory, item.language)) {
      item.hyp_text = read_text_file(*hyp);
    } else {
      item.hyp_missing = true;
      corpus.warnings.push_back("no hypothesis for song '" + stem +
                                "'; scoring it as an empty transcript");
    }
    corpus.items.push_back(std::move(item));
  }
  std::sort(corpus.items.begin(), corpus.items.end(), [](const auto& a, const auto& b) {
    return std::tie(a.language, a.song_id) < std::tie(b.language, b.song_id);
  });
  return corpus;
}

std::vector<Segment> parse_segments_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("segments file is not valid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("segments")) doc = doc["segments"];
  if (!doc.is_array()) {
    throw Error(ErrorKind::kParse, "segments file must hold a JSON array of segments");
  }
  std::vector<Segment> segments;
  segments.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& s = doc[i];
    if (!s.is_object() || !s.contains("text") || !s["text"].is_string() ||
        !s.contains("start") || !s["start"].is_number() || !s.contains("end") ||
        !s["end"].is_number()) {
      throw Error(ErrorKind::kParse, "segment " + std::to_string(i) +
                                         " needs a string 'text' and numeric 'start'/'end'");
    }
    segments.push_back({s["text"].get<std::string>(), s["start"].get<double>(),
                        s["end"].get<double>()});
  }
  return segments;
}

std::string segments_to_text(std::span<const Segment> segments) {
  std::string out;
  double previous_start = 0.0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    if (!(s.start_s >= 0.0) || !(s.end_s >= s.start_s)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "segment " + std::to_string(i) + " has invalid times");
    }
    if (i > 0 && s.start_s < previous_start) {
      throw Error(ErrorKind::kInvalidArgument,
                  "segments are not sorted by start time at index " + std::to_string(i));
    }
    previous_start = s.start_s;

    std::string text = s.text;
    std::replace(text.begin(), text.end(), '\n', ' ');
    std::replace(text.begin(), text.end(), '\r', ' ');
    text = trim_unicode(text);
    if (text.empty()) continue;
    if (!out.empty()) out.push_back('\n');
    out += text;
  }
  return out;
}

CorpusReport evaluate_corpus(std::span<const CorpusItem> items, ReportMetadata metadata,
                             std::vector<std::string> warnings) {
  std::vector<const CorpusItem*> selected;
  for (const auto& item : items) {
    if (metadata.languages.empty() ||
        std::find(metadata.languages.begin(), metadata.languages.end(), item.language) !=
            metadata.languages.end()) {
      selected.push_back(&item);
    }
  }
  std::sort(selected.begin(), selected.end(), [](const auto* a, const auto* b) {
    return std::tie(a->language, a->song_id) < std::tie(b->language, b->song_id);
  });

  CorpusReport report;
  report.songs.resize(selected.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        const CorpusItem& item = *selected[i];
        report.songs[i] = metrics::evaluate_pair(item.ref_text, item.hyp_text,
                                                 item.language, item.song_id);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                            selected.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  report.rows = metrics::aggregate(report.songs, metrics::Grouping::kPerLanguage);
  report.warnings = std::move(warnings);
  report.metadata = std::move(metadata);
  return report;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw Error(ErrorKind::kInvalidArgument, "unknown report format '" + std::string(name) +
                                               "' (expected json, csv or markdown)");
}

std::string render_report(const CorpusReport& report, ReportFormat format, bool per_song) {
  switch (format) {
    case ReportFormat::kJson: return render_json(report, per_song);
    case ReportFormat::kCsv: return render_csv(report, per_song);
    case ReportFormat::kMarkdown: return render_markdown(report, per_song);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown report format");
}

std::string format_percent(const metrics::Rate& rate) {
  if (!rate) return std::string(kUndefinedCell);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", rate->value() * 100.0);
  return buf;
}

std::string language_display_name(std::string_view code) {
  static const std::map<std::string_view, std::string_view> names = {
      {"en", "English"}, {"es", "Spanish"}, {"de", "German"}, {"fr", "French"}};
  if (auto it = names.find(code); it != names.end()) return std::string(it->second);
  return std::string(code);
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace lyreval::corpusio
