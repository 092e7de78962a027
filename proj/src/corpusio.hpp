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

// Corpus loading, timestamped-segment conversion and report rendering.
//
// On-disk layout: refs_root holds one subdirectory per language code with
// one UTF-8 .txt file per song (flat files are allowed when a manifest
// supplies their language). Hypotheses are matched by file stem, either
// flat under hyps_root or under hyps_root/<language>/.

#ifndef LYREVAL_CORPUSIO_HPP_
#define LYREVAL_CORPUSIO_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metrics.hpp"

namespace lyreval::corpusio {

struct CorpusItem {
  std::string song_id;
  std::string language;
  std::string ref_text;
  std::string hyp_text;
  bool hyp_missing = false;
};

struct LoadedCorpus {
  std::vector<CorpusItem> items;  // sorted by (language, song_id)
  std::vector<std::string> warnings;
};

LoadedCorpus load_corpus(const std::filesystem::path& refs_root,
                         const std::filesystem::path& hyps_root,
                         const std::optional<std::filesystem::path>& manifest);

struct Segment {
  std::string text;
  double start_s = 0.0;
  double end_s = 0.0;
};

// Accepts a JSON array of {"text", "start", "end"} objects, or an object
// whose "segments" member is such an array.
std::vector<Segment> parse_segments_json(std::string_view json_text);

// One line per non-empty segment. Throws if segments are not sorted by start
// time or have negative or inverted times.
std::string segments_to_text(std::span<const Segment> segments);

struct ReportMetadata {
  std::string tool_version;
  std::string generated_at;  // omitted from output when empty
  std::string refs_root;
  std::string hyps_root;
  std::string manifest;
  std::vector<std::string> languages;  // filter, empty = all
};

struct CorpusReport {
  std::vector<metrics::GroupRow> rows;  // "All" first, then by language
  std::vector<metrics::SongReport> songs;
  std::vector<std::string> warnings;
  ReportMetadata metadata;
};

// Scores every item whose language passes the filter. Songs are evaluated
// in parallel; output order is (language, song_id).
// Throws Error(kNoSongs) if nothing is left to score.
CorpusReport evaluate_corpus(std::span<const CorpusItem> items,
                             ReportMetadata metadata,
                             std::vector<std::string> warnings = {});

enum class ReportFormat { kJson, kCsv, kMarkdown };

ReportFormat parse_report_format(std::string_view name);

std::string render_report(const CorpusReport& report, ReportFormat format,
                          bool per_song);

// Percentage with one decimal, or an em dash for UNDEFINED.
std::string format_percent(const metrics::Rate& rate);

std::string language_display_name(std::string_view code);

// ISO 8601 UTC; honours SOURCE_DATE_EPOCH for reproducible builds.
std::string utc_timestamp();

std::string read_text_file(const std::filesystem::path& path);

}  // namespace lyreval::corpusio

#endif  // LYREVAL_CORPUSIO_HPP_
