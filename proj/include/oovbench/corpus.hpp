// Copyright 2026 The oovbench Authors
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

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "oovbench/types.hpp"

namespace oov {

/// The merged annotation corpus. Images are kept sorted by image_id and ids
/// are unique; provenance counts images per source dataset tag.
struct Corpus {
  std::vector<ImageAnnotation> images;
  std::map<std::string, std::size_t> provenance;
};

/// One rejected input record: line number (1-based; 0 when not line-oriented),
/// the offending field path, and what went wrong.
struct ParseIssue {
  std::size_t line = 0;
  std::string field;
  std::string message;
  std::string file;  // set by directory adapters

  std::string to_string() const;
};

struct CorpusReadResult {
  Corpus corpus;
  std::vector<ParseIssue> issues;
};

/// Reads the canonical line-delimited corpus format. Malformed lines are
/// collected as issues; well-formed lines still produce a corpus.
CorpusReadResult read_canonical(const std::filesystem::path& path);

/// Writes the canonical format deterministically (sorted images, sorted keys).
void write_canonical(const Corpus& corpus, const std::filesystem::path& path);

/// Adapter for per-image ground-truth text files: each line holds 8
/// comma-separated coordinates followed by the transcription ("###" marks an
/// unreadable instance). One file per image, image ids are
/// "<dataset_tag>/<file stem>" (a leading "gt_" on the stem is dropped).
CorpusReadResult adapt_quad_per_line(const std::filesystem::path& gt_dir,
                                     const std::string& dataset_tag,
                                     Split split);

/// Adapter for the attribute-keyed single-file style: one JSON document with
/// "imgs" (id -> {width, height, set}) and "anns" (id -> {image_id, bbox or
/// polygon/mask, utf8_string, legibility}). Axis-aligned boxes are expanded
/// to 4-vertex polygons.
CorpusReadResult adapt_cocotext_style(const std::filesystem::path& json_path,
                                      const std::string& dataset_tag = "cocotext");

struct CorpusStatsRow {
  std::string dataset;
  Split split;
  std::size_t image_count = 0;
  std::size_t instance_count = 0;
};

struct CorpusStats {
  std::vector<CorpusStatsRow> rows;  // sorted by (dataset, split)
  std::size_t total_images = 0;
  std::size_t total_instances = 0;
};

CorpusStats corpus_stats(const Corpus& corpus);

/// Merges images into a corpus: sorts by image_id, recomputes provenance, and
/// reports duplicate ids via issues.
CorpusReadResult assemble_corpus(std::vector<ImageAnnotation> images);

}  // namespace oov
