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

#include <cstdint>
#include <filesystem>
#include <map>
#include <regex>
#include <span>
#include <string>
#include <vector>

#include "oovbench/alphabet.hpp"
#include "oovbench/config.hpp"
#include "oovbench/corpus.hpp"
#include "oovbench/types.hpp"
#include "oovbench/vocabulary.hpp"

namespace oov {

/// One scored care instance, the unit every diagnostic aggregates over.
/// For Task 1 success means "covered by a correct match"; for Task 2 it
/// means "prediction equals ground truth".
struct AnalysisOutcome {
  std::string word;  // normalized transcription
  std::string dataset;
  SubsetLabel subset = SubsetLabel::IV;
  bool success = false;
};

struct LengthBucket {
  std::size_t n = 0;
  std::size_t successes = 0;
  // n == 0 marks an empty bucket, which is distinct from a zero rate.
  double rate() const { return n == 0 ? 0.0 : double(successes) / double(n); }
};

/// Success rate per character-length bucket (2 .. cfg.length_max_bucket) and
/// subset. Longer words are clamped into the last bucket; words shorter than
/// the first bucket are out of range and dropped.
struct LengthProfile {
  int min_length = 2;
  int max_length = 25;
  std::vector<LengthBucket> iv;   // index 0 <-> min_length
  std::vector<LengthBucket> oov;
};

LengthProfile length_profile(std::span<const AnalysisOutcome> outcomes,
                             const EvalConfig& cfg);

struct CategoryRule {
  std::string name;
  int priority = 0;  // lower value wins
  bool icase = false;
  std::string pattern;
  std::regex compiled;
};

/// The built-in category rules: email, url, phone, price, units, number,
/// with "other" as the fallback.
std::vector<CategoryRule> default_category_rules();

/// Tab-separated rule file: name, priority, flags ("i" or "-"), pattern.
/// Throws std::runtime_error on unreadable input, bad priorities or patterns
/// that do not compile.
std::vector<CategoryRule> load_category_rules(const std::filesystem::path& path);

/// First matching rule by ascending priority; "other" when none match.
std::string categorize(const std::string& word,
                       std::span<const CategoryRule> rules);

struct CategoryStat {
  std::string category;
  SubsetLabel subset = SubsetLabel::IV;
  std::size_t n = 0;
  std::size_t successes = 0;
};

/// Mean success per (category, subset), zero-member rows omitted; sorted by
/// (category, subset).
std::vector<CategoryStat> category_accuracy(std::span<const AnalysisOutcome> outcomes,
                                            std::span<const CategoryRule> rules);

struct SpatialHeatmap {
  int grid = 0;
  std::string dataset;  // empty = all datasets
  std::vector<std::uint64_t> cells;  // row-major, grid*grid

  std::uint64_t& at(int row, int col) { return cells[std::size_t(row) * grid + col]; }
  std::uint64_t at(int row, int col) const { return cells[std::size_t(row) * grid + col]; }
};

/// Care-instance centroids normalized to the unit square and binned into a
/// G x G grid; out-of-frame centroids are clamped to the border cells.
SpatialHeatmap spatial_heatmap(const Corpus& corpus, std::string_view dataset_filter,
                               int grid, const Alphabet& alphabet,
                               const EvalConfig& cfg);

/// Images per care-word-count bin, stacked by dataset. Bins 1..150 plus an
/// overflow bin; images with no care words are reported separately in bin 0.
struct WordsPerImageHistogram {
  static constexpr int kMaxBin = 150;
  // dataset -> counts indexed 0..150, plus [151] = overflow (> 150 words)
  std::map<std::string, std::vector<std::uint64_t>> by_dataset;
};

WordsPerImageHistogram words_per_image_histogram(const Corpus& corpus,
                                                 const Alphabet& alphabet,
                                                 const EvalConfig& cfg);

/// OOV word-length counts per dataset.
struct OovLengthHistogram {
  std::map<std::pair<std::string, std::size_t>, std::uint64_t> counts;
};

OovLengthHistogram oov_length_histogram(std::span<const CroppedWordRecord> crops);

}  // namespace oov
