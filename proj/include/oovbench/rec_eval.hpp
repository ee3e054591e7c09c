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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oovbench/config.hpp"
#include "oovbench/corpus.hpp"
#include "oovbench/vocabulary.hpp"

namespace oov {

/// Unit-cost Levenshtein distance over Unicode codepoints.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance_utf8(std::string_view a, std::string_view b);

struct RecognitionSubmission {
  std::unordered_map<std::string, std::string> predictions;  // word_id -> text
  std::vector<ParseIssue> issues;
};

RecognitionSubmission read_recognition_submission(const std::filesystem::path& path);

struct RecognitionMetrics {
  double word_accuracy = 0.0;
  std::uint64_t total_edit_distance = 0;
  std::size_t n_words = 0;
  std::size_t n_correct = 0;
};

struct RecReport {
  RecognitionMetrics iv, oov;
  double total_word_accuracy = 0.0;  // (acc_IV + acc_OOV) / 2
};

/// One prediction is scored per outcome, for analysis reuse.
struct RecOutcome {
  const CroppedWordRecord* record = nullptr;
  bool correct = false;
  std::size_t edit_dist = 0;
};

/// Scores a submission against the cropped-word ground truth. Missing
/// predictions count as empty strings (full-length edit distance) unless
/// `strict`, in which case they raise EvalError; predictions for unknown
/// word ids always raise EvalError listing the offenders. A subset with no
/// words scores accuracy 1 (vacuous set, same convention as the degenerate
/// detection denominators).
RecReport score_submission(std::span<const CroppedWordRecord> gt,
                           const RecognitionSubmission& submission,
                           const EvalConfig& cfg, bool strict = false,
                           std::vector<RecOutcome>* outcomes = nullptr);

}  // namespace oov
