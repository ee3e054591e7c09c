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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oovbench/config.hpp"
#include "oovbench/corpus.hpp"
#include "oovbench/types.hpp"
#include "oovbench/vocabulary.hpp"

namespace oov {

/// Evaluation-input failure (bad submission, unknown ids, ...). The CLI maps
/// it to exit code 1.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatchPair {
  int det_index = -1;
  int gt_index = -1;
  double iou = 0.0;
  double overlap = 0.0;  // the ratio compared against the threshold
  bool transcription_correct = false;
};

/// Per-image one-to-one assignment of detections to care ground truth.
/// Pairs, suppressed_dets and unmatched_dets partition the detection indices.
struct MatchLedger {
  std::vector<MatchPair> pairs;
  std::vector<int> suppressed_dets;
  std::vector<int> unmatched_dets;
  std::vector<int> unmatched_gts;  // care GTs in no pair at all
};

/// Per-ground-truth scoring context shared by matching, counting and
/// analysis: the comparison key, whether the instance counts, and its
/// vocabulary subset (nullopt for don't-care instances).
struct GtContext {
  std::string normalized;
  bool care = false;
  std::optional<SubsetLabel> subset;
};

std::vector<GtContext> gt_contexts(std::span<const TextInstance> gts,
                                   const Vocabulary& vocab,
                                   const Alphabet& alphabet,
                                   const EvalConfig& cfg);

/// Two-pass greedy one-to-one matching against every care ground truth,
/// vocabulary-subset agnostic:
///   pass 1 takes candidate pairs above the overlap threshold with equal
///   normalized transcriptions, highest overlap first (ties: lower gt index,
///   then lower det index);
///   pass 2 takes remaining above-threshold pairs irrespective of
///   transcription (these carry transcription_correct = false).
/// Detections left unmatched are suppressed when their
/// intersection-over-detection-area against any base don't-care region
/// exceeds cfg.dontcare_overlap_threshold.
/// Throws EvalError on duplicate ground-truth instance ids.
MatchLedger match_image(std::span<const TextInstance> gts,
                        std::span<const Detection> dets,
                        std::span<const GtContext> contexts,
                        const EvalConfig& cfg);

struct EvalCounts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;

  EvalCounts& operator+=(const EvalCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
};

enum class CountMode { All, IV, OOV };

/// Subset-conditioned counting over a ledger. tp: correctly transcribed pairs
/// whose ground truth belongs to the mode; fn: care ground truth in the mode
/// not covered by a correct pair; fp: wrongly transcribed pairs plus
/// unmatched unsuppressed detections — identical in every mode.
EvalCounts count_mode(const MatchLedger& ledger,
                      std::span<const GtContext> contexts, CountMode mode);

/// Harmonic mean of precision and recall; 0 when both are 0.
double hmean(double precision, double recall);

struct SubsetMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double hmean = 0.0;
};

struct E2EReport {
  EvalCounts counts_all, counts_iv, counts_oov;
  SubsetMetrics all, iv, oov;
  double average_hmean = 0.0;  // (hmean_IV + hmean_OOV) / 2
};

/// Micro-aggregation: counts are summed over all images first, then turned
/// into precision/recall/hmean per mode. Degenerate denominators score 1.
SubsetMetrics metrics_from_counts(const EvalCounts& c);
E2EReport report_from_counts(const EvalCounts& all, const EvalCounts& iv,
                             const EvalCounts& oov);

struct DetectionSubmission {
  // image_id -> detections; images absent from the submission are evaluated
  // with zero detections.
  std::map<std::string, std::vector<Detection>> by_image;
  std::vector<ParseIssue> issues;
};

DetectionSubmission read_detection_submission(const std::filesystem::path& path);

/// Everything the ledger dump and the analyses need about one evaluated
/// image.
struct ImageEvalRecord {
  std::string image_id;
  std::string dataset;
  MatchLedger ledger;
  std::vector<GtContext> contexts;
  std::vector<std::string> gt_ids;
};

/// Evaluates a submission against every image in `images`. Detections for
/// unknown image ids raise EvalError listing the offenders. `details`, when
/// non-null, receives one record per image in image order.
E2EReport evaluate_e2e(std::span<const ImageAnnotation> images,
                       const DetectionSubmission& submission,
                       const Vocabulary& vocab, const Alphabet& alphabet,
                       const EvalConfig& cfg, int workers,
                       std::vector<ImageEvalRecord>* details = nullptr);

void write_ledger_dump(std::span<const ImageEvalRecord> records,
                       const std::filesystem::path& path);

}  // namespace oov
