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
#include <string>

namespace oov {

/// Which overlap ratio decides whether a detection/ground-truth pair clears
/// the match threshold. The default is intersection-over-union; iog
/// (intersection over ground-truth area) is kept available as a knob.
enum class OverlapMetric { iou, iog };

struct EvalConfig {
  double iou_threshold = 0.5;              // strict >, in (0,1]
  double dontcare_overlap_threshold = 0.5; // strict >, in (0,1]
  bool case_sensitive = true;
  int heatmap_grid = 64;
  int length_max_bucket = 25;
  OverlapMetric overlap_metric = OverlapMetric::iou;
  // Vocabulary membership stays case-sensitive by default even though the
  // comparison key already folds case when case_sensitive is off; this flag
  // forces case-folded membership for ablations.
  bool vocab_case_insensitive = false;
  int validation_cap = 5000;
  // Occurrence counting for validation selection ranges over care instances
  // only; turning this off also counts transcribed-but-illegible instances.
  bool singleton_care_only = true;

  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Loads a flat key = value config file ('#' starts a comment, unknown keys
/// are rejected). Missing keys keep their defaults.
EvalConfig load_config(const std::filesystem::path& path);

/// Applies a single "key=value" assignment; shared by file loading and tests.
void apply_config_entry(EvalConfig& cfg, const std::string& key,
                        const std::string& value);

}  // namespace oov
