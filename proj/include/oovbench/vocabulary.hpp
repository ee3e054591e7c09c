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
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "oovbench/alphabet.hpp"
#include "oovbench/config.hpp"
#include "oovbench/corpus.hpp"
#include "oovbench/text.hpp"

namespace oov {

/// The in-vocabulary word set: every normalized, in-alphabet transcription
/// seen in the train and validation splits, plus an external lexicon.
struct Vocabulary {
  std::unordered_set<std::string> words;
  std::size_t corpus_word_count = 0;   // distinct words contributed by the corpus
  std::size_t lexicon_word_count = 0;  // distinct words contributed by the lexicon

  bool contains(std::string_view w) const {
    return words.count(std::string(w)) != 0;
  }
};

Vocabulary build_vocabulary(const Corpus& corpus,
                            const std::optional<std::filesystem::path>& lexicon,
                            const Alphabet& alphabet, const EvalConfig& cfg);

/// Loads a previously written vocabulary file (one word per line, assumed
/// normalized by build_vocabulary).
Vocabulary load_vocabulary(const std::filesystem::path& path);

void write_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path);

/// IV iff the word is in the vocabulary. The word must be normalized and
/// in-alphabet; out-of-alphabet input throws std::invalid_argument.
SubsetLabel classify_word(std::string_view word, const Vocabulary& vocab,
                          const Alphabet& alphabet, const EvalConfig& cfg);

/// Test-split images containing at least one care instance classified OOV,
/// sorted by image_id.
std::vector<std::string> select_test_images(const Corpus& corpus,
                                            const Vocabulary& vocab,
                                            const Alphabet& alphabet,
                                            const EvalConfig& cfg);

/// Images from the train+validation pool containing at least one care word
/// whose occurrence count over the whole pool is exactly one; sorted by
/// image_id and truncated to cfg.validation_cap. Pool images not selected are
/// meant to stay in (or return to) the train split.
std::vector<std::string> select_validation_images(const Corpus& corpus,
                                                  const Alphabet& alphabet,
                                                  const EvalConfig& cfg);

struct CroppedWordRecord {
  std::string word_id;        // "<image_id>#<instance_id>"
  std::string transcription;  // normalized
  std::string dataset;
  SubsetLabel subset = SubsetLabel::IV;
};

/// One record per care instance in the split, in image order.
std::vector<CroppedWordRecord> export_cropped_words(const Corpus& corpus,
                                                    const Vocabulary& vocab,
                                                    Split split,
                                                    const Alphabet& alphabet,
                                                    const EvalConfig& cfg);

void write_cropped_words(std::span<const CroppedWordRecord> records,
                         const std::filesystem::path& path);

struct CroppedWordsReadResult {
  std::vector<CroppedWordRecord> records;
  std::vector<ParseIssue> issues;
};

CroppedWordsReadResult read_cropped_words(const std::filesystem::path& path);

}  // namespace oov
