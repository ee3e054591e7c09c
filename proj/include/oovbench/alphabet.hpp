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
#include <string_view>
#include <unordered_set>

namespace oov {

/// The set of codepoints a scoreable word may consist of. Words containing
/// anything outside the alphabet are excluded from evaluation.
class Alphabet {
 public:
  /// Latin letters, digits, and ASCII punctuation (no whitespace).
  static Alphabet latin_default();

  /// UTF-8 file, one line listing every allowed codepoint; duplicates are
  /// ignored, CR/LF are not part of the alphabet. Throws std::runtime_error
  /// on unreadable or empty input.
  static Alphabet from_file(const std::filesystem::path& path);

  static Alphabet from_codepoints(std::u32string_view codepoints);

  bool contains(char32_t cp) const { return allowed_.count(cp) != 0; }
  std::size_t size() const { return allowed_.size(); }

 private:
  std::unordered_set<char32_t> allowed_;
};

}  // namespace oov
