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

#include <string>
#include <string_view>

#include "oovbench/alphabet.hpp"
#include "oovbench/config.hpp"
#include "oovbench/types.hpp"

namespace oov {

/// Decodes UTF-8; malformed sequences become U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

/// The comparison key used everywhere transcriptions are compared: canonical
/// composition (NFC), lowercasing only when cfg.case_sensitive is off, then
/// leading/trailing whitespace stripped. Interior characters, punctuation
/// included, are left alone. Idempotent.
std::string normalize_transcription(std::string_view raw, const EvalConfig& cfg);

/// True iff every codepoint of the (already normalized) word is allowed.
/// The empty word is not in any alphabet.
bool is_in_alphabet(std::string_view word, const Alphabet& alphabet);

/// A ground-truth instance is excluded from scoring when it is marked
/// unreadable, carries no transcription, or its normalized transcription
/// falls outside the alphabet.
bool effective_dontcare(const TextInstance& inst, const Alphabet& alphabet,
                        const EvalConfig& cfg);

}  // namespace oov
