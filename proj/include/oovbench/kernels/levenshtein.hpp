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
#include <string_view>

namespace oov::kernels {

/// Unit-cost Levenshtein distance over 32-bit codepoints. Dispatches to the
/// active backend.
std::uint32_t levenshtein_u32(std::u32string_view a, std::u32string_view b);

/// Reference implementation: classic two-row dynamic program.
std::uint32_t levenshtein_u32_scalar(std::u32string_view a, std::u32string_view b);

#if defined(OOV_BUILD_AVX2)
/// Anti-diagonal vectorization of the same dynamic program, 8 cells per step.
std::uint32_t levenshtein_u32_avx2(std::u32string_view a, std::u32string_view b);
#endif

}  // namespace oov::kernels
