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

#include <string_view>

namespace oov::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);

/// The widest backend this host can run.
Backend preferred_backend();

bool backend_supported(Backend b);

/// Backend used by the dispatching kernel entry points. Defaults to
/// preferred_backend(); the OOVBENCH_KERNEL environment variable (scalar|avx2)
/// overrides the default at first use.
Backend active_backend();

/// Throws std::invalid_argument if this host cannot run the backend.
void set_backend(Backend b);

/// Parses "auto" | "scalar" | "avx2" and applies it.
void set_backend_by_name(std::string_view name);

}  // namespace oov::kernels
