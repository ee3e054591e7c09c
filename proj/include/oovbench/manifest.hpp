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
#include <vector>

#include "oovbench/config.hpp"

namespace oov {

inline constexpr const char* kToolName = "oovbench";
inline constexpr const char* kToolVersion = "0.1.0";

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Record of one CLI run: inputs, config and output digests. Identical inputs
/// and config always reproduce identical output digests; only the timestamp
/// varies between runs.
struct RunManifest {
  std::vector<std::string> command;
  EvalConfig config;
  std::vector<std::pair<std::string, std::string>> inputs;   // path, sha256
  std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256

  void add_input(const std::filesystem::path& p);
  void add_output(const std::filesystem::path& p);
  void write(const std::filesystem::path& path) const;
};

}  // namespace oov
