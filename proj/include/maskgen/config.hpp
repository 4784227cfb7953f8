// Copyright 2026 The maskgen Authors
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

#ifndef MASKGEN_CONFIG_HPP
#define MASKGEN_CONFIG_HPP

#include "maskgen/pipeline.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace maskgen {

// Line-oriented `key = value` configuration. Keys mirror the CLI flag names
// without the leading dashes (e.g. `nms-iou-threshold = 0.4`); `#` starts a
// comment. Deliberately dependency-free so the precedence rules stay easy
// to test.

/// Parse a config file into key/value pairs (later entries win).
/// Throws IoError when the file cannot be read, std::invalid_argument on a
/// malformed line.
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

/// Apply one entry to the config. Throws std::invalid_argument for an
/// unknown key or an unparsable value.
void apply_config_entry(PipelineConfig& config, const std::string& key, const std::string& value);

/// parse_config_file + apply_config_entry over every pair.
void apply_config_file(PipelineConfig& config, const std::filesystem::path& path);

} // namespace maskgen

#endif // MASKGEN_CONFIG_HPP
