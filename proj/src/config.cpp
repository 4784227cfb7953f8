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

#include "maskgen/config.hpp"

#include "maskgen/error.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace maskgen {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw std::invalid_argument("config key '" + key + "': '" + value + "' is not an integer");
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        const double out = std::stod(value, &consumed);
        if (consumed != value.size()) throw std::invalid_argument("");
        return out;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': '" + value + "' is not a number");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::invalid_argument("config key '" + key + "': '" + value + "' is not a boolean");
}

Polarity parse_polarity(const std::string& key, const std::string& value) {
    if (value == "dark") return Polarity::dark;
    if (value == "bright") return Polarity::bright;
    if (value == "both") return Polarity::both;
    throw std::invalid_argument("config key '" + key + "': '" + value +
                                "' is not one of dark/bright/both");
}

} // namespace

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path.string() + "'");

    std::map<std::string, std::string> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
        }
        entries[key] = value;
    }
    return entries;
}

void apply_config_entry(PipelineConfig& config, const std::string& key, const std::string& value) {
    if (key == "mser-delta") {
        config.mser.delta = parse_int(key, value);
    } else if (key == "mser-min-area") {
        config.mser.min_area = parse_int(key, value);
    } else if (key == "mser-max-area-fraction") {
        config.mser.max_area_fraction = parse_double(key, value);
    } else if (key == "mser-max-variation") {
        config.mser.max_variation = parse_double(key, value);
    } else if (key == "mser-polarity") {
        config.mser.polarity = parse_polarity(key, value);
    } else if (key == "nms-iou-threshold") {
        config.nms_iou_threshold = parse_double(key, value);
    } else if (key == "tv-iterations") {
        config.denoise.iterations = parse_int(key, value);
    } else if (key == "tv-step") {
        config.denoise.step = parse_double(key, value);
    } else if (key == "tv-fidelity-weight") {
        config.denoise.fidelity_weight = parse_double(key, value);
    } else if (key == "tv-epsilon") {
        config.denoise.epsilon = parse_double(key, value);
    } else if (key == "pre-binarize-erosions") {
        config.pre_binarize_erosions = parse_int(key, value);
    } else if (key == "binarize-threshold") {
        config.binarize_threshold = parse_int(key, value);
    } else if (key == "post-binarize-erosions") {
        config.post_binarize_erosions = parse_int(key, value);
    } else if (key == "post-dilations") {
        config.post_dilations = parse_int(key, value);
    } else if (key == "post-union-erosions") {
        config.post_union_erosions = parse_int(key, value);
    } else if (key == "dump-intermediates") {
        config.dump_intermediates = parse_bool(key, value);
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_config_file(PipelineConfig& config, const std::filesystem::path& path) {
    for (const auto& [key, value] : parse_config_file(path)) {
        apply_config_entry(config, key, value);
    }
}

} // namespace maskgen
