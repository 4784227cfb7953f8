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

#ifndef MASKGEN_TESTS_HELPERS_HPP
#define MASKGEN_TESTS_HELPERS_HPP

#include "maskgen/image.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace testutil {

/// Unique scratch directory, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        const auto base = std::filesystem::temp_directory_path();
        path_ = base / ("maskgen_" + tag + "_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline maskgen::GrayImage random_gray(std::mt19937& rng, int w, int h, int lo = 0, int hi = 255) {
    std::uniform_int_distribution<int> dist(lo, hi);
    maskgen::GrayImage img(w, h);
    for (auto& v : img.data) v = static_cast<std::uint8_t>(dist(rng));
    return img;
}

inline maskgen::ColorImage random_color(std::mt19937& rng, int w, int h) {
    std::uniform_int_distribution<int> dist(0, 255);
    maskgen::ColorImage img(w, h);
    for (auto& px : img.data) {
        px.r = static_cast<std::uint8_t>(dist(rng));
        px.g = static_cast<std::uint8_t>(dist(rng));
        px.b = static_cast<std::uint8_t>(dist(rng));
    }
    return img;
}

inline maskgen::BinaryMask random_mask(std::mt19937& rng, int w, int h, double white_prob = 0.5) {
    std::bernoulli_distribution dist(white_prob);
    maskgen::BinaryMask mask(w, h);
    for (auto& v : mask.data) v = dist(rng) ? maskgen::kWhite : maskgen::kBlack;
    return mask;
}

inline maskgen::ColorImage gray_to_color(const maskgen::GrayImage& g) {
    maskgen::ColorImage img(g.width, g.height);
    for (std::size_t i = 0; i < g.data.size(); ++i) {
        img.data[i] = maskgen::Rgb{g.data[i], g.data[i], g.data[i]};
    }
    return img;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Run a shell command, capturing stdout/stderr through temp files.
inline CommandResult run_command(const std::string& cmd) {
    TempDir dir("cmd");
    const auto out_path = dir / "out.txt";
    const auto err_path = dir / "err.txt";
    const std::string full = cmd + " > " + out_path.string() + " 2> " + err_path.string();
    const int status = std::system(full.c_str());

    CommandResult result;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    if (status != -1 && WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

} // namespace testutil

#endif // MASKGEN_TESTS_HELPERS_HPP
