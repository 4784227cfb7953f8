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

#ifndef MASKGEN_TESTS_FIXTURES_HPP
#define MASKGEN_TESTS_FIXTURES_HPP

#include "helpers.hpp"
#include "maskgen/image.hpp"

#include <algorithm>
#include <random>

namespace testutil {

struct TamperFixture {
    maskgen::ColorImage original;
    maskgen::ColorImage tampered;
    maskgen::Box rect; // ground-truth manipulated region
};

/// Flat background, one rectangle rewritten to a new value, then integer
/// noise in [-amplitude, amplitude] added to every tampered pixel. The
/// ground truth is known by construction.
inline TamperFixture make_tamper_fixture(unsigned seed, int w, int h, maskgen::Box rect,
                                         std::uint8_t background = 128,
                                         std::uint8_t rect_value = 200, int amplitude = 2) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> noise(-amplitude, amplitude);

    maskgen::GrayImage original(w, h, background);
    maskgen::GrayImage tampered = original;
    for (int y = rect.y0; y < rect.y1; ++y) {
        for (int x = rect.x0; x < rect.x1; ++x) tampered.at(x, y) = rect_value;
    }
    for (auto& v : tampered.data) {
        v = static_cast<std::uint8_t>(std::clamp(int(v) + noise(rng), 0, 255));
    }

    return TamperFixture{gray_to_color(original), gray_to_color(tampered), rect};
}

/// IoU between a mask's white set and a filled rectangle.
inline double mask_rect_iou(const maskgen::BinaryMask& mask, const maskgen::Box& rect) {
    long long inter = 0, white = 0;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            const bool w = mask.at(x, y) == maskgen::kWhite;
            const bool in = x >= rect.x0 && x < rect.x1 && y >= rect.y0 && y < rect.y1;
            white += w;
            inter += w && in;
        }
    }
    const long long uni = white + rect.area() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

/// Fraction of cells outside the rectangle that are white.
inline double white_fraction_outside(const maskgen::BinaryMask& mask, const maskgen::Box& rect) {
    long long outside = 0, white_outside = 0;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            const bool in = x >= rect.x0 && x < rect.x1 && y >= rect.y0 && y < rect.y1;
            if (in) continue;
            ++outside;
            white_outside += mask.at(x, y) == maskgen::kWhite;
        }
    }
    return outside == 0 ? 0.0 : static_cast<double>(white_outside) / static_cast<double>(outside);
}

} // namespace testutil

#endif // MASKGEN_TESTS_FIXTURES_HPP
