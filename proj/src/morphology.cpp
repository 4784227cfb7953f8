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

#include "maskgen/morphology.hpp"

#include <algorithm>
#include <stdexcept>

namespace maskgen {

namespace {

enum class Pad { replicate, black };

template <bool TakeMin>
std::uint8_t pick(std::uint8_t a, std::uint8_t b) {
    if constexpr (TakeMin) {
        return std::min(a, b);
    } else {
        return std::max(a, b);
    }
}

// One 3x3 min/max pass, separable: horizontal then vertical.
template <bool TakeMin>
void filter_pass(const std::vector<std::uint8_t>& src, std::vector<std::uint8_t>& tmp,
                 std::vector<std::uint8_t>& dst, int w, int h, Pad pad) {
    const std::uint8_t outside = pad == Pad::black ? kBlack : 0; // unused for replicate

    for (int y = 0; y < h; ++y) {
        const std::uint8_t* row = &src[static_cast<std::size_t>(y) * w];
        std::uint8_t* out = &tmp[static_cast<std::size_t>(y) * w];
        for (int x = 0; x < w; ++x) {
            const std::uint8_t left = x > 0 ? row[x - 1] : (pad == Pad::replicate ? row[x] : outside);
            const std::uint8_t right = x + 1 < w ? row[x + 1] : (pad == Pad::replicate ? row[x] : outside);
            out[x] = pick<TakeMin>(pick<TakeMin>(left, row[x]), right);
        }
    }
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* cur = &tmp[static_cast<std::size_t>(y) * w];
        const std::uint8_t* up = y > 0 ? &tmp[static_cast<std::size_t>(y - 1) * w] : nullptr;
        const std::uint8_t* down = y + 1 < h ? &tmp[static_cast<std::size_t>(y + 1) * w] : nullptr;
        std::uint8_t* out = &dst[static_cast<std::size_t>(y) * w];
        for (int x = 0; x < w; ++x) {
            const std::uint8_t a = up ? up[x] : (pad == Pad::replicate ? cur[x] : outside);
            const std::uint8_t b = down ? down[x] : (pad == Pad::replicate ? cur[x] : outside);
            out[x] = pick<TakeMin>(pick<TakeMin>(a, cur[x]), b);
        }
    }
}

template <bool TakeMin>
std::vector<std::uint8_t> repeat_filter(std::vector<std::uint8_t> data, int w, int h, int n, Pad pad) {
    if (n < 0) throw std::invalid_argument("morphology pass count must be >= 0");
    std::vector<std::uint8_t> tmp(data.size());
    std::vector<std::uint8_t> next(data.size());
    for (int i = 0; i < n; ++i) {
        filter_pass<TakeMin>(data, tmp, next, w, h, pad);
        data.swap(next);
    }
    return data;
}

} // namespace

GrayImage erode_gray(const GrayImage& img, int n) {
    GrayImage out = img;
    out.data = repeat_filter<true>(std::move(out.data), img.width, img.height, n, Pad::replicate);
    return out;
}

BinaryMask erode_binary(const BinaryMask& mask, int n) {
    BinaryMask out = mask;
    out.data = repeat_filter<true>(std::move(out.data), mask.width, mask.height, n, Pad::black);
    return out;
}

BinaryMask dilate_binary(const BinaryMask& mask, int n) {
    BinaryMask out = mask;
    out.data = repeat_filter<false>(std::move(out.data), mask.width, mask.height, n, Pad::black);
    return out;
}

} // namespace maskgen
