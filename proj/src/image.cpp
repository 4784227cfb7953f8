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

#include "maskgen/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace maskgen {

namespace {

std::size_t checked_extent(int w, int h) {
    if (w < 1 || h < 1) {
        throw std::invalid_argument("image dimensions must be at least 1x1, got " +
                                    std::to_string(w) + "x" + std::to_string(h));
    }
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
}

} // namespace

ColorImage::ColorImage(int w, int h, Rgb fill) : width(w), height(h), data(checked_extent(w, h), fill) {}

ColorImage::ColorImage(int w, int h, std::vector<Rgb> pixels) : width(w), height(h), data(std::move(pixels)) {
    if (data.size() != checked_extent(w, h)) {
        throw std::invalid_argument("pixel buffer length does not match dimensions");
    }
}

GrayImage::GrayImage(int w, int h, std::uint8_t fill) : width(w), height(h), data(checked_extent(w, h), fill) {}

GrayImage::GrayImage(int w, int h, std::vector<std::uint8_t> pixels)
    : width(w), height(h), data(std::move(pixels)) {
    if (data.size() != checked_extent(w, h)) {
        throw std::invalid_argument("pixel buffer length does not match dimensions");
    }
}

BinaryMask::BinaryMask(int w, int h, std::uint8_t fill) : width(w), height(h), data(checked_extent(w, h), fill) {
    if (fill != kBlack && fill != kWhite) {
        throw std::invalid_argument("mask fill value must be 0 or 255");
    }
}

bool BinaryMask::is_strictly_binary() const {
    return std::all_of(data.begin(), data.end(), [](std::uint8_t v) { return v == kBlack || v == kWhite; });
}

std::size_t BinaryMask::white_count() const {
    return static_cast<std::size_t>(std::count(data.begin(), data.end(), kWhite));
}

GrayImage to_gray(const ColorImage& img) {
    GrayImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        const Rgb px = img.data[i];
        const double luma = 0.299 * px.r + 0.587 * px.g + 0.114 * px.b;
        const long rounded = std::lround(luma); // half away from zero
        out.data[i] = static_cast<std::uint8_t>(std::clamp(rounded, 0L, 255L));
    }
    return out;
}

GrayImage abs_diff(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height) {
        throw DimensionMismatch(a.width, a.height, b.width, b.height);
    }
    GrayImage out(a.width, a.height);
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        out.data[i] = static_cast<std::uint8_t>(std::abs(int(a.data[i]) - int(b.data[i])));
    }
    return out;
}

BinaryMask binarize(const GrayImage& img, std::uint8_t threshold) {
    BinaryMask out(img.width, img.height);
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        out.data[i] = img.data[i] >= threshold ? kWhite : kBlack;
    }
    return out;
}

BinaryMask mask_union(const BinaryMask& a, const BinaryMask& b) {
    if (a.width != b.width || a.height != b.height) {
        throw DimensionMismatch(a.width, a.height, b.width, b.height);
    }
    BinaryMask out(a.width, a.height);
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        out.data[i] = (a.data[i] == kWhite || b.data[i] == kWhite) ? kWhite : kBlack;
    }
    return out;
}

BinaryMask fill_boxes(int width, int height, std::span<const Box> boxes) {
    BinaryMask out(width, height);
    for (const Box& box : boxes) {
        const int x0 = std::max(box.x0, 0);
        const int y0 = std::max(box.y0, 0);
        const int x1 = std::min(box.x1, width);
        const int y1 = std::min(box.y1, height);
        for (int y = y0; y < y1; ++y) {
            std::fill(out.data.begin() + static_cast<std::ptrdiff_t>(y) * width + x0,
                      out.data.begin() + static_cast<std::ptrdiff_t>(y) * width + x1, kWhite);
        }
    }
    return out;
}

} // namespace maskgen
