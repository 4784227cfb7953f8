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

#ifndef MASKGEN_IMAGE_HPP
#define MASKGEN_IMAGE_HPP

#include "maskgen/error.hpp"
#include "maskgen/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace maskgen {

/// One RGB pixel, 8 bits per channel.
struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Decoded color image, row-major: data[y * width + x].
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<Rgb> data;

    ColorImage() = default;
    ColorImage(int w, int h, Rgb fill = {});
    ColorImage(int w, int h, std::vector<Rgb> pixels);

    Rgb at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    Rgb& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t pixel_count() const { return data.size(); }
};

/// 8-bit grayscale image, row-major: data[y * width + x].
/// The working representation for every stage of the pipeline.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);
    GrayImage(int w, int h, std::vector<std::uint8_t> pixels);

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t pixel_count() const { return data.size(); }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Binary mask: every cell is exactly 0 (background) or 255 (manipulated).
/// Stored as 8-bit samples so masks round-trip through grayscale PNG unchanged.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    BinaryMask() = default;
    BinaryMask(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t pixel_count() const { return data.size(); }

    /// True when every cell is 0 or 255.
    bool is_strictly_binary() const;
    std::size_t white_count() const;

    friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

constexpr std::uint8_t kWhite = 255;
constexpr std::uint8_t kBlack = 0;

/// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B), half away from zero.
GrayImage to_gray(const ColorImage& img);

/// Per-cell |a - b|. Throws DimensionMismatch when sizes differ.
GrayImage abs_diff(const GrayImage& a, const GrayImage& b);

/// Cell -> 255 when intensity >= threshold, else 0.
BinaryMask binarize(const GrayImage& img, std::uint8_t threshold);

/// Cell-wise OR of the white sets. Throws DimensionMismatch when sizes differ.
BinaryMask mask_union(const BinaryMask& a, const BinaryMask& b);

/// White wherever any box covers the cell; boxes are clipped to the image.
BinaryMask fill_boxes(int width, int height, std::span<const Box> boxes);

} // namespace maskgen

#endif // MASKGEN_IMAGE_HPP
