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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "maskgen/image_io.hpp"

#include <cstdio>
#include <fstream>
#include <random>

#include <jpeglib.h>

using namespace maskgen;

namespace {

// Test-side JPEG writer so decoding can be checked against a known image.
void write_jpeg(const GrayImage& img, const std::filesystem::path& path, int quality) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    REQUIRE(f != nullptr);

    jpeg_compress_struct cinfo{};
    jpeg_error_mgr err{};
    cinfo.err = jpeg_std_error(&err);
    jpeg_create_compress(&cinfo);
    jpeg_stdio_dest(&cinfo, f);
    cinfo.image_width = static_cast<JDIMENSION>(img.width);
    cinfo.image_height = static_cast<JDIMENSION>(img.height);
    cinfo.input_components = 1;
    cinfo.in_color_space = JCS_GRAYSCALE;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = const_cast<JSAMPROW>(&img.data[cinfo.next_scanline * img.width]);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
    std::fclose(f);
}

} // namespace

TEST_CASE("mask save/load round-trips bit-exactly") {
    testutil::TempDir dir("io");
    std::mt19937 rng(21);
    const BinaryMask mask = testutil::random_mask(rng, 33, 17);
    const auto path = dir / "mask.png";
    save_mask(mask, path);

    const ColorImage loaded = load_image(path);
    REQUIRE(loaded.width == mask.width);
    REQUIRE(loaded.height == mask.height);
    for (std::size_t i = 0; i < mask.data.size(); ++i) {
        CHECK(loaded.data[i] == Rgb{mask.data[i], mask.data[i], mask.data[i]});
    }
}

TEST_CASE("gray save/load expands to equal RGB channels") {
    testutil::TempDir dir("io");
    std::mt19937 rng(22);
    const GrayImage img = testutil::random_gray(rng, 12, 25);
    const auto path = dir / "gray.png";
    save_gray(img, path);

    const ColorImage loaded = load_image(path);
    REQUIRE(loaded.width == img.width);
    REQUIRE(loaded.height == img.height);
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        CHECK(loaded.data[i] == Rgb{img.data[i], img.data[i], img.data[i]});
    }
}

TEST_CASE("saving twice produces identical bytes") {
    testutil::TempDir dir("io");
    std::mt19937 rng(23);
    const GrayImage img = testutil::random_gray(rng, 40, 40);
    save_gray(img, dir / "a.png");
    save_gray(img, dir / "b.png");
    CHECK(testutil::read_file(dir / "a.png") == testutil::read_file(dir / "b.png"));
}

TEST_CASE("1x1 white PNG decodes to a single white pixel") {
    testutil::TempDir dir("io");
    const BinaryMask white(1, 1, kWhite);
    save_mask(white, dir / "w.png");
    const ColorImage loaded = load_image(dir / "w.png");
    REQUIRE(loaded.pixel_count() == 1);
    CHECK(loaded.data[0] == Rgb{255, 255, 255});
}

TEST_CASE("nonexistent path raises IoError") {
    CHECK_THROWS_AS(load_image("/nonexistent/nowhere.png"), IoError);
}

TEST_CASE("non-image bytes raise DecodeError") {
    testutil::TempDir dir("io");
    const auto path = dir / "junk.png";
    std::ofstream(path) << "this is not an image at all";
    CHECK_THROWS_AS(load_image(path), DecodeError);
}

TEST_CASE("truncated PNG raises DecodeError") {
    testutil::TempDir dir("io");
    std::mt19937 rng(24);
    save_gray(testutil::random_gray(rng, 64, 64), dir / "full.png");
    const std::string bytes = testutil::read_file(dir / "full.png");
    std::ofstream(dir / "cut.png", std::ios::binary) << bytes.substr(0, bytes.size() / 2);
    CHECK_THROWS_AS(load_image(dir / "cut.png"), DecodeError);
}

TEST_CASE("truncated JPEG raises DecodeError") {
    testutil::TempDir dir("io");
    write_jpeg(GrayImage(32, 32, 128), dir / "full.jpg", 90);
    const std::string bytes = testutil::read_file(dir / "full.jpg");
    REQUIRE(bytes.size() > 4);
    std::ofstream(dir / "cut.jpg", std::ios::binary) << bytes.substr(0, 4);
    CHECK_THROWS_AS(load_image(dir / "cut.jpg"), DecodeError);
}

TEST_CASE("JPEG decodes through the same entry point") {
    testutil::TempDir dir("io");
    const GrayImage img(20, 14, 128);
    write_jpeg(img, dir / "flat.jpg", 95);
    const ColorImage loaded = load_image(dir / "flat.jpg");
    REQUIRE(loaded.width == 20);
    REQUIRE(loaded.height == 14);
    for (const Rgb& px : loaded.data) {
        CHECK(std::abs(int(px.r) - 128) <= 1);
        CHECK(px.r == px.g);
        CHECK(px.g == px.b);
    }
}

TEST_CASE("save into a missing directory raises IoError") {
    testutil::TempDir dir("io");
    const BinaryMask mask(2, 2, kBlack);
    CHECK_THROWS_AS(save_mask(mask, dir / "missing" / "mask.png"), IoError);
}
