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

#include "maskgen/image_io.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include <jpeglib.h>
#include <png.h>

namespace maskgen {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) {
        throw IoError("cannot open '" + path.string() + "': " + std::strerror(errno));
    }
    return f;
}

// ---- PNG ----

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

void png_error_to_exception(png_structp png, png_const_charp msg) {
    *static_cast<std::string*>(png_get_error_ptr(png)) = msg ? msg : "unknown libpng error";
    longjmp(png_jmpbuf(png), 1);
}

void png_warning_ignore(png_structp, png_const_charp) {}

ColorImage load_png(std::FILE* f, const std::string& name) {
    std::string error_msg;
    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error_msg, png_error_to_exception,
                                   png_warning_ignore);
    if (!r.png) throw DecodeError("libpng init failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw DecodeError("libpng init failed");

    std::vector<png_bytep> row_ptrs;
    ColorImage out;
    if (setjmp(png_jmpbuf(r.png))) {
        throw DecodeError("cannot decode PNG '" + name + "': " + error_msg);
    }

    png_init_io(r.png, f);
    png_read_info(r.png, r.info);

    const png_uint_32 w = png_get_image_width(r.png, r.info);
    const png_uint_32 h = png_get_image_height(r.png, r.info);
    if (w < 1 || h < 1) throw DecodeError("PNG '" + name + "' has empty dimensions");

    // Normalize every color type to 8-bit RGB.
    png_set_expand(r.png);
    if (png_get_bit_depth(r.png, r.info) == 16) png_set_strip_16(r.png);
    const png_byte color_type = png_get_color_type(r.png, r.info);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(r.png);
    }
    png_set_strip_alpha(r.png);
    png_read_update_info(r.png, r.info);

    if (png_get_rowbytes(r.png, r.info) != w * 3) {
        throw DecodeError("PNG '" + name + "' did not normalize to RGB8");
    }

    out = ColorImage(static_cast<int>(w), static_cast<int>(h));
    row_ptrs.resize(h);
    for (png_uint_32 y = 0; y < h; ++y) {
        row_ptrs[y] = reinterpret_cast<png_bytep>(&out.data[static_cast<std::size_t>(y) * w]);
    }
    png_read_image(r.png, row_ptrs.data());
    png_read_end(r.png, nullptr);
    return out;
}

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

void write_gray_png(const std::uint8_t* samples, int width, int height,
                    const std::filesystem::path& path) {
    FilePtr f = open_file(path, "wb");
    std::string error_msg;
    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error_msg, png_error_to_exception,
                                    png_warning_ignore);
    if (!w.png) throw IoError("libpng init failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) throw IoError("libpng init failed");

    std::vector<png_bytep> row_ptrs(static_cast<std::size_t>(height));
    if (setjmp(png_jmpbuf(w.png))) {
        throw IoError("cannot write PNG '" + path.string() + "': " + error_msg);
    }

    png_init_io(w.png, f.get());
    png_set_IHDR(w.png, w.info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);
    for (int y = 0; y < height; ++y) {
        row_ptrs[static_cast<std::size_t>(y)] =
            const_cast<png_bytep>(samples + static_cast<std::size_t>(y) * width);
    }
    png_write_image(w.png, row_ptrs.data());
    png_write_end(w.png, nullptr);
    if (std::fflush(f.get()) != 0) {
        throw IoError("cannot flush PNG '" + path.string() + "'");
    }
}

// ---- JPEG ----

struct JpegErrorTrap {
    jpeg_error_mgr mgr;
    jmp_buf jump;
    char message[JMSG_LENGTH_MAX] = {};
};

void jpeg_error_to_longjmp(j_common_ptr cinfo) {
    auto* trap = reinterpret_cast<JpegErrorTrap*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, trap->message);
    longjmp(trap->jump, 1);
}

ColorImage load_jpeg(std::FILE* f, const std::string& name) {
    jpeg_decompress_struct cinfo{};
    JpegErrorTrap trap;
    cinfo.err = jpeg_std_error(&trap.mgr);
    trap.mgr.error_exit = jpeg_error_to_longjmp;

    ColorImage out;
    if (setjmp(trap.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError("cannot decode JPEG '" + name + "': " + trap.message);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, f);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    const int w = static_cast<int>(cinfo.output_width);
    const int h = static_cast<int>(cinfo.output_height);
    out = ColorImage(w, h);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = reinterpret_cast<JSAMPROW>(
            &out.data[static_cast<std::size_t>(cinfo.output_scanline) * w]);
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return out;
}

} // namespace

ColorImage load_image(const std::filesystem::path& path) {
    FilePtr f = open_file(path, "rb");

    unsigned char magic[8] = {};
    const std::size_t got = std::fread(magic, 1, sizeof(magic), f.get());
    std::rewind(f.get());

    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0) {
        return load_png(f.get(), path.string());
    }
    if (got >= 2 && magic[0] == 0xff && magic[1] == 0xd8) {
        return load_jpeg(f.get(), path.string());
    }
    throw DecodeError("'" + path.string() + "' is neither PNG nor JPEG");
}

void save_gray(const GrayImage& img, const std::filesystem::path& path) {
    write_gray_png(img.data.data(), img.width, img.height, path);
}

void save_mask(const BinaryMask& mask, const std::filesystem::path& path) {
    write_gray_png(mask.data.data(), mask.width, mask.height, path);
}

} // namespace maskgen
