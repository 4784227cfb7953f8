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

#ifndef MASKGEN_IMAGE_IO_HPP
#define MASKGEN_IMAGE_IO_HPP

#include "maskgen/image.hpp"

#include <filesystem>

namespace maskgen {

/// Decode a PNG or JPEG file (detected by magic bytes, not extension).
/// Grayscale and palette inputs are expanded to RGB; alpha is dropped.
/// Throws IoError when the file cannot be read, DecodeError when the bytes
/// are corrupt or not a supported format.
ColorImage load_image(const std::filesystem::path& path);

/// Write an 8-bit single-channel PNG. Samples are written verbatim, so a
/// mask round-trips bit-exactly. Throws IoError on filesystem failure.
void save_gray(const GrayImage& img, const std::filesystem::path& path);
void save_mask(const BinaryMask& mask, const std::filesystem::path& path);

} // namespace maskgen

#endif // MASKGEN_IMAGE_IO_HPP
