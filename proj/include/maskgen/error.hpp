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

#ifndef MASKGEN_ERROR_HPP
#define MASKGEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace maskgen {

/// Two images that must share dimensions do not.
class DimensionMismatch : public std::runtime_error {
public:
    DimensionMismatch(int wa, int ha, int wb, int hb)
        : std::runtime_error("dimension mismatch: " + std::to_string(wa) + "x" + std::to_string(ha) +
                             " vs " + std::to_string(wb) + "x" + std::to_string(hb)) {}
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// A file exists and was read, but its bytes are not a decodable PNG or JPEG.
class DecodeError : public std::runtime_error {
public:
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem-level failure: missing file, unreadable directory, failed write.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace maskgen

#endif // MASKGEN_ERROR_HPP
