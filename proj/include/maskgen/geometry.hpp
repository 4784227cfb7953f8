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

#ifndef MASKGEN_GEOMETRY_HPP
#define MASKGEN_GEOMETRY_HPP

#include <cstdint>

namespace maskgen {

/// Half-open axis-aligned pixel rectangle: [x0, x1) x [y0, y1).
/// Half-open bounds keep area and intersection arithmetic free of +-1 fudge.
struct Box {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    std::int64_t area() const {
        return static_cast<std::int64_t>(x1 - x0) * static_cast<std::int64_t>(y1 - y0);
    }
    bool valid() const { return x0 < x1 && y0 < y1; }

    friend bool operator==(const Box&, const Box&) = default;
};

/// A detection: bounding box plus a confidence score in (0, 1].
struct ScoredBox {
    Box box;
    double score = 0.0;

    friend bool operator==(const ScoredBox&, const ScoredBox&) = default;
};

} // namespace maskgen

#endif // MASKGEN_GEOMETRY_HPP
