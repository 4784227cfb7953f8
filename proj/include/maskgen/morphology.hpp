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

#ifndef MASKGEN_MORPHOLOGY_HPP
#define MASKGEN_MORPHOLOGY_HPP

#include "maskgen/image.hpp"

namespace maskgen {

// All operations use the full 3x3 square structuring element.
// Border conventions differ on purpose:
//   - grayscale erosion replicates the edge value, so a flat image stays flat;
//   - binary erosion/dilation treat out-of-image cells as black, so masks
//     shrink at the frame instead of sticking to it.

/// n passes of the 3x3 minimum filter with replicate padding.
GrayImage erode_gray(const GrayImage& img, int n);

/// n passes of 3x3 binary erosion: a cell stays white iff all 9 neighbors
/// are white; outside the image counts as black.
BinaryMask erode_binary(const BinaryMask& mask, int n);

/// n passes of 3x3 binary dilation: a cell becomes white iff any of the 9
/// neighbors is white; outside the image counts as black.
BinaryMask dilate_binary(const BinaryMask& mask, int n);

} // namespace maskgen

#endif // MASKGEN_MORPHOLOGY_HPP
