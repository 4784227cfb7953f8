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

#ifndef MASKGEN_NMS_HPP
#define MASKGEN_NMS_HPP

#include "maskgen/geometry.hpp"

#include <span>
#include <vector>

namespace maskgen {

/// Intersection over union of two half-open boxes, |A n B| / |A u B|,
/// counted in integer cells. 0 when disjoint, 1 iff the boxes are equal.
double iou(const Box& a, const Box& b);

/// Greedy non-maximum suppression. Detections are ordered by descending
/// score (ties: larger area first, then ascending y0, x0, x1, y1); the best
/// remaining box is kept and every remaining box with IoU >= iou_threshold
/// against it is dropped. Kept boxes are returned in selection order.
std::vector<ScoredBox> nms(std::span<const ScoredBox> detections, double iou_threshold);

} // namespace maskgen

#endif // MASKGEN_NMS_HPP
