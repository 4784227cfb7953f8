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

#include "maskgen/nms.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace maskgen {

double iou(const Box& a, const Box& b) {
    const int ix0 = std::max(a.x0, b.x0);
    const int iy0 = std::max(a.y0, b.y0);
    const int ix1 = std::min(a.x1, b.x1);
    const int iy1 = std::min(a.y1, b.y1);
    if (ix0 >= ix1 || iy0 >= iy1) return 0.0;
    const std::int64_t inter = static_cast<std::int64_t>(ix1 - ix0) * (iy1 - iy0);
    const std::int64_t uni = a.area() + b.area() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<ScoredBox> nms(std::span<const ScoredBox> detections, double iou_threshold) {
    if (!(iou_threshold > 0.0) || iou_threshold > 1.0) {
        throw std::invalid_argument("iou_threshold must be in (0, 1]");
    }

    std::vector<ScoredBox> sorted(detections.begin(), detections.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const ScoredBox& a, const ScoredBox& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.box.area() != b.box.area()) return a.box.area() > b.box.area();
        return std::tie(a.box.y0, a.box.x0, a.box.x1, a.box.y1) <
               std::tie(b.box.y0, b.box.x0, b.box.x1, b.box.y1);
    });

    std::vector<ScoredBox> kept;
    std::vector<bool> suppressed(sorted.size(), false);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (suppressed[i]) continue;
        kept.push_back(sorted[i]);
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (!suppressed[j] && iou(sorted[i].box, sorted[j].box) >= iou_threshold) {
                suppressed[j] = true;
            }
        }
    }
    return kept;
}

} // namespace maskgen
