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

// Brute-force reference implementations, written independently of the
// library code paths they check. Everything here favors obviousness over
// speed: per-threshold flood fills, O(n^2) greedy scans, one finite
// difference per coordinate.

#ifndef MASKGEN_TESTS_ORACLES_HPP
#define MASKGEN_TESTS_ORACLES_HPP

#include "maskgen/geometry.hpp"
#include "maskgen/image.hpp"
#include "maskgen/tv_denoise.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace testutil {

// ---- component tree ----

struct RegionTriple {
    int level;
    int area;
    maskgen::Box box;

    auto key() const { return std::tuple(level, area, box.x0, box.y0, box.x1, box.y1); }
    friend bool operator<(const RegionTriple& a, const RegionTriple& b) { return a.key() < b.key(); }
    friend bool operator==(const RegionTriple& a, const RegionTriple& b) { return a.key() == b.key(); }
};

/// Threshold at every level, label 4-connected components with a flood
/// fill, and record each distinct pixel set once, at the lowest level where
/// it appears. `invert` mirrors bright-polarity detection.
inline std::vector<RegionTriple> component_triples_bruteforce(const maskgen::GrayImage& img,
                                                              bool invert) {
    const int w = img.width;
    const int h = img.height;
    const int n = w * h;

    std::vector<std::uint8_t> values(img.data);
    if (invert) {
        for (auto& v : values) v = static_cast<std::uint8_t>(255 - v);
    }

    // Pixel set -> (level first seen, area, box). The set is keyed by its
    // sorted cell indices.
    std::map<std::vector<int>, RegionTriple> seen;

    std::vector<char> in_set(static_cast<std::size_t>(n));
    std::vector<char> visited(static_cast<std::size_t>(n));
    std::vector<int> stack;
    for (int level = 0; level < 256; ++level) {
        for (int i = 0; i < n; ++i) in_set[i] = values[i] <= level;
        std::fill(visited.begin(), visited.end(), 0);

        for (int seed = 0; seed < n; ++seed) {
            if (!in_set[seed] || visited[seed]) continue;

            std::vector<int> cells;
            stack.assign(1, seed);
            visited[seed] = 1;
            while (!stack.empty()) {
                const int p = stack.back();
                stack.pop_back();
                cells.push_back(p);
                const int x = p % w;
                const int y = p / w;
                const int neighbors[4] = {x > 0 ? p - 1 : -1, x + 1 < w ? p + 1 : -1,
                                          y > 0 ? p - w : -1, y + 1 < h ? p + w : -1};
                for (const int q : neighbors) {
                    if (q >= 0 && in_set[q] && !visited[q]) {
                        visited[q] = 1;
                        stack.push_back(q);
                    }
                }
            }
            std::sort(cells.begin(), cells.end());

            if (seen.find(cells) == seen.end()) {
                maskgen::Box box{w, h, 0, 0};
                for (const int p : cells) {
                    const int x = p % w;
                    const int y = p / w;
                    box.x0 = std::min(box.x0, x);
                    box.y0 = std::min(box.y0, y);
                    box.x1 = std::max(box.x1, x + 1);
                    box.y1 = std::max(box.y1, y + 1);
                }
                // area filled from the key's size when collecting below
                seen.emplace(std::move(cells), RegionTriple{level, 0, box});
            }
        }
    }

    std::vector<RegionTriple> triples;
    triples.reserve(seen.size());
    for (const auto& [cells, triple] : seen) {
        triples.push_back(RegionTriple{triple.level, static_cast<int>(cells.size()), triple.box});
    }
    std::sort(triples.begin(), triples.end());
    return triples;
}

// ---- IoU / NMS ----

/// Count cells covered by both and by either rectangle, one cell at a time.
inline double iou_bruteforce(const maskgen::Box& a, const maskgen::Box& b) {
    const int x0 = std::min(a.x0, b.x0);
    const int y0 = std::min(a.y0, b.y0);
    const int x1 = std::max(a.x1, b.x1);
    const int y1 = std::max(a.y1, b.y1);
    long long both = 0, either = 0;
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            const bool in_a = x >= a.x0 && x < a.x1 && y >= a.y0 && y < a.y1;
            const bool in_b = x >= b.x0 && x < b.x1 && y >= b.y0 && y < b.y1;
            both += in_a && in_b;
            either += in_a || in_b;
        }
    }
    return either == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(either);
}

/// Greedy suppression, re-scanning the remaining set every round.
inline std::vector<maskgen::ScoredBox> nms_bruteforce(std::vector<maskgen::ScoredBox> boxes,
                                                      double threshold) {
    auto better = [](const maskgen::ScoredBox& a, const maskgen::ScoredBox& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.box.area() != b.box.area()) return a.box.area() > b.box.area();
        return std::tuple(a.box.y0, a.box.x0, a.box.x1, a.box.y1) <
               std::tuple(b.box.y0, b.box.x0, b.box.x1, b.box.y1);
    };

    std::vector<maskgen::ScoredBox> kept;
    while (!boxes.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < boxes.size(); ++i) {
            if (better(boxes[i], boxes[best])) best = i;
        }
        const maskgen::ScoredBox winner = boxes[best];
        kept.push_back(winner);

        std::vector<maskgen::ScoredBox> rest;
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            if (i == best) continue;
            if (iou_bruteforce(winner.box, boxes[i].box) < threshold) rest.push_back(boxes[i]);
        }
        boxes = std::move(rest);
    }
    return kept;
}

// ---- finite differences ----

/// Central finite difference of the smoothed objective, one coordinate at a
/// time: (J(y + h e_i) - J(y - h e_i)) / (2h).
inline maskgen::RealField gradient_fd(const maskgen::RealField& field,
                                      const maskgen::RealField& reference, double lambda,
                                      double epsilon, double h) {
    maskgen::RealField grad(field.width, field.height);
    maskgen::RealField probe = field;
    for (std::size_t i = 0; i < field.data.size(); ++i) {
        probe.data[i] = field.data[i] + h;
        const double up = maskgen::tv_objective_smoothed(probe, reference, lambda, epsilon);
        probe.data[i] = field.data[i] - h;
        const double down = maskgen::tv_objective_smoothed(probe, reference, lambda, epsilon);
        probe.data[i] = field.data[i];
        grad.data[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

} // namespace testutil

#endif // MASKGEN_TESTS_ORACLES_HPP
