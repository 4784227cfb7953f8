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

#ifndef MASKGEN_MSER_HPP
#define MASKGEN_MSER_HPP

#include "maskgen/geometry.hpp"
#include "maskgen/image.hpp"

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace maskgen {

/// Which intensity extreme to treat as foreground. dark finds regions that
/// are darker than their surroundings, bright the opposite (implemented by
/// inverting the input), both merges the two detection passes.
enum class Polarity { dark, bright, both };

std::string_view polarity_name(Polarity p);

struct MserParams {
    int delta = 5;                    // threshold gap for the stability ratio
    int min_area = 30;                // cells
    double max_area_fraction = 0.25;  // of the whole image
    double max_variation = 0.5;       // reject regions with v above this
    Polarity polarity = Polarity::both;
};

/// One node of the component tree: a connected component of the threshold
/// set {p : img(p) <= level} that is new at `level` (it contains at least
/// one pixel of exactly that intensity). The same pixel set persists until
/// its parent's level, where it grows or merges.
struct ExtremalRegion {
    int level = 0;
    int area = 0;
    Box bounding_box;
    int parent = -1;        // index into the tree vector, -1 for the root
    double stability = 0.0; // v, filled in by compute_stability
};

/// Nodes ordered by level; a parent always has a larger index than its
/// children, so forward iteration is bottom-up.
using ComponentTree = std::vector<ExtremalRegion>;

/// Flood the threshold sets {p : img(p) <= i} for i = 0..255 with
/// 4-connectivity and record every distinct component once, at the lowest
/// threshold where it appears. polarity must be dark or bright.
ComponentTree build_component_tree(const GrayImage& img, Polarity polarity);

/// Per-node stability analysis, see compute_stability for the definition.
struct StabilityAnalysis {
    std::vector<double> variation;   // v per node
    std::vector<char> is_local_min;  // 1 when some level of the node's
                                     // lifetime is a local minimum of v
};

StabilityAnalysis analyze_stability(const ComponentTree& tree, int delta);

/// Annotate each region with v = (|Q_{i+delta}| - |Q_{i-delta}|) / |Q_i|.
///
/// v is a function of the threshold level: for every level i at which a
/// region is the current component of its branch, Q_{i+delta} is the
/// enclosing region active delta levels up and Q_{i-delta} the enclosed
/// region active delta levels down, following the largest child at every
/// split. Where the branch runs out, the missing side clamps to the
/// branch's outermost/innermost region. A region that does not change
/// anywhere inside its window has v = 0 there. The region's recorded
/// stability is the minimum of v over the levels it exists at.
void compute_stability(ComponentTree& tree, int delta);

struct MserDetection {
    Box box;
    double score = 0.0; // 1 / (1 + v)
    Polarity polarity = Polarity::dark;
};

/// Maximally stable extremal regions: regions whose v attains a local
/// minimum along their branch, filtered by max_variation and the area
/// bounds, from one or both polarities. Output is sorted by
/// (y0, x0, x1, y1) so runs are reproducible.
std::vector<MserDetection> detect_mser(const GrayImage& img, const MserParams& params);

std::vector<ScoredBox> to_scored_boxes(std::span<const MserDetection> detections);

/// Debug dump, one JSON object per line:
/// {"x0":..,"y0":..,"x1":..,"y1":..,"score":..,"polarity":"dark"}
void write_detections_jsonl(std::ostream& out, std::span<const MserDetection> detections);

} // namespace maskgen

#endif // MASKGEN_MSER_HPP
