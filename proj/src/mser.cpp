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

#include "maskgen/mser.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace maskgen {

namespace {

constexpr int kLevels = 256;

int find_root(std::vector<std::int32_t>& parent, int p) {
    int root = p;
    while (parent[root] != root) root = parent[root];
    while (parent[p] != root) { // path compression
        const int next = parent[p];
        parent[p] = root;
        p = next;
    }
    return root;
}

} // namespace

std::string_view polarity_name(Polarity p) {
    switch (p) {
        case Polarity::dark: return "dark";
        case Polarity::bright: return "bright";
        case Polarity::both: return "both";
    }
    return "?";
}

ComponentTree build_component_tree(const GrayImage& img, Polarity polarity) {
    if (polarity == Polarity::both) {
        throw std::invalid_argument("build_component_tree takes a single polarity");
    }
    if (img.width < 1 || img.height < 1) {
        throw std::invalid_argument("image must be nonempty");
    }

    const int w = img.width;
    const int h = img.height;
    const int n = w * h;

    std::vector<std::uint8_t> values(img.data);
    if (polarity == Polarity::bright) {
        for (auto& v : values) v = static_cast<std::uint8_t>(255 - v);
    }

    // Counting sort of pixel indices by intensity.
    std::array<int, kLevels + 1> bucket_start{};
    for (const auto v : values) ++bucket_start[v + 1];
    for (int i = 0; i < kLevels; ++i) bucket_start[i + 1] += bucket_start[i];
    std::vector<std::int32_t> sorted(static_cast<std::size_t>(n));
    {
        std::array<int, kLevels> cursor{};
        for (int i = 0; i < kLevels; ++i) cursor[i] = bucket_start[i];
        for (int p = 0; p < n; ++p) sorted[cursor[values[p]]++] = p;
    }

    // Union-find over activated pixels. Root-indexed attributes track the
    // running component; pending_* chains the node ids waiting to become
    // children of the component's next node.
    std::vector<std::int32_t> uf(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> area(static_cast<std::size_t>(n));
    std::vector<std::int32_t> bx0(static_cast<std::size_t>(n)), by0(static_cast<std::size_t>(n));
    std::vector<std::int32_t> bx1(static_cast<std::size_t>(n)), by1(static_cast<std::size_t>(n));
    std::vector<std::int32_t> pending_head(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> pending_tail(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> emitted_level(static_cast<std::size_t>(n), -1);

    ComponentTree nodes;
    std::vector<std::int32_t> pending_next; // per node id
    std::vector<std::int32_t> touched;

    auto unite = [&](int ra, int rb) -> int {
        if (ra == rb) return ra;
        if (area[ra] < area[rb]) std::swap(ra, rb);
        uf[rb] = ra;
        area[ra] += area[rb];
        bx0[ra] = std::min(bx0[ra], bx0[rb]);
        by0[ra] = std::min(by0[ra], by0[rb]);
        bx1[ra] = std::max(bx1[ra], bx1[rb]);
        by1[ra] = std::max(by1[ra], by1[rb]);
        if (pending_head[rb] != -1) {
            if (pending_head[ra] == -1) {
                pending_head[ra] = pending_head[rb];
                pending_tail[ra] = pending_tail[rb];
            } else {
                pending_next[pending_tail[ra]] = pending_head[rb];
                pending_tail[ra] = pending_tail[rb];
            }
        }
        return ra;
    };

    int pos = 0;
    for (int level = 0; level < kLevels; ++level) {
        touched.clear();
        for (; pos < bucket_start[level + 1]; ++pos) {
            const int p = sorted[pos];
            const int x = p % w;
            const int y = p / w;
            uf[p] = p;
            area[p] = 1;
            bx0[p] = x;
            by0[p] = y;
            bx1[p] = x + 1;
            by1[p] = y + 1;
            pending_head[p] = pending_tail[p] = -1;
            emitted_level[p] = -1;
            touched.push_back(p);

            int root = p;
            if (x > 0 && uf[p - 1] != -1) root = unite(find_root(uf, root), find_root(uf, p - 1));
            if (x + 1 < w && uf[p + 1] != -1) root = unite(find_root(uf, root), find_root(uf, p + 1));
            if (y > 0 && uf[p - w] != -1) root = unite(find_root(uf, root), find_root(uf, p - w));
            if (y + 1 < h && uf[p + w] != -1) root = unite(find_root(uf, root), find_root(uf, p + w));
        }

        // Every component that changed this level contains a touched pixel.
        for (const int p : touched) {
            const int r = find_root(uf, p);
            if (emitted_level[r] == level) continue;
            emitted_level[r] = level;

            const int id = static_cast<int>(nodes.size());
            nodes.push_back(ExtremalRegion{level, area[r], Box{bx0[r], by0[r], bx1[r], by1[r]}, -1, 0.0});
            pending_next.push_back(-1);
            for (int child = pending_head[r]; child != -1; child = pending_next[child]) {
                nodes[child].parent = id;
            }
            pending_head[r] = pending_tail[r] = id;
        }
    }

    return nodes;
}

namespace {

// Stability is analyzed chain by chain. A chain is a maximal path of
// main-child links (largest child, ties to the earlier node), i.e. the
// growth history of one evolving component; the levels its nodes cover are
// contiguous. `path` additionally carries the chain's strict ancestors so
// both window lookups walk one array.
struct ChainScratch {
    std::vector<int> path;
    std::vector<double> v;
    std::vector<int> node_at;
};

void analyze_chain(const ComponentTree& tree, int top, const std::vector<int>& main_child, int delta,
                   ChainScratch& scratch, StabilityAnalysis& out) {
    auto& path = scratch.path;
    path.clear();

    // Chain nodes, bottom-up.
    for (int nd = top; nd != -1; nd = main_child[nd]) path.push_back(nd);
    std::reverse(path.begin(), path.end());
    const int chain_len = static_cast<int>(path.size());
    // Ancestors above the chain top, up to the root.
    for (int nd = tree[top].parent; nd != -1; nd = tree[nd].parent) path.push_back(nd);

    const int lo = tree[path.front()].level;
    const int hi = tree[top].parent != -1 ? tree[tree[top].parent].level : kLevels;
    const int span = hi - lo;
    assert(span > 0);

    auto& v = scratch.v;
    auto& node_at = scratch.node_at;
    v.resize(static_cast<std::size_t>(span));
    node_at.resize(static_cast<std::size_t>(span));

    int cur = 0; // index into path of the node active at the current level
    int up = 0;  // index of the entry active at level + delta
    int dn = 0;  // index of the entry active at level - delta (clamped to 0)
    const int path_len = static_cast<int>(path.size());
    for (int level = lo; level < hi; ++level) {
        while (cur + 1 < chain_len && tree[path[cur + 1]].level <= level) ++cur;
        while (up + 1 < path_len && tree[path[up + 1]].level <= level + delta) ++up;
        while (dn + 1 < path_len && tree[path[dn + 1]].level <= level - delta) ++dn;
        const double grown = tree[path[up]].area;
        const double shrunk = tree[path[dn]].area;
        const int node = path[cur];
        const double value = (grown - shrunk) / static_cast<double>(tree[node].area);
        v[level - lo] = value;
        node_at[level - lo] = node;
        out.variation[node] = std::min(out.variation[node], value);
    }

    for (int i = 0; i < span; ++i) {
        const bool left_ok = i == 0 || v[i] <= v[i - 1];
        const bool right_ok = i == span - 1 || v[i] <= v[i + 1];
        if (left_ok && right_ok) out.is_local_min[node_at[i]] = 1;
    }
}

} // namespace

StabilityAnalysis analyze_stability(const ComponentTree& tree, int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");

    StabilityAnalysis out;
    out.variation.assign(tree.size(), std::numeric_limits<double>::infinity());
    out.is_local_min.assign(tree.size(), 0);
    if (tree.empty()) return out;

    // Main child = largest child, ties to the smaller node id.
    std::vector<int> main_child(tree.size(), -1);
    for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
        const int p = tree[i].parent;
        if (p == -1) continue;
        if (main_child[p] == -1 || tree[i].area > tree[main_child[p]].area) main_child[p] = i;
    }

    ChainScratch scratch;
    for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
        const int p = tree[i].parent;
        const bool chain_top = p == -1 || main_child[p] != i;
        if (chain_top) analyze_chain(tree, i, main_child, delta, scratch, out);
    }
    return out;
}

void compute_stability(ComponentTree& tree, int delta) {
    const StabilityAnalysis analysis = analyze_stability(tree, delta);
    for (std::size_t i = 0; i < tree.size(); ++i) tree[i].stability = analysis.variation[i];
}

std::vector<MserDetection> detect_mser(const GrayImage& img, const MserParams& params) {
    if (params.delta < 1) throw std::invalid_argument("delta must be >= 1");
    if (params.min_area < 1) throw std::invalid_argument("min_area must be >= 1");
    if (!(params.max_area_fraction > 0.0) || params.max_area_fraction > 1.0) {
        throw std::invalid_argument("max_area_fraction must be in (0, 1]");
    }
    if (!(params.max_variation > 0.0)) throw std::invalid_argument("max_variation must be positive");

    const double max_area = params.max_area_fraction * static_cast<double>(img.pixel_count());

    std::vector<MserDetection> detections;
    auto run = [&](Polarity pol) {
        const ComponentTree tree = build_component_tree(img, pol);
        const StabilityAnalysis analysis = analyze_stability(tree, params.delta);
        for (std::size_t i = 0; i < tree.size(); ++i) {
            if (!analysis.is_local_min[i]) continue;
            const double v = analysis.variation[i];
            if (v > params.max_variation) continue;
            if (tree[i].area < params.min_area || static_cast<double>(tree[i].area) > max_area) continue;
            detections.push_back(MserDetection{tree[i].bounding_box, 1.0 / (1.0 + v), pol});
        }
    };

    if (params.polarity != Polarity::bright) run(Polarity::dark);
    if (params.polarity != Polarity::dark) run(Polarity::bright);

    std::sort(detections.begin(), detections.end(), [](const MserDetection& a, const MserDetection& b) {
        return std::tie(a.box.y0, a.box.x0, a.box.x1, a.box.y1, b.score, a.polarity) <
               std::tie(b.box.y0, b.box.x0, b.box.x1, b.box.y1, a.score, b.polarity);
    });
    return detections;
}

std::vector<ScoredBox> to_scored_boxes(std::span<const MserDetection> detections) {
    std::vector<ScoredBox> boxes;
    boxes.reserve(detections.size());
    for (const auto& d : detections) boxes.push_back(ScoredBox{d.box, d.score});
    return boxes;
}

void write_detections_jsonl(std::ostream& out, std::span<const MserDetection> detections) {
    for (const auto& d : detections) {
        out << "{\"x0\":" << d.box.x0 << ",\"y0\":" << d.box.y0 << ",\"x1\":" << d.box.x1
            << ",\"y1\":" << d.box.y1 << ",\"score\":" << d.score << ",\"polarity\":\""
            << polarity_name(d.polarity) << "\"}\n";
    }
}

} // namespace maskgen
