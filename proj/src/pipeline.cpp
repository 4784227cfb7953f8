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

#include "maskgen/pipeline.hpp"

#include "maskgen/image_io.hpp"
#include "maskgen/morphology.hpp"
#include "maskgen/nms.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace maskgen {

void validate_config(const PipelineConfig& config) {
    if (config.mser.delta < 1) throw std::invalid_argument("mser delta must be >= 1");
    if (config.mser.min_area < 1) throw std::invalid_argument("mser min_area must be >= 1");
    if (!(config.mser.max_area_fraction > 0.0) || config.mser.max_area_fraction > 1.0) {
        throw std::invalid_argument("mser max_area_fraction must be in (0, 1]");
    }
    if (!(config.mser.max_variation > 0.0)) {
        throw std::invalid_argument("mser max_variation must be positive");
    }
    if (!(config.nms_iou_threshold > 0.0) || config.nms_iou_threshold > 1.0) {
        throw std::invalid_argument("nms_iou_threshold must be in (0, 1]");
    }
    if (config.denoise.iterations < 0) throw std::invalid_argument("tv iterations must be >= 0");
    if (!(config.denoise.step > 0.0)) throw std::invalid_argument("tv step must be positive");
    if (config.denoise.fidelity_weight < 0.0) {
        throw std::invalid_argument("tv fidelity_weight must be >= 0");
    }
    if (!(config.denoise.epsilon > 0.0)) throw std::invalid_argument("tv epsilon must be positive");
    if (config.binarize_threshold < 0 || config.binarize_threshold > 255) {
        throw std::invalid_argument("binarize_threshold must be in [0, 255]");
    }
    if (config.pre_binarize_erosions < 0 || config.post_binarize_erosions < 0 ||
        config.post_dilations < 0 || config.post_union_erosions < 0) {
        throw std::invalid_argument("morphology pass counts must be >= 0");
    }
}

PipelineResult generate_mask(const ColorImage& original, const ColorImage& tampered,
                             const PipelineConfig& config, StageImages* stages) {
    if (original.width != tampered.width || original.height != tampered.height) {
        throw DimensionMismatch(original.width, original.height, tampered.width, tampered.height);
    }
    validate_config(config);

    const auto started = std::chrono::steady_clock::now();

    const GrayImage diff = abs_diff(to_gray(original), to_gray(tampered));

    // Text branch: stable extremal regions, deduplicated, stamped as boxes.
    const std::vector<MserDetection> detections = detect_mser(diff, config.mser);
    const std::vector<ScoredBox> kept = nms(to_scored_boxes(detections), config.nms_iou_threshold);
    std::vector<Box> boxes;
    boxes.reserve(kept.size());
    for (const auto& sb : kept) boxes.push_back(sb.box);
    const BinaryMask text_mask = fill_boxes(diff.width, diff.height, boxes);

    // Graphic branch: flatten the noise, then threshold and clean up.
    const GrayImage denoised = tv_denoise(diff, config.denoise);
    const GrayImage eroded = erode_gray(denoised, config.pre_binarize_erosions);
    const BinaryMask binary = binarize(eroded, static_cast<std::uint8_t>(config.binarize_threshold));
    const BinaryMask cleaned =
        dilate_binary(erode_binary(binary, config.post_binarize_erosions), config.post_dilations);

    BinaryMask mask = mask_union(cleaned, text_mask);
    if (config.post_union_erosions > 0) {
        mask = erode_binary(mask, config.post_union_erosions);
    }

    PairStats stats;
    stats.boxes_before_nms = detections.size();
    stats.boxes_after_nms = kept.size();
    stats.tv_energy_before = tv_energy(to_field(diff));
    stats.tv_energy_after = tv_energy(to_field(denoised));
    stats.white_fraction =
        static_cast<double>(mask.white_count()) / static_cast<double>(mask.pixel_count());
    stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

    if (stages) {
        stages->diff = diff;
        stages->text_mask = text_mask;
        stages->denoised = denoised;
        stages->binary = binary;
        stages->mask = mask;
        stages->detections = detections;
    }
    return PipelineResult{std::move(mask), stats};
}

void dump_intermediates(const StageImages& stages, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

    save_gray(stages.diff, out_dir / "diff.png");
    save_mask(stages.text_mask, out_dir / "text.png");
    save_gray(stages.denoised, out_dir / "tv.png");
    save_mask(stages.binary, out_dir / "binary.png");
    save_mask(stages.mask, out_dir / "mask.png");
}

void write_tv_snapshots(const GrayImage& img, const DenoiseParams& params,
                        const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

    tv_denoise(img, params, [&](int iteration, const RealField& field) {
        if (iteration != 1 && iteration != 10 && iteration != 100) return;
        char name[32];
        std::snprintf(name, sizeof(name), "tv_iter_%04d.png", iteration);
        save_gray(quantize(field), out_dir / name);
    });
}

} // namespace maskgen
