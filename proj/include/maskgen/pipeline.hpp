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

#ifndef MASKGEN_PIPELINE_HPP
#define MASKGEN_PIPELINE_HPP

#include "maskgen/image.hpp"
#include "maskgen/mser.hpp"
#include "maskgen/tv_denoise.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace maskgen {

/// Everything tunable about one pair's processing. The defaults are the
/// published operating point: NMS IoU 0.4, 100 TV iterations, binarize at
/// 15, erosion/dilation schedule 2/8/2.
struct PipelineConfig {
    MserParams mser;
    double nms_iou_threshold = 0.4;
    DenoiseParams denoise;
    int pre_binarize_erosions = 2;   // grayscale, before thresholding
    int binarize_threshold = 15;
    int post_binarize_erosions = 8;  // binary, after thresholding
    int post_dilations = 2;
    int post_union_erosions = 0;     // optional extra pass after the union
    bool dump_intermediates = false;
};

/// Per-pair processing statistics, serialized into the batch manifest.
struct PairStats {
    std::size_t boxes_before_nms = 0;
    std::size_t boxes_after_nms = 0;
    double tv_energy_before = 0.0;
    double tv_energy_after = 0.0;
    double white_fraction = 0.0;
    std::int64_t elapsed_ms = 0;
};

/// Stage outputs kept around for inspection dumps.
struct StageImages {
    GrayImage diff;
    BinaryMask text_mask;
    GrayImage denoised;
    BinaryMask binary;
    BinaryMask mask;
    std::vector<MserDetection> detections; // pre-NMS boxes
};

struct PipelineResult {
    BinaryMask mask;
    PairStats stats;
};

/// Throws std::invalid_argument when any parameter is out of range, so a
/// bad configuration fails the whole run up front instead of surfacing
/// per pair inside worker threads.
void validate_config(const PipelineConfig& config);

/// Run one (original, tampered) pair end to end:
///
///   d = |gray(original) - gray(tampered)|
///   text branch:    fill_boxes(nms(detect_mser(d)))
///   graphic branch: binarize(erode_gray(tv_denoise(d), 2), 15),
///                   then 8 binary erosions and 2 binary dilations
///   mask = union of the two branches
///
/// Throws DimensionMismatch when the pair sizes differ. When `stages` is
/// non-null the intermediate images are copied into it.
PipelineResult generate_mask(const ColorImage& original, const ColorImage& tampered,
                             const PipelineConfig& config, StageImages* stages = nullptr);

/// Write the captured stages as PNGs with fixed names into out_dir:
/// diff.png, text.png, tv.png, binary.png, mask.png. Throws IoError.
void dump_intermediates(const StageImages& stages, const std::filesystem::path& out_dir);

/// Inspection aid for the descent itself: re-run the denoiser on img and
/// write the quantized field after iterations 1, 10 and 100 (those that
/// exist for params.iterations) as out_dir/tv_iter_<nnnn>.png.
void write_tv_snapshots(const GrayImage& img, const DenoiseParams& params,
                        const std::filesystem::path& out_dir);

} // namespace maskgen

#endif // MASKGEN_PIPELINE_HPP
