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

#include "maskgen/config.hpp"
#include "maskgen/dataset.hpp"
#include "maskgen/image_io.hpp"
#include "maskgen/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIoOrDecode = 1;
constexpr int kExitDimensionMismatch = 2;
constexpr int kExitBatchHadFailures = 3;
constexpr int kExitUsage = 64;

// Tunable pipeline parameters, bound to CLI flags. Values start at the
// built-in defaults; flags that were actually passed override whatever the
// config file said (flag > file > default).
struct Tunables {
    maskgen::PipelineConfig defaults;

    int mser_delta = defaults.mser.delta;
    int mser_min_area = defaults.mser.min_area;
    double mser_max_area_fraction = defaults.mser.max_area_fraction;
    double mser_max_variation = defaults.mser.max_variation;
    std::string mser_polarity = "both";
    double nms_iou_threshold = defaults.nms_iou_threshold;
    int tv_iterations = defaults.denoise.iterations;
    double tv_step = defaults.denoise.step;
    double tv_fidelity_weight = defaults.denoise.fidelity_weight;
    double tv_epsilon = defaults.denoise.epsilon;
    int pre_binarize_erosions = defaults.pre_binarize_erosions;
    int binarize_threshold = defaults.binarize_threshold;
    int post_binarize_erosions = defaults.post_binarize_erosions;
    int post_dilations = defaults.post_dilations;
    int post_union_erosions = defaults.post_union_erosions;

    std::string config_path;
    bool dump_intermediates = false;

    std::map<std::string, CLI::Option*> options;
};

void add_pipeline_flags(CLI::App& cmd, Tunables& t) {
    auto& opts = t.options;
    opts["mser-delta"] = cmd.add_option("--mser-delta", t.mser_delta,
                                        "MSER stability threshold gap (delta)")
                             ->capture_default_str();
    opts["mser-min-area"] =
        cmd.add_option("--mser-min-area", t.mser_min_area, "Smallest region area kept, in cells")
            ->capture_default_str();
    opts["mser-max-area-fraction"] =
        cmd.add_option("--mser-max-area-fraction", t.mser_max_area_fraction,
                       "Largest region area kept, as a fraction of the image")
            ->capture_default_str();
    opts["mser-max-variation"] = cmd.add_option("--mser-max-variation", t.mser_max_variation,
                                                "Reject regions with stability v above this")
                                     ->capture_default_str();
    opts["mser-polarity"] = cmd.add_option("--mser-polarity", t.mser_polarity,
                                           "Region polarity: dark, bright or both")
                                ->check(CLI::IsMember({"dark", "bright", "both"}))
                                ->capture_default_str();
    opts["nms-iou-threshold"] = cmd.add_option("--nms-iou-threshold", t.nms_iou_threshold,
                                               "Suppress boxes with IoU at or above this")
                                    ->capture_default_str();
    opts["tv-iterations"] =
        cmd.add_option("--tv-iterations", t.tv_iterations, "Total-variation descent iterations")
            ->capture_default_str();
    opts["tv-step"] = cmd.add_option("--tv-step", t.tv_step, "Descent step size (tau)")
                          ->capture_default_str();
    opts["tv-fidelity-weight"] = cmd.add_option("--tv-fidelity-weight", t.tv_fidelity_weight,
                                                "Fidelity term weight (lambda)")
                                     ->capture_default_str();
    opts["tv-epsilon"] =
        cmd.add_option("--tv-epsilon", t.tv_epsilon, "Gradient smoothing constant (epsilon)")
            ->capture_default_str();
    opts["pre-binarize-erosions"] = cmd.add_option("--pre-binarize-erosions", t.pre_binarize_erosions,
                                                   "Grayscale erosions before thresholding")
                                        ->capture_default_str();
    opts["binarize-threshold"] =
        cmd.add_option("--binarize-threshold", t.binarize_threshold, "Binarization threshold")
            ->check(CLI::Range(0, 255))
            ->capture_default_str();
    opts["post-binarize-erosions"] =
        cmd.add_option("--post-binarize-erosions", t.post_binarize_erosions,
                       "Binary erosions after thresholding")
            ->capture_default_str();
    opts["post-dilations"] =
        cmd.add_option("--post-dilations", t.post_dilations, "Binary dilations after the erosions")
            ->capture_default_str();
    opts["post-union-erosions"] =
        cmd.add_option("--post-union-erosions", t.post_union_erosions,
                       "Binary erosions after merging the text and graphic branches")
            ->capture_default_str();

    cmd.add_option("--config", t.config_path,
                   "Config file of key = value lines mirroring these flags")
        ->envname("MASKGEN_CONFIG");
    cmd.add_flag("--dump-intermediates", t.dump_intermediates,
                 "Write per-stage images next to the outputs");
}

maskgen::PipelineConfig resolve_config(const Tunables& t) {
    maskgen::PipelineConfig config;
    if (!t.config_path.empty()) {
        maskgen::apply_config_file(config, t.config_path);
    }

    const auto passed = [&](const char* name) {
        const auto it = t.options.find(name);
        return it != t.options.end() && it->second->count() > 0;
    };
    if (passed("mser-delta")) config.mser.delta = t.mser_delta;
    if (passed("mser-min-area")) config.mser.min_area = t.mser_min_area;
    if (passed("mser-max-area-fraction")) config.mser.max_area_fraction = t.mser_max_area_fraction;
    if (passed("mser-max-variation")) config.mser.max_variation = t.mser_max_variation;
    if (passed("mser-polarity")) {
        config.mser.polarity = t.mser_polarity == "dark"     ? maskgen::Polarity::dark
                               : t.mser_polarity == "bright" ? maskgen::Polarity::bright
                                                             : maskgen::Polarity::both;
    }
    if (passed("nms-iou-threshold")) config.nms_iou_threshold = t.nms_iou_threshold;
    if (passed("tv-iterations")) config.denoise.iterations = t.tv_iterations;
    if (passed("tv-step")) config.denoise.step = t.tv_step;
    if (passed("tv-fidelity-weight")) config.denoise.fidelity_weight = t.tv_fidelity_weight;
    if (passed("tv-epsilon")) config.denoise.epsilon = t.tv_epsilon;
    if (passed("pre-binarize-erosions")) config.pre_binarize_erosions = t.pre_binarize_erosions;
    if (passed("binarize-threshold")) config.binarize_threshold = t.binarize_threshold;
    if (passed("post-binarize-erosions")) config.post_binarize_erosions = t.post_binarize_erosions;
    if (passed("post-dilations")) config.post_dilations = t.post_dilations;
    if (passed("post-union-erosions")) config.post_union_erosions = t.post_union_erosions;
    config.dump_intermediates = t.dump_intermediates;
    return config;
}

std::string stats_json(const maskgen::PairStats& stats) {
    nlohmann::ordered_json row;
    row["boxes_before_nms"] = stats.boxes_before_nms;
    row["boxes_after_nms"] = stats.boxes_after_nms;
    row["tv_energy_before"] = stats.tv_energy_before;
    row["tv_energy_after"] = stats.tv_energy_after;
    row["white_fraction"] = stats.white_fraction;
    row["elapsed_ms"] = stats.elapsed_ms;
    return row.dump();
}

int run_single(const std::string& original_path, const std::string& tampered_path,
               const std::string& out_path, const std::string& dump_dir,
               const std::string& boxes_path, const std::string& tv_dir,
               const maskgen::PipelineConfig& config) {
    try {
        const maskgen::ColorImage original = maskgen::load_image(original_path);
        const maskgen::ColorImage tampered = maskgen::load_image(tampered_path);

        maskgen::StageImages stages;
        const bool want_stages =
            config.dump_intermediates || !boxes_path.empty() || !tv_dir.empty();
        const maskgen::PipelineResult result =
            maskgen::generate_mask(original, tampered, config, want_stages ? &stages : nullptr);

        maskgen::save_mask(result.mask, out_path);
        if (config.dump_intermediates) {
            maskgen::dump_intermediates(stages, dump_dir.empty()
                                                    ? std::filesystem::path(out_path + ".stages")
                                                    : std::filesystem::path(dump_dir));
        }
        if (!boxes_path.empty()) {
            std::ofstream out(boxes_path, std::ios::trunc);
            if (!out) throw maskgen::IoError("cannot write '" + boxes_path + "'");
            maskgen::write_detections_jsonl(out, stages.detections);
        }
        if (!tv_dir.empty()) {
            maskgen::write_tv_snapshots(stages.diff, config.denoise, tv_dir);
        }

        std::cout << stats_json(result.stats) << '\n';
        return kExitOk;
    } catch (const maskgen::DimensionMismatch& e) {
        std::cerr << "maskgen: " << e.what() << '\n';
        return kExitDimensionMismatch;
    } catch (const maskgen::DecodeError& e) {
        std::cerr << "maskgen: " << e.what() << '\n';
        return kExitIoOrDecode;
    } catch (const maskgen::IoError& e) {
        std::cerr << "maskgen: " << e.what() << '\n';
        return kExitIoOrDecode;
    }
}

int run_batch_cmd(const std::string& corpus, const std::string& out_dir, int jobs,
                  const maskgen::PipelineConfig& config) {
    std::vector<maskgen::PairRecord> records;
    try {
        records = maskgen::run_batch(corpus, out_dir, config, jobs);
    } catch (const maskgen::IoError& e) {
        std::cerr << "maskgen: " << e.what() << '\n';
        return kExitIoOrDecode;
    }

    std::size_t ok = 0, skipped = 0, decode_failed = 0, io_failed = 0;
    for (const auto& r : records) {
        switch (r.status) {
            case maskgen::PairStatus::ok: ++ok; break;
            case maskgen::PairStatus::skipped_size_mismatch: ++skipped; break;
            case maskgen::PairStatus::decode_error: ++decode_failed; break;
            case maskgen::PairStatus::io_error: ++io_failed; break;
        }
    }
    std::cerr << "maskgen: " << records.size() << " pairs: ok=" << ok
              << " skipped_size_mismatch=" << skipped << " decode_error=" << decode_failed
              << " io_error=" << io_failed << '\n';
    return (decode_failed + io_failed) > 0 ? kExitBatchHadFailures : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maskgen: manipulation masks from (original, tampered) image pairs"};
    app.require_subcommand(1);

    auto* single = app.add_subcommand("single", "Process one pair and write its mask");
    std::string original_path, tampered_path, out_path, dump_dir, boxes_path, tv_dir;
    single->add_option("--original", original_path, "Original image (PNG or JPEG)")->required();
    single->add_option("--tampered", tampered_path, "Tampered image (PNG or JPEG)")->required();
    single->add_option("--out", out_path, "Output mask PNG")->required();
    single->add_option("--dump-dir", dump_dir,
                       "Directory for --dump-intermediates (default: <out>.stages)");
    single->add_option("--dump-boxes", boxes_path, "Write pre-NMS detections as JSON lines");
    single->add_option("--dump-tv-dir", tv_dir,
                       "Write the denoiser state after iterations 1, 10 and 100 here");
    Tunables single_tunables;
    add_pipeline_flags(*single, single_tunables);

    auto* batch = app.add_subcommand("batch", "Process a corpus directory and write a manifest");
    std::string corpus_dir, batch_out;
    int jobs = 1;
    batch->add_option("--corpus", corpus_dir, "Corpus root: <group>/<images...>")->required();
    batch->add_option("--out", batch_out, "Output directory for masks and manifest.jsonl")
        ->required();
    batch->add_option("--jobs", jobs, "Concurrent workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    Tunables batch_tunables;
    add_pipeline_flags(*batch, batch_tunables);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (single->parsed()) {
            return run_single(original_path, tampered_path, out_path, dump_dir, boxes_path, tv_dir,
                              resolve_config(single_tunables));
        }
        return run_batch_cmd(corpus_dir, batch_out, jobs, resolve_config(batch_tunables));
    } catch (const maskgen::IoError& e) {
        std::cerr << "maskgen: " << e.what() << '\n';
        return kExitIoOrDecode;
    } catch (const std::invalid_argument& e) {
        std::cerr << "maskgen: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "maskgen: " << e.what() << '\n';
        return kExitIoOrDecode;
    }
}
