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

#include "maskgen/dataset.hpp"

#include "maskgen/image_io.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <thread>

#include <json.hpp>

namespace maskgen {

namespace {

bool has_image_extension(const std::filesystem::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

struct PairJob {
    const PostGroup* group = nullptr;
    std::filesystem::path tampered;
};

PairRecord process_pair(const std::filesystem::path& root, const std::filesystem::path& out_dir,
                        const PipelineConfig& config, const PostGroup& group,
                        const std::filesystem::path& tampered) {
    PairRecord record;
    record.group_id = group.group_id;
    record.original_path = (std::filesystem::path(group.group_id) / group.original.filename())
                               .generic_string();
    record.tampered_path = (std::filesystem::path(group.group_id) / tampered.filename())
                               .generic_string();

    try {
        const ColorImage original = load_image(root / record.original_path);
        const ColorImage candidate = load_image(root / record.tampered_path);
        if (original.width != candidate.width || original.height != candidate.height) {
            record.status = PairStatus::skipped_size_mismatch;
            return record;
        }

        StageImages stages;
        const PipelineResult result = generate_mask(original, candidate, config,
                                                    config.dump_intermediates ? &stages : nullptr);

        const std::string stem = tampered.stem().string();
        const auto mask_rel = std::filesystem::path(group.group_id) / (stem + "_mask.png");
        save_mask(result.mask, out_dir / mask_rel);
        if (config.dump_intermediates) {
            dump_intermediates(stages, out_dir / group.group_id / (stem + "_stages"));
        }

        record.status = PairStatus::ok;
        record.mask_path = mask_rel.generic_string();
        record.stats = result.stats;
    } catch (const DimensionMismatch&) {
        record.status = PairStatus::skipped_size_mismatch;
    } catch (const DecodeError&) {
        record.status = PairStatus::decode_error;
    } catch (const std::exception&) {
        // Filesystem failures and anything unforeseen; a worker thread must
        // report a record, never unwind.
        record.status = PairStatus::io_error;
    }
    return record;
}

} // namespace

std::string_view to_string(PairStatus status) {
    switch (status) {
        case PairStatus::ok: return "ok";
        case PairStatus::skipped_size_mismatch: return "skipped_size_mismatch";
        case PairStatus::decode_error: return "decode_error";
        case PairStatus::io_error: return "io_error";
    }
    return "?";
}

std::string record_to_json(const PairRecord& record) {
    nlohmann::ordered_json row;
    row["group_id"] = record.group_id;
    row["original_path"] = record.original_path;
    row["tampered_path"] = record.tampered_path;
    row["status"] = std::string(to_string(record.status));
    if (record.status == PairStatus::ok) {
        row["mask_path"] = record.mask_path;
        row["boxes_before_nms"] = record.stats.boxes_before_nms;
        row["boxes_after_nms"] = record.stats.boxes_after_nms;
        row["tv_energy_before"] = record.stats.tv_energy_before;
        row["tv_energy_after"] = record.stats.tv_energy_after;
        row["white_fraction"] = record.stats.white_fraction;
        row["elapsed_ms"] = record.stats.elapsed_ms;
    }
    return row.dump();
}

std::vector<PostGroup> scan_corpus(const std::filesystem::path& root) {
    std::error_code ec;
    auto dir = std::filesystem::directory_iterator(root, ec);
    if (ec) throw IoError("cannot read corpus root '" + root.string() + "': " + ec.message());

    std::vector<PostGroup> groups;
    for (const auto& entry : dir) {
        if (!entry.is_directory()) continue;

        auto files = std::filesystem::directory_iterator(entry.path(), ec);
        if (ec) {
            throw IoError("cannot read group '" + entry.path().string() + "': " + ec.message());
        }
        std::vector<std::string> names;
        for (const auto& file : files) {
            if (file.is_regular_file() && has_image_extension(file.path())) {
                names.push_back(file.path().filename().string());
            }
        }
        if (names.size() < 2) {
            std::cerr << "maskgen: skipping '" << entry.path().string()
                      << "': fewer than 2 image files\n";
            continue;
        }
        std::sort(names.begin(), names.end());

        PostGroup group;
        group.group_id = entry.path().filename().string();
        group.original = entry.path() / names.front();
        for (std::size_t i = 1; i < names.size(); ++i) {
            group.tampered.push_back(entry.path() / names[i]);
        }
        groups.push_back(std::move(group));
    }
    std::sort(groups.begin(), groups.end(),
              [](const PostGroup& a, const PostGroup& b) { return a.group_id < b.group_id; });
    return groups;
}

std::vector<PairRecord> run_batch(const std::filesystem::path& root,
                                  const std::filesystem::path& out_dir,
                                  const PipelineConfig& config, int workers) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    validate_config(config); // fail before any worker starts

    const std::vector<PostGroup> groups = scan_corpus(root);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

    // Canonical job order = manifest order; workers only fill in slots.
    std::vector<PairJob> jobs;
    for (const auto& group : groups) {
        std::filesystem::create_directories(out_dir / group.group_id, ec);
        if (ec) {
            throw IoError("cannot create '" + (out_dir / group.group_id).string() +
                          "': " + ec.message());
        }
        for (const auto& tampered : group.tampered) {
            jobs.push_back(PairJob{&group, tampered});
        }
    }

    std::vector<PairRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            records[i] = process_pair(root, out_dir, config, *jobs[i].group, jobs[i].tampered);
        }
    };

    const int thread_count = std::min(workers, std::max(static_cast<int>(jobs.size()), 1));
    if (thread_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(thread_count));
        for (int i = 0; i < thread_count; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    const auto manifest_path = out_dir / "manifest.jsonl";
    std::ofstream manifest(manifest_path, std::ios::trunc);
    if (!manifest) throw IoError("cannot write '" + manifest_path.string() + "'");
    for (const auto& record : records) {
        manifest << record_to_json(record) << '\n';
    }
    manifest.flush();
    if (!manifest) throw IoError("cannot write '" + manifest_path.string() + "'");

    return records;
}

} // namespace maskgen
