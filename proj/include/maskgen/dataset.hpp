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

#ifndef MASKGEN_DATASET_HPP
#define MASKGEN_DATASET_HPP

#include "maskgen/pipeline.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace maskgen {

/// One corpus group: all images collected under one post. The first image
/// in byte-lexicographic filename order is the original; every other image
/// is a tampered candidate.
struct PostGroup {
    std::string group_id; // directory name
    std::filesystem::path original;
    std::vector<std::filesystem::path> tampered;
};

enum class PairStatus { ok, skipped_size_mismatch, decode_error, io_error };

std::string_view to_string(PairStatus status);

/// One manifest row. mask_path and stats are meaningful only when
/// status == ok; paths are stored relative to the corpus root / output
/// directory so manifests compare equal across machines.
struct PairRecord {
    std::string group_id;
    std::string original_path;
    std::string tampered_path;
    PairStatus status = PairStatus::ok;
    std::string mask_path;
    PairStats stats;
};

/// Serialize one record as a manifest JSON line (no trailing newline).
std::string record_to_json(const PairRecord& record);

/// Find every immediate subdirectory of root holding at least two image
/// files (png/jpg/jpeg, case-insensitive). Files sort by byte value;
/// directories with fewer than two images are skipped with a note on
/// stderr. Throws IoError when root cannot be read.
std::vector<PostGroup> scan_corpus(const std::filesystem::path& root);

/// Process every (original, tampered) pair of the corpus through
/// generate_mask using up to `workers` threads. Masks land in
/// out_dir/<group_id>/<tampered_stem>_mask.png; the manifest is written to
/// out_dir/manifest.jsonl ordered by (group_id, tampered_path) no matter
/// how the workers were scheduled. Per-pair failures become records, not
/// exceptions; only out_dir-level failures throw IoError.
std::vector<PairRecord> run_batch(const std::filesystem::path& root,
                                  const std::filesystem::path& out_dir,
                                  const PipelineConfig& config, int workers);

} // namespace maskgen

#endif // MASKGEN_DATASET_HPP
