#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace sgl {

struct BoxRect {
    double y0 = 0.0, x0 = 0.0, y1 = 1.0, x1 = 1.0;  // normalized, [y0,x0,y1,x1] order on disk
};

// One clip's metadata from an MS-ASL-style manifest. Frames and keypoints for
// the clip live together under frame_dir (`frame_%06d.png`,
// `frame_%06d_keypoints.json`, optional `parsing_%06d.png`).
struct ClipRecord {
    std::string gloss_label;
    int signer_id = 0;
    std::filesystem::path frame_dir;
    std::filesystem::path keypoint_dir;
    int start_frame = 0;
    int end_frame = 0;
    BoxRect box;
    bool unavailable = false;  // set when frame_dir is absent locally
};

struct Diagnostic {
    int index = -1;  // manifest entry index, -1 when not entry-specific
    std::string message;
};

struct ManifestLoad {
    std::vector<ClipRecord> records;
    std::vector<Diagnostic> rejected;  // invariant-violating entries, by index
};

// Reads a JSON array of clip entries. Entries whose local clip directory is
// missing come back flagged `unavailable`; entries violating invariants
// (start >= end, box outside [0,1]^2) are dropped into `rejected` with a
// ValidationError message naming the index. Unreadable or non-array JSON
// throws FormatError.
ManifestLoad load_msasl_manifest(const std::filesystem::path& path);

}  // namespace sgl
