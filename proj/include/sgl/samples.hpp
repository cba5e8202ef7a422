#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sgl/frame.hpp"
#include "sgl/manifest.hpp"
#include "sgl/pose.hpp"

namespace sgl {

// One training pair. Inference samples may omit the target side.
struct Sample {
    Frame input_frame;
    ParsingMap initial_parsing;
    PoseSkeleton target_pose;
    std::optional<ParsingMap> target_parsing;
    std::optional<Frame> target_frame;
};

// Runs a frozen semantic parser on a frame (self-labeling path for data
// without exact parsing annotations).
using ParserFn = std::function<ParsingMap(const Frame&)>;

struct SampleBuild {
    std::vector<Sample> samples;
    std::vector<Diagnostic> skipped;  // per-sample problems; never a run failure
};

// Pairs frame t with frame t+stride across the clip. Parsing maps come from
// `parsing_%06d.png` files when present (exact labels), otherwise from the
// parser callback. Missing keypoint files skip that sample with a diagnostic.
SampleBuild build_sample_pairs(const ClipRecord& clip, int stride, const ParserFn& parser);

// All samples of every available manifest record, deterministic order.
SampleBuild load_dataset(const std::filesystem::path& manifest_path, int stride, const ParserFn& parser);

}  // namespace sgl
