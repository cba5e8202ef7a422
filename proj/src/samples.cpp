#include "sgl/samples.hpp"

#include <algorithm>
#include <cstdio>

#include "sgl/image_io.hpp"
#include "sgl/openpose_json.hpp"

namespace sgl {

namespace {

std::string frame_stem(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "frame_%06d", index);
    return buf;
}

std::string parsing_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "parsing_%06d.png", index);
    return buf;
}

// Frame indices present on disk within [start, end), ascending.
std::vector<int> list_frame_indices(const ClipRecord& clip) {
    std::vector<int> indices;
    for (int i = clip.start_frame; i < clip.end_frame; ++i) {
        if (std::filesystem::exists(clip.frame_dir / (frame_stem(i) + ".png"))) indices.push_back(i);
    }
    return indices;
}

ParsingMap parsing_for(const ClipRecord& clip, int index, const Frame& frame, const ParserFn& parser) {
    const auto exact = clip.frame_dir / parsing_name(index);
    if (std::filesystem::exists(exact)) return read_png_labels(exact);
    if (!parser)
        throw ConfigError("clip " + clip.frame_dir.string() + " has no parsing files and no parser was supplied");
    return parser(frame);
}

}  // namespace

SampleBuild build_sample_pairs(const ClipRecord& clip, int stride, const ParserFn& parser) {
    if (stride < 1) throw ConfigError("stride must be >= 1");
    SampleBuild out;
    if (clip.unavailable) {
        out.skipped.push_back({-1, "clip unavailable locally: " + clip.frame_dir.string()});
        return out;
    }
    const std::vector<int> indices = list_frame_indices(clip);
    const int n = static_cast<int>(indices.size());
    for (int t = 0; t + stride < n; ++t) {
        const int src = indices[static_cast<size_t>(t)];
        const int dst = indices[static_cast<size_t>(t + stride)];
        const auto keypoint_path = clip.keypoint_dir / (frame_stem(dst) + "_keypoints.json");
        if (!std::filesystem::exists(keypoint_path)) {
            out.skipped.push_back({src, "skipped sample " + std::to_string(src) + "->" + std::to_string(dst) +
                                            ": missing " + keypoint_path.string()});
            continue;
        }
        try {
            Sample s;
            s.input_frame = read_png_rgb(clip.frame_dir / (frame_stem(src) + ".png"));
            validate_pipeline_size(s.input_frame.height, s.input_frame.width, "input frame");
            Frame target = read_png_rgb(clip.frame_dir / (frame_stem(dst) + ".png"));
            if (!target.same_size(s.input_frame))
                throw ValidationError("frame size changes mid-clip in " + clip.frame_dir.string());
            s.initial_parsing = parsing_for(clip, src, s.input_frame, parser);
            s.target_parsing = parsing_for(clip, dst, target, parser);
            s.target_pose = load_openpose_file(keypoint_path, target.height, target.width);
            s.target_frame = std::move(target);
            out.samples.push_back(std::move(s));
        } catch (const NoPersonDetected& e) {
            out.skipped.push_back({src, "skipped sample " + std::to_string(src) + ": " + e.what()});
        } catch (const FormatError& e) {
            out.skipped.push_back({src, "skipped sample " + std::to_string(src) + ": " + e.what()});
        }
    }
    return out;
}

SampleBuild load_dataset(const std::filesystem::path& manifest_path, int stride, const ParserFn& parser) {
    ManifestLoad manifest = load_msasl_manifest(manifest_path);
    SampleBuild all;
    for (const Diagnostic& d : manifest.rejected) all.skipped.push_back(d);
    for (const ClipRecord& clip : manifest.records) {
        SampleBuild part = build_sample_pairs(clip, stride, parser);
        std::move(part.samples.begin(), part.samples.end(), std::back_inserter(all.samples));
        std::move(part.skipped.begin(), part.skipped.end(), std::back_inserter(all.skipped));
    }
    return all;
}

}  // namespace sgl
