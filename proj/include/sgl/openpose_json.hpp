#pragma once

#include <filesystem>
#include <string>

#include "sgl/pose.hpp"

namespace sgl {

// Parses an OpenPose JSON document: top-level `people` array, each person
// carrying `pose_keypoints_2d` (75 floats) and optional 63-float hand arrays.
// Returns the person with the greatest body-confidence sum, coordinates
// clamped to the canvas. Empty `people` -> NoPersonDetected; malformed
// documents or keypoint arrays -> FormatError.
PoseSkeleton parse_openpose_json(const std::string& doc, int canvas_h, int canvas_w);

PoseSkeleton load_openpose_file(const std::filesystem::path& path, int canvas_h, int canvas_w);

// Serializes a skeleton back to the same format (used by the synthetic path).
std::string openpose_json_from_skeleton(const PoseSkeleton& skeleton);

}  // namespace sgl
