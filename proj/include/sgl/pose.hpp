#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "sgl/frame.hpp"
#include "sgl/tensor.hpp"

namespace sgl {

struct Keypoint {
    float x = 0.0f;
    float y = 0.0f;
    float confidence = 0.0f;
    bool present() const { return confidence > 0.0f; }
};

// BODY_25 body joints plus two 21-point hands. Confidence 0 marks a missing
// joint; present coordinates are clamped to the canvas on ingestion.
struct PoseSkeleton {
    std::array<Keypoint, 25> body{};
    std::array<Keypoint, 21> left_hand{};
    std::array<Keypoint, 21> right_hand{};
    int canvas_h = 0;
    int canvas_w = 0;
};

inline constexpr int kBodyJoints = 25;
inline constexpr int kHandJoints = 21;

// BODY_25 limb pairs and per-hand finger chains (wrist out to each tip).
const std::vector<std::pair<int, int>>& body25_limbs();
const std::vector<std::pair<int, int>>& hand_limbs();

// Draws the skeleton scaled from its canvas onto a size x size normalized
// raster: Bresenham limb segments in fixed per-limb colors, radius-1 discs for
// joints no drawn limb touches, background exactly -1. Deterministic.
Tensor rasterize_pose(const PoseSkeleton& skeleton, int size);

}  // namespace sgl
