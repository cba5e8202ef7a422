#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "sgl/frame.hpp"
#include "sgl/palette.hpp"
#include "sgl/pose.hpp"

namespace sgl {

// Parsing categories used by the synthetic signer (CIHP-flavored ids).
namespace synth_label {
inline constexpr uint8_t background = 0;
inline constexpr uint8_t torso = 5;
inline constexpr uint8_t head = 13;
inline constexpr uint8_t upper_arm_l = 14;  // viewer-left side
inline constexpr uint8_t upper_arm_r = 15;
inline constexpr uint8_t lower_arm_l = 16;
inline constexpr uint8_t lower_arm_r = 17;
inline constexpr uint8_t hand_l = 3;
inline constexpr uint8_t hand_r = 4;
}  // namespace synth_label

// Procedural stick-figure signer: head disc, torso box, two 2-segment arms
// with hand discs, articulated by per-frame absolute arm angles (radians from
// straight down, positive swinging outward). Rendering is deterministic.
struct SyntheticSignerSpec {
    int image_size = 64;
    Rgb background{24, 28, 40};
    Rgb shirt{60, 120, 180};
    Rgb skin{220, 180, 150};
    float head_radius = 6.0f;
    float torso_half_w = 8.0f;
    float torso_half_h = 11.0f;
    float upper_arm_len = 10.0f;
    float lower_arm_len = 8.0f;
    float hand_radius = 2.5f;
    float arm_half_thickness = 1.6f;
    // Per frame: [alpha_left, beta_left, alpha_right, beta_right] — absolute
    // upper- and lower-arm angles per side.
    std::vector<std::array<float, 4>> trajectory;
    uint64_t seed = 0;
};

struct SyntheticFrame {
    Frame frame;
    ParsingMap parsing;   // exact region labels
    PoseSkeleton skeleton;  // exact joints, confidence 1
};

// Renders n_frames frames following spec.trajectory. Degenerate geometry
// (non-positive lengths/radii) or a too-short trajectory -> SpecError.
std::vector<SyntheticFrame> generate_synthetic_dataset(const SyntheticSignerSpec& spec, int n_frames);

// Seeded random signer: colors, limb lengths and a smooth angle trajectory.
SyntheticSignerSpec make_signer_spec(int image_size, int n_frames, uint64_t seed);

// Writes `signers` clips x `frames` frames in the shared ingestion layout:
// <root>/manifest.json + <root>/clips/signer_XX/{frame_%06d.png,
// frame_%06d_keypoints.json, parsing_%06d.png}.
void write_synthetic_clips(const std::filesystem::path& root, int signers, int frames, int image_size,
                           uint64_t seed);

}  // namespace sgl
