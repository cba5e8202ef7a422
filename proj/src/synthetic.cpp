#include "sgl/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "sgl/image_io.hpp"
#include "sgl/openpose_json.hpp"
#include "sgl/rng.hpp"

namespace sgl {

namespace {

struct Vec2 {
    float x, y;
};

float point_segment_dist(float px, float py, Vec2 a, Vec2 b) {
    const float vx = b.x - a.x, vy = b.y - a.y;
    const float len2 = vx * vx + vy * vy;
    float t = len2 > 0.0f ? ((px - a.x) * vx + (py - a.y) * vy) / len2 : 0.0f;
    t = std::clamp(t, 0.0f, 1.0f);
    const float dx = px - (a.x + t * vx), dy = py - (a.y + t * vy);
    return std::sqrt(dx * dx + dy * dy);
}

struct Painter {
    Frame* frame;
    ParsingMap* parsing;
    int size;

    void put(int x, int y, Rgb color, uint8_t label) {
        if (x < 0 || y < 0 || x >= size || y >= size) return;
        frame->at(y, x, 0) = color.r;
        frame->at(y, x, 1) = color.g;
        frame->at(y, x, 2) = color.b;
        parsing->at(y, x) = label;
    }

    void disc(Vec2 c, float r, Rgb color, uint8_t label) {
        const int x0 = static_cast<int>(std::floor(c.x - r)), x1 = static_cast<int>(std::ceil(c.x + r));
        const int y0 = static_cast<int>(std::floor(c.y - r)), y1 = static_cast<int>(std::ceil(c.y + r));
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x) {
                const float dx = x - c.x, dy = y - c.y;
                if (dx * dx + dy * dy <= r * r) put(x, y, color, label);
            }
    }

    void box(Vec2 c, float half_w, float half_h, Rgb color, uint8_t label) {
        const int x0 = static_cast<int>(std::ceil(c.x - half_w)), x1 = static_cast<int>(std::floor(c.x + half_w));
        const int y0 = static_cast<int>(std::ceil(c.y - half_h)), y1 = static_cast<int>(std::floor(c.y + half_h));
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x) put(x, y, color, label);
    }

    void capsule(Vec2 a, Vec2 b, float r, Rgb color, uint8_t label) {
        const int x0 = static_cast<int>(std::floor(std::min(a.x, b.x) - r));
        const int x1 = static_cast<int>(std::ceil(std::max(a.x, b.x) + r));
        const int y0 = static_cast<int>(std::floor(std::min(a.y, b.y) - r));
        const int y1 = static_cast<int>(std::ceil(std::max(a.y, b.y) + r));
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x)
                if (point_segment_dist(static_cast<float>(x), static_cast<float>(y), a, b) <= r)
                    put(x, y, color, label);
    }
};

Keypoint kp(Vec2 p) { return Keypoint{p.x, p.y, 1.0f}; }

// side = -1 for the viewer-left arm, +1 for viewer-right.
Vec2 arm_dir(float angle, int side) { return {side * std::sin(angle), std::cos(angle)}; }

void check_positive(float v, const char* what) {
    if (!(v > 0.0f)) throw SpecError(std::string("synthetic signer: ") + what + " must be > 0");
}

}  // namespace

std::vector<SyntheticFrame> generate_synthetic_dataset(const SyntheticSignerSpec& spec, int n_frames) {
    if (n_frames < 2) throw SpecError("synthetic dataset needs n_frames >= 2");
    check_positive(spec.upper_arm_len, "upper_arm_len");
    check_positive(spec.lower_arm_len, "lower_arm_len");
    check_positive(spec.head_radius, "head_radius");
    check_positive(spec.torso_half_w, "torso_half_w");
    check_positive(spec.torso_half_h, "torso_half_h");
    check_positive(spec.hand_radius, "hand_radius");
    check_positive(spec.arm_half_thickness, "arm_half_thickness");
    if (static_cast<int>(spec.trajectory.size()) < n_frames)
        throw SpecError("trajectory has " + std::to_string(spec.trajectory.size()) + " entries, need " +
                        std::to_string(n_frames));
    validate_pipeline_size(spec.image_size, spec.image_size, "synthetic frame");

    const float s = static_cast<float>(spec.image_size);
    const Vec2 torso_c{s * 0.5f, s * 0.60f};
    const float torso_top = torso_c.y - spec.torso_half_h;
    const Vec2 neck{torso_c.x, torso_top};
    const Vec2 mid_hip{torso_c.x, torso_c.y + spec.torso_half_h};
    const Vec2 head_c{torso_c.x, torso_top - spec.head_radius - 2.0f};

    std::vector<SyntheticFrame> out;
    out.reserve(static_cast<size_t>(n_frames));
    for (int t = 0; t < n_frames; ++t) {
        const auto& ang = spec.trajectory[static_cast<size_t>(t)];
        SyntheticFrame sf;
        sf.frame = Frame::filled(spec.image_size, spec.image_size, spec.background.r, spec.background.g,
                                 spec.background.b);
        sf.parsing = ParsingMap(spec.image_size, spec.image_size, kParsingCategories);
        Painter paint{&sf.frame, &sf.parsing, spec.image_size};

        paint.box(torso_c, spec.torso_half_w, spec.torso_half_h, spec.shirt, synth_label::torso);
        paint.disc(head_c, spec.head_radius, spec.skin, synth_label::head);

        Vec2 shoulder[2], elbow[2], wrist[2];
        for (int sidx = 0; sidx < 2; ++sidx) {
            const int side = sidx == 0 ? -1 : 1;
            const float alpha = ang[static_cast<size_t>(sidx * 2)];
            const float beta = ang[static_cast<size_t>(sidx * 2 + 1)];
            shoulder[sidx] = {torso_c.x + side * spec.torso_half_w, torso_top + 1.0f};
            Vec2 du = arm_dir(alpha, side), dl = arm_dir(beta, side);
            elbow[sidx] = {shoulder[sidx].x + du.x * spec.upper_arm_len,
                           shoulder[sidx].y + du.y * spec.upper_arm_len};
            wrist[sidx] = {elbow[sidx].x + dl.x * spec.lower_arm_len, elbow[sidx].y + dl.y * spec.lower_arm_len};
            const uint8_t upper = sidx == 0 ? synth_label::upper_arm_l : synth_label::upper_arm_r;
            const uint8_t lower = sidx == 0 ? synth_label::lower_arm_l : synth_label::lower_arm_r;
            const uint8_t hand = sidx == 0 ? synth_label::hand_l : synth_label::hand_r;
            paint.capsule(shoulder[sidx], elbow[sidx], spec.arm_half_thickness, spec.shirt, upper);
            paint.capsule(elbow[sidx], wrist[sidx], spec.arm_half_thickness, spec.skin, lower);
            paint.disc(wrist[sidx], spec.hand_radius, spec.skin, hand);
        }

        sf.skeleton.canvas_h = spec.image_size;
        sf.skeleton.canvas_w = spec.image_size;
        sf.skeleton.body[0] = kp(head_c);
        sf.skeleton.body[1] = kp(neck);
        sf.skeleton.body[2] = kp(shoulder[0]);
        sf.skeleton.body[3] = kp(elbow[0]);
        sf.skeleton.body[4] = kp(wrist[0]);
        sf.skeleton.body[5] = kp(shoulder[1]);
        sf.skeleton.body[6] = kp(elbow[1]);
        sf.skeleton.body[7] = kp(wrist[1]);
        sf.skeleton.body[8] = kp(mid_hip);
        out.push_back(std::move(sf));
    }
    return out;
}

SyntheticSignerSpec make_signer_spec(int image_size, int n_frames, uint64_t seed) {
    Rng rng(seed * 0x9e3779b9ull + 17);
    SyntheticSignerSpec spec;
    spec.image_size = image_size;
    spec.seed = seed;
    const float scale = static_cast<float>(image_size) / 64.0f;

    auto channel = [&](int lo, int hi) { return static_cast<uint8_t>(lo + rng.uniform_int(hi - lo + 1)); };
    spec.background = {channel(10, 70), channel(10, 70), channel(20, 90)};
    spec.shirt = {channel(40, 200), channel(90, 220), channel(90, 230)};
    spec.skin = {channel(170, 250), channel(140, 220), channel(110, 190)};

    spec.head_radius = (5.0f + static_cast<float>(rng.uniform()) * 2.0f) * scale;
    spec.torso_half_w = (7.0f + static_cast<float>(rng.uniform()) * 2.0f) * scale;
    spec.torso_half_h = (10.0f + static_cast<float>(rng.uniform()) * 2.5f) * scale;
    spec.upper_arm_len = (9.0f + static_cast<float>(rng.uniform()) * 2.0f) * scale;
    spec.lower_arm_len = (7.0f + static_cast<float>(rng.uniform()) * 2.0f) * scale;
    spec.hand_radius = 2.5f * scale;
    spec.arm_half_thickness = 1.6f * scale;

    // Smooth sinusoid angles kept in the outward band so arms never cross the
    // torso or leave the canvas.
    auto osc_params = [&] {
        struct P {
            float mid, amp, freq, phase;
        } p;
        p.mid = 0.65f + static_cast<float>(rng.uniform()) * 0.45f;
        p.amp = 0.25f + static_cast<float>(rng.uniform()) * 0.30f;
        p.freq = 1.0f + static_cast<float>(rng.uniform()) * 2.0f;
        p.phase = static_cast<float>(rng.uniform()) * 6.2831853f;
        return p;
    };
    auto pl = osc_params(), pr = osc_params();
    auto bend_l = 0.35f + static_cast<float>(rng.uniform()) * 0.5f;
    auto bend_r = 0.35f + static_cast<float>(rng.uniform()) * 0.5f;

    spec.trajectory.reserve(static_cast<size_t>(n_frames));
    for (int t = 0; t < n_frames; ++t) {
        const float u = n_frames > 1 ? static_cast<float>(t) / static_cast<float>(n_frames - 1) : 0.0f;
        auto angle = [&](const auto& p) {
            return std::clamp(p.mid + p.amp * std::sin(2.0f * 3.14159265f * p.freq * u + p.phase), 0.15f, 1.75f);
        };
        const float al = angle(pl), ar = angle(pr);
        const float bl = std::clamp(al + bend_l, 0.15f, 2.4f);
        const float br = std::clamp(ar + bend_r, 0.15f, 2.4f);
        spec.trajectory.push_back({al, bl, ar, br});
    }
    return spec;
}

void write_synthetic_clips(const std::filesystem::path& root, int signers, int frames, int image_size,
                           uint64_t seed) {
    if (signers < 1) throw SpecError("need at least one signer");
    std::filesystem::create_directories(root / "clips");

    std::ofstream manifest(root / "manifest.json", std::ios::binary);
    if (!manifest) throw IoError("cannot write manifest under " + root.string());
    manifest << "[\n";
    for (int s = 0; s < signers; ++s) {
        char name[32];
        std::snprintf(name, sizeof(name), "signer_%02d", s);
        const std::filesystem::path dir = root / "clips" / name;
        std::filesystem::create_directories(dir);

        const SyntheticSignerSpec spec = make_signer_spec(image_size, frames, seed + static_cast<uint64_t>(s));
        const auto clip = generate_synthetic_dataset(spec, frames);
        for (int t = 0; t < frames; ++t) {
            char stem[32];
            std::snprintf(stem, sizeof(stem), "frame_%06d", t);
            write_png_rgb(dir / (std::string(stem) + ".png"), clip[static_cast<size_t>(t)].frame);
            write_png_labels(dir / ("parsing_" + std::string(stem + 6) + ".png"),
                             clip[static_cast<size_t>(t)].parsing);
            std::ofstream kp(dir / (std::string(stem) + "_keypoints.json"), std::ios::binary);
            kp << openpose_json_from_skeleton(clip[static_cast<size_t>(t)].skeleton);
        }

        manifest << "  {\"org_text\": \"synthetic\", \"clean_text\": \"synthetic\", \"signer_id\": " << s
                 << ", \"start\": 0, \"end\": " << frames << ", \"file\": \"" << name
                 << "\", \"label\": 0, \"height\": " << image_size << ".0, \"width\": " << image_size
                 << ".0, \"fps\": 25.0, \"box\": [0.0, 0.0, 1.0, 1.0], \"url\": \"\"}"
                 << (s + 1 < signers ? ",\n" : "\n");
    }
    manifest << "]\n";
}

}  // namespace sgl
