#include "sgl/pose.hpp"

#include <algorithm>
#include <cmath>

#include "sgl/palette.hpp"

namespace sgl {

const std::vector<std::pair<int, int>>& body25_limbs() {
    static const std::vector<std::pair<int, int>> limbs = {
        {1, 8},   {1, 2},   {1, 5},   {2, 3},   {3, 4},   {5, 6},   {6, 7},   {8, 9},
        {9, 10},  {10, 11}, {8, 12},  {12, 13}, {13, 14}, {1, 0},   {0, 15},  {15, 17},
        {0, 16},  {16, 18}, {14, 19}, {19, 20}, {14, 21}, {11, 22}, {22, 23}, {11, 24},
    };
    return limbs;
}

const std::vector<std::pair<int, int>>& hand_limbs() {
    static const std::vector<std::pair<int, int>> limbs = [] {
        std::vector<std::pair<int, int>> v;
        for (int finger = 0; finger < 5; ++finger) {
            int base = 1 + finger * 4;
            v.emplace_back(0, base);
            v.emplace_back(base, base + 1);
            v.emplace_back(base + 1, base + 2);
            v.emplace_back(base + 2, base + 3);
        }
        return v;
    }();
    return limbs;
}

namespace {

struct Canvas {
    int size;
    Tensor* t;
    void put(int x, int y, const Rgb& color) {
        if (x < 0 || y < 0 || x >= size || y >= size) return;
        const int64_t plane = int64_t(size) * size;
        const int64_t i = int64_t(y) * size + x;
        t->data()[i] = static_cast<float>(color.r) / 127.5f - 1.0f;
        t->data()[plane + i] = static_cast<float>(color.g) / 127.5f - 1.0f;
        t->data()[2 * plane + i] = static_cast<float>(color.b) / 127.5f - 1.0f;
    }
    void line(int x0, int y0, int x1, int y1, const Rgb& color) {
        int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
        int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
        int err = dx + dy;
        while (true) {
            put(x0, y0, color);
            if (x0 == x1 && y0 == y1) break;
            int e2 = 2 * err;
            if (e2 >= dy) {
                err += dy;
                x0 += sx;
            }
            if (e2 <= dx) {
                err += dx;
                y0 += sy;
            }
        }
    }
    void disc(int x, int y, const Rgb& color) {
        put(x, y, color);
        put(x + 1, y, color);
        put(x - 1, y, color);
        put(x, y + 1, color);
        put(x, y - 1, color);
    }
};

// Limb colors cycle through the non-background palette entries.
Rgb limb_color(int limb_index) {
    const auto& pal = parsing_palette();
    return pal[1 + static_cast<size_t>(limb_index % (kParsingCategories - 1))];
}

struct ScaledJoint {
    int x = 0, y = 0;
    bool present = false;
    bool on_drawn_limb = false;
};

template <size_t N>
void scale_joints(const std::array<Keypoint, N>& src, int size, int canvas_h, int canvas_w,
                  std::vector<ScaledJoint>& out) {
    const double sx = canvas_w > 0 ? double(size) / canvas_w : 1.0;
    const double sy = canvas_h > 0 ? double(size) / canvas_h : 1.0;
    for (const Keypoint& k : src) {
        ScaledJoint j;
        j.present = k.present();
        if (j.present) {
            j.x = std::clamp(static_cast<int>(std::lround(k.x * sx)), 0, size - 1);
            j.y = std::clamp(static_cast<int>(std::lround(k.y * sy)), 0, size - 1);
        }
        out.push_back(j);
    }
}

void draw_group(Canvas& canvas, std::vector<ScaledJoint>& joints, const std::vector<std::pair<int, int>>& limbs,
                int color_offset) {
    for (size_t li = 0; li < limbs.size(); ++li) {
        ScaledJoint& a = joints[static_cast<size_t>(limbs[li].first)];
        ScaledJoint& b = joints[static_cast<size_t>(limbs[li].second)];
        if (!a.present || !b.present) continue;
        canvas.line(a.x, a.y, b.x, b.y, limb_color(color_offset + static_cast<int>(li)));
        a.on_drawn_limb = b.on_drawn_limb = true;
    }
    // Joints with no drawn limb still get a small marker.
    for (size_t ji = 0; ji < joints.size(); ++ji) {
        const ScaledJoint& j = joints[ji];
        if (j.present && !j.on_drawn_limb) canvas.disc(j.x, j.y, limb_color(color_offset + static_cast<int>(ji)));
    }
}

}  // namespace

Tensor rasterize_pose(const PoseSkeleton& skeleton, int size) {
    validate_pipeline_size(size, size, "rasterize_pose");
    Tensor t = Tensor::full({3, size, size}, -1.0f);
    Canvas canvas{size, &t};

    std::vector<ScaledJoint> body, left, right;
    scale_joints(skeleton.body, size, skeleton.canvas_h, skeleton.canvas_w, body);
    scale_joints(skeleton.left_hand, size, skeleton.canvas_h, skeleton.canvas_w, left);
    scale_joints(skeleton.right_hand, size, skeleton.canvas_h, skeleton.canvas_w, right);

    draw_group(canvas, body, body25_limbs(), 0);
    draw_group(canvas, left, hand_limbs(), 5);
    draw_group(canvas, right, hand_limbs(), 11);
    return t;
}

}  // namespace sgl
