#pragma once

#include <cstdint>
#include <vector>

#include "sgl/errors.hpp"
#include "sgl/tensor.hpp"

namespace sgl {

// 8-bit sRGB raster, interleaved H*W*3. Pipeline frames are square,
// power-of-two and >= 64 px (checked by validate_pipeline_size); metric and
// test code may build smaller rasters freely.
struct Frame {
    int height = 0;
    int width = 0;
    std::vector<uint8_t> rgb;

    Frame() = default;
    Frame(int h, int w) : height(h), width(w), rgb(static_cast<size_t>(h) * w * 3, 0) {}
    static Frame filled(int h, int w, uint8_t r, uint8_t g, uint8_t b);

    uint8_t& at(int y, int x, int c) { return rgb[(static_cast<size_t>(y) * width + x) * 3 + c]; }
    uint8_t at(int y, int x, int c) const { return rgb[(static_cast<size_t>(y) * width + x) * 3 + c]; }
    int64_t pixel_count() const { return static_cast<int64_t>(height) * width; }
    bool same_size(const Frame& o) const { return height == o.height && width == o.width; }
};

// Per-pixel limb-category labels, ids in [0, categories); 0 is background.
struct ParsingMap {
    int height = 0;
    int width = 0;
    int categories = 20;
    std::vector<uint8_t> labels;

    ParsingMap() = default;
    ParsingMap(int h, int w, int cats = 20)
        : height(h), width(w), categories(cats), labels(static_cast<size_t>(h) * w, 0) {}

    uint8_t& at(int y, int x) { return labels[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int y, int x) const { return labels[static_cast<size_t>(y) * width + x]; }
    // Throws InvalidLabel if any label >= categories.
    void validate() const;
};

// Throws ValidationError unless size is square, a power of two and >= 64.
void validate_pipeline_size(int height, int width, const char* what);

// [0,255] byte -> [-1,1] float, planar (3,H,W).
Tensor normalize(const Frame& f);
// Exact inverse up to 8-bit rounding; values outside [-1,1] (beyond a small
// float tolerance) raise RangeError.
Frame denormalize(const Tensor& t);

// (categories, H, W) indicator stack; exactly one 1 per pixel column.
Tensor onehot_encode(const ParsingMap& p);
// Per-pixel argmax over channel logits (ties resolve to the lowest id).
ParsingMap argmax_decode(const Tensor& logits, int categories_hint = 0);

}  // namespace sgl
