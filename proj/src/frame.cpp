#include "sgl/frame.hpp"

#include <cmath>
#include <string>

namespace sgl {

Frame Frame::filled(int h, int w, uint8_t r, uint8_t g, uint8_t b) {
    Frame f(h, w);
    for (int64_t i = 0; i < f.pixel_count(); ++i) {
        f.rgb[static_cast<size_t>(i) * 3 + 0] = r;
        f.rgb[static_cast<size_t>(i) * 3 + 1] = g;
        f.rgb[static_cast<size_t>(i) * 3 + 2] = b;
    }
    return f;
}

void ParsingMap::validate() const {
    for (uint8_t l : labels) {
        if (l >= categories)
            throw InvalidLabel("parsing label " + std::to_string(int(l)) + " >= category count " +
                               std::to_string(categories));
    }
}

void validate_pipeline_size(int height, int width, const char* what) {
    auto fail = [&](const std::string& why) {
        throw ValidationError(std::string(what) + ": " + why + " (got " + std::to_string(height) + "x" +
                              std::to_string(width) + ")");
    };
    if (height != width) fail("raster must be square");
    if (height < 64) fail("raster side must be >= 64");
    if ((height & (height - 1)) != 0) fail("raster side must be a power of two");
}

Tensor normalize(const Frame& f) {
    Tensor t({3, f.height, f.width});
    const int64_t plane = f.pixel_count();
    for (int c = 0; c < 3; ++c) {
        float* dst = t.data() + c * plane;
        for (int64_t i = 0; i < plane; ++i)
            dst[i] = static_cast<float>(f.rgb[static_cast<size_t>(i) * 3 + c]) / 127.5f - 1.0f;
    }
    return t;
}

Frame denormalize(const Tensor& t) {
    if (t.ndim() != 3 || t.dim(0) != 3) throw ShapeError("denormalize: expected (3,H,W) tensor, got " + t.shape_str());
    const int h = t.dim(1), w = t.dim(2);
    const int64_t plane = int64_t(h) * w;
    Frame f(h, w);
    for (int c = 0; c < 3; ++c) {
        const float* src = t.data() + c * plane;
        for (int64_t i = 0; i < plane; ++i) {
            float v = src[i];
            if (v < -1.0001f || v > 1.0001f)
                throw RangeError("denormalize: value " + std::to_string(v) + " outside [-1, 1]");
            float scaled = (v + 1.0f) * 127.5f;
            int byte = static_cast<int>(std::lround(scaled));
            if (byte < 0) byte = 0;
            if (byte > 255) byte = 255;
            f.rgb[static_cast<size_t>(i) * 3 + c] = static_cast<uint8_t>(byte);
        }
    }
    return f;
}

Tensor onehot_encode(const ParsingMap& p) {
    p.validate();
    Tensor t({p.categories, p.height, p.width});
    const int64_t plane = int64_t(p.height) * p.width;
    for (int64_t i = 0; i < plane; ++i) t[int64_t(p.labels[static_cast<size_t>(i)]) * plane + i] = 1.0f;
    return t;
}

ParsingMap argmax_decode(const Tensor& logits, int categories_hint) {
    if (logits.ndim() != 3) throw ShapeError("argmax_decode: expected (C,H,W) tensor, got " + logits.shape_str());
    const int c = logits.dim(0), h = logits.dim(1), w = logits.dim(2);
    ParsingMap p(h, w, categories_hint > 0 ? categories_hint : c);
    const int64_t plane = int64_t(h) * w;
    for (int64_t i = 0; i < plane; ++i) {
        int best = 0;
        float best_v = logits[i];
        for (int ch = 1; ch < c; ++ch) {
            float v = logits[ch * plane + i];
            if (v > best_v) {
                best_v = v;
                best = ch;
            }
        }
        p.labels[static_cast<size_t>(i)] = static_cast<uint8_t>(best);
    }
    return p;
}

}  // namespace sgl
