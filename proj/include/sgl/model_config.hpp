#pragma once

#include <cstdint>
#include <string>

#include "sgl/errors.hpp"

namespace sgl {

enum class Arch { dual_encoder, pix2pix };

inline std::string arch_name(Arch a) { return a == Arch::dual_encoder ? "dualencoder" : "pix2pix"; }

inline Arch arch_from_name(const std::string& s) {
    if (s == "dualencoder") return Arch::dual_encoder;
    if (s == "pix2pix") return Arch::pix2pix;
    throw ConfigError("unknown arch '" + s + "' (expected dualencoder|pix2pix)");
}

struct ModelConfig {
    int image_size = 64;
    int categories = 20;  // parsing category count, background = 0
    int base_channels = 64;
    int depth = 0;  // 0 -> log2(image_size) - 2
    int pose_channels = 3;
    uint64_t seed = 0;
    Arch arch = Arch::dual_encoder;
    // Whether the discriminator's real branch sees the predicted or the
    // ground-truth target parsing.
    bool d_real_uses_groundtruth_parsing = false;

    int resolved_depth() const {
        if (depth > 0) return depth;
        int d = 0, s = image_size;
        while (s > 4) {
            s /= 2;
            ++d;
        }
        return d;  // log2(image_size) - 2
    }

    void validate() const {
        if (image_size < 64 || (image_size & (image_size - 1)) != 0)
            throw ConfigError("model.image_size must be a power of two >= 64, got " + std::to_string(image_size));
        if (categories < 2 || categories > 256)
            throw ConfigError("model.categories must be in [2, 256], got " + std::to_string(categories));
        if (base_channels < 1) throw ConfigError("model.base_channels must be >= 1");
        if (pose_channels != 3) throw ConfigError("model.pose_channels must be 3");
        const int d = resolved_depth();
        if (d < 3) throw ConfigError("model depth must be >= 3, got " + std::to_string(d));
        if (image_size >> d < 1) throw ConfigError("model depth too large for image size");
    }
};

}  // namespace sgl
