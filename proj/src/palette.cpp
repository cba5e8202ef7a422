#include "sgl/palette.hpp"

#include <string>

namespace sgl {

const std::array<Rgb, kParsingCategories>& parsing_palette() {
    static const std::array<Rgb, kParsingCategories> table = {{
        {0, 0, 0},      // 0 background
        {255, 0, 0},    // 1
        {255, 85, 0},   // 2
        {255, 170, 0},  // 3
        {255, 255, 0},  // 4
        {170, 255, 0},  // 5
        {85, 255, 0},   // 6
        {0, 255, 0},    // 7
        {0, 255, 85},   // 8
        {0, 255, 170},  // 9
        {0, 255, 255},  // 10
        {0, 170, 255},  // 11
        {0, 85, 255},   // 12
        {0, 0, 255},    // 13
        {85, 0, 255},   // 14
        {170, 0, 255},  // 15
        {255, 0, 255},  // 16
        {255, 0, 170},  // 17
        {255, 0, 85},   // 18
        {85, 85, 85},   // 19
    }};
    return table;
}

Frame palette_colorize(const ParsingMap& p) {
    p.validate();
    if (p.categories > kParsingCategories)
        throw InvalidLabel("palette has " + std::to_string(kParsingCategories) + " entries, map declares " +
                           std::to_string(p.categories) + " categories");
    const auto& pal = parsing_palette();
    Frame f(p.height, p.width);
    for (int64_t i = 0; i < f.pixel_count(); ++i) {
        const Rgb& c = pal[p.labels[static_cast<size_t>(i)]];
        f.rgb[static_cast<size_t>(i) * 3 + 0] = c.r;
        f.rgb[static_cast<size_t>(i) * 3 + 1] = c.g;
        f.rgb[static_cast<size_t>(i) * 3 + 2] = c.b;
    }
    return f;
}

ParsingMap palette_decolorize(const Frame& f, int categories) {
    const auto& pal = parsing_palette();
    ParsingMap p(f.height, f.width, categories);
    for (int64_t i = 0; i < f.pixel_count(); ++i) {
        const uint8_t r = f.rgb[static_cast<size_t>(i) * 3 + 0];
        const uint8_t g = f.rgb[static_cast<size_t>(i) * 3 + 1];
        const uint8_t b = f.rgb[static_cast<size_t>(i) * 3 + 2];
        int id = -1;
        for (int k = 0; k < categories && k < kParsingCategories; ++k) {
            if (pal[static_cast<size_t>(k)].r == r && pal[static_cast<size_t>(k)].g == g &&
                pal[static_cast<size_t>(k)].b == b) {
                id = k;
                break;
            }
        }
        if (id < 0)
            throw InvalidLabel("pixel color (" + std::to_string(r) + "," + std::to_string(g) + "," +
                               std::to_string(b) + ") is not a palette entry");
        p.labels[static_cast<size_t>(i)] = static_cast<uint8_t>(id);
    }
    return p;
}

}  // namespace sgl
