#pragma once

#include <array>
#include <cstdint>

#include "sgl/frame.hpp"

namespace sgl {

// Fixed 20-entry category palette: id 0 (background) is black, ids 1..19 are
// evenly spaced around the RGB hexcone plus one gray. Committed as
// docs/palette.json; the file and this table are cross-checked by tests.
inline constexpr int kParsingCategories = 20;

struct Rgb {
    uint8_t r, g, b;
};

const std::array<Rgb, kParsingCategories>& parsing_palette();

// Maps each label through the palette; injective over label ids.
Frame palette_colorize(const ParsingMap& p);
// Exact inverse via palette lookup; unknown colors raise InvalidLabel.
ParsingMap palette_decolorize(const Frame& f, int categories = kParsingCategories);

}  // namespace sgl
