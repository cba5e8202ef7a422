#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "sgl/frame.hpp"

namespace sgl {

// 8-bit RGB PNG. Gray and RGBA sources are expanded/flattened on read.
Frame read_png_rgb(const std::filesystem::path& path);
void write_png_rgb(const std::filesystem::path& path, const Frame& frame);
void write_png_rgb_raw(const std::filesystem::path& path, int width, int height, const uint8_t* rgb);

// Single-channel 8-bit PNG of label ids (the on-disk ParsingMap format).
ParsingMap read_png_labels(const std::filesystem::path& path, int categories = 20);
void write_png_labels(const std::filesystem::path& path, const ParsingMap& map);

}  // namespace sgl
