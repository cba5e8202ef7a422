#include "sgl/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>

namespace sgl {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

struct PngReadState {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReadState() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriteState {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriteState() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

std::vector<uint8_t> read_png_any(const std::filesystem::path& path, int want_channels, int& width, int& height) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) throw IoError("cannot open PNG for reading: " + path.string());

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
        throw FormatError("not a PNG file: " + path.string());

    PngReadState st;
    st.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!st.png) throw IoError("png_create_read_struct failed");
    st.info = png_create_info_struct(st.png);
    if (!st.info) throw IoError("png_create_info_struct failed");
    if (setjmp(png_jmpbuf(st.png))) throw FormatError("PNG decode error: " + path.string());

    png_init_io(st.png, fp.get());
    png_set_sig_bytes(st.png, 8);
    png_read_info(st.png, st.info);

    width = static_cast<int>(png_get_image_width(st.png, st.info));
    height = static_cast<int>(png_get_image_height(st.png, st.info));
    const png_byte color = png_get_color_type(st.png, st.info);
    const png_byte depth = png_get_bit_depth(st.png, st.info);

    if (depth == 16) png_set_strip_16(st.png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(st.png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(st.png);
    if (png_get_valid(st.png, st.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(st.png);

    if (want_channels == 3) {
        if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) png_set_gray_to_rgb(st.png);
        png_set_strip_alpha(st.png);
    } else {
        if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA || color == PNG_COLOR_TYPE_PALETTE)
            png_set_rgb_to_gray_fixed(st.png, 1, -1, -1);
        png_set_strip_alpha(st.png);
    }
    png_read_update_info(st.png, st.info);

    const size_t rowbytes = png_get_rowbytes(st.png, st.info);
    if (rowbytes != static_cast<size_t>(width) * want_channels)
        throw FormatError("unexpected PNG row size in " + path.string());

    std::vector<uint8_t> data(static_cast<size_t>(height) * rowbytes);
    std::vector<png_bytep> rows(static_cast<size_t>(height));
    for (int y = 0; y < height; ++y) rows[static_cast<size_t>(y)] = data.data() + static_cast<size_t>(y) * rowbytes;
    png_read_image(st.png, rows.data());
    png_read_end(st.png, nullptr);
    return data;
}

void write_png_any(const std::filesystem::path& path, int width, int height, int channels, const uint8_t* data) {
    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) throw IoError("cannot open PNG for writing: " + path.string());

    PngWriteState st;
    st.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!st.png) throw IoError("png_create_write_struct failed");
    st.info = png_create_info_struct(st.png);
    if (!st.info) throw IoError("png_create_info_struct failed");
    if (setjmp(png_jmpbuf(st.png))) throw IoError("PNG encode error: " + path.string());

    png_init_io(st.png, fp.get());
    // Fixed encoder settings keep byte output reproducible.
    png_set_compression_level(st.png, 6);
    png_set_filter(st.png, 0, PNG_FILTER_NONE);
    png_set_IHDR(st.png, st.info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(st.png, st.info);

    std::vector<png_bytep> rows(static_cast<size_t>(height));
    const size_t rowbytes = static_cast<size_t>(width) * channels;
    for (int y = 0; y < height; ++y)
        rows[static_cast<size_t>(y)] = const_cast<png_bytep>(data + static_cast<size_t>(y) * rowbytes);
    png_write_image(st.png, rows.data());
    png_write_end(st.png, nullptr);
}

}  // namespace

Frame read_png_rgb(const std::filesystem::path& path) {
    int w = 0, h = 0;
    auto bytes = read_png_any(path, 3, w, h);
    Frame f(h, w);
    f.rgb = std::move(bytes);
    return f;
}

void write_png_rgb(const std::filesystem::path& path, const Frame& frame) {
    write_png_any(path, frame.width, frame.height, 3, frame.rgb.data());
}

void write_png_rgb_raw(const std::filesystem::path& path, int width, int height, const uint8_t* rgb) {
    write_png_any(path, width, height, 3, rgb);
}

ParsingMap read_png_labels(const std::filesystem::path& path, int categories) {
    int w = 0, h = 0;
    auto bytes = read_png_any(path, 1, w, h);
    ParsingMap p(h, w, categories);
    p.labels = std::move(bytes);
    p.validate();
    return p;
}

void write_png_labels(const std::filesystem::path& path, const ParsingMap& map) {
    write_png_any(path, map.width, map.height, 1, map.labels.data());
}

}  // namespace sgl
