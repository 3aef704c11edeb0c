#include "ssimtk/io/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include "ssimtk/color.hpp"

namespace ssimtk::io {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f)
            std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

} // namespace

PngImage load_png(const std::string& path) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file)
        fail(path, "cannot open file");

    png_byte header[8];
    if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0)
        fail(path, "not a PNG file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        fail(path, "libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail(path, "libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "PNG decode error");
    }

    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (bit_depth == 16) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "16-bit PNG inputs are not supported; provide an 8-bit file");
    }

    // Normalize everything to 8-bit gray or 8-bit RGB.
    if (color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    const bool is_gray = channels == 1;
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "unsupported channel layout after normalization");
    }

    PngImage out;
    out.width = static_cast<int>(width);
    out.height = static_cast<int>(height);
    out.is_gray = is_gray;
    std::vector<std::uint8_t>& pixels = is_gray ? out.gray : out.rgb;
    pixels.resize(static_cast<std::size_t>(width) * height * channels);

    std::vector<png_bytep> rows(height);
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (png_uint_32 y = 0; y < height; ++y)
        rows[y] = pixels.data() + y * stride;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return out;
}

GrayImage to_gray_image(const PngImage& png) {
    if (!png.is_gray)
        throw std::invalid_argument("to_gray_image: PNG holds color data");
    GrayImage img(png.width, png.height);
    auto data = img.data();
    for (std::size_t i = 0; i < png.gray.size(); ++i)
        data[i] = png.gray[i] / 255.0;
    return img;
}

RgbImage to_rgb_image(const PngImage& png) {
    RgbImage img(png.width, png.height);
    if (png.is_gray) {
        for (std::size_t i = 0; i < png.gray.size(); ++i) {
            const double v = png.gray[i] / 255.0;
            img.r[i] = v;
            img.g[i] = v;
            img.b[i] = v;
        }
        return img;
    }
    for (std::size_t i = 0; i < img.size(); ++i) {
        img.r[i] = png.rgb[3 * i] / 255.0;
        img.g[i] = png.rgb[3 * i + 1] / 255.0;
        img.b[i] = png.rgb[3 * i + 2] / 255.0;
    }
    return img;
}

namespace {

void write_png(const std::string& path, int width, int height, int color_type,
               const std::vector<std::uint8_t>& pixels) {
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file)
        fail(path, "cannot open file for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        fail(path, "libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        fail(path, "libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "PNG encode error");
    }

    png_init_io(png, file.get());
    // Fixed settings; output must be byte-identical across runs.
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    const int channels = color_type == PNG_COLOR_TYPE_RGB ? 3 : 1;
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y)
        rows[y] = const_cast<png_bytep>(pixels.data() + y * stride);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

std::uint8_t quantize_byte(double v) {
    const double q = std::floor(v * 255.0 + 0.5);
    return static_cast<std::uint8_t>(q < 0.0 ? 0.0 : (q > 255.0 ? 255.0 : q));
}

} // namespace

void write_gray_png(const std::string& path, const GrayImage& img) {
    std::vector<std::uint8_t> pixels(img.size());
    const auto data = img.data();
    for (std::size_t i = 0; i < pixels.size(); ++i)
        pixels[i] = quantize_byte(data[i]);
    write_png(path, img.width(), img.height(), PNG_COLOR_TYPE_GRAY, pixels);
}

void write_rgb_png(const std::string& path, const Heatmap& map) {
    std::vector<std::uint8_t> pixels(map.size() * 3);
    for (std::size_t i = 0; i < map.size(); ++i) {
        pixels[3 * i] = quantize_byte(map.r[i]);
        pixels[3 * i + 1] = quantize_byte(map.g[i]);
        pixels[3 * i + 2] = quantize_byte(map.b[i]);
    }
    write_png(path, map.width, map.height, PNG_COLOR_TYPE_RGB, pixels);
}

} // namespace ssimtk::io
